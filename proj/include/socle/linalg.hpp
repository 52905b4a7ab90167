#pragma once

#include <cstdint>
#include <vector>

#include "socle/field.hpp"

namespace socle {
namespace linalg {

/// Arithmetic policy for GF(p), p < 2^31, with Barrett reduction.
struct GFpOps {
  using Elt = uint32_t;
  uint64_t p = 2;
  uint64_t magic = 0;  // floor(2^64 / p)

  explicit GFpOps(uint64_t prime) : p(prime) {
    magic = static_cast<uint64_t>((static_cast<__uint128_t>(1) << 64) / p);
  }
  Elt reduce(uint64_t t) const {
    uint64_t q = static_cast<uint64_t>((static_cast<__uint128_t>(t) * magic) >> 64);
    uint64_t r = t - q * p;
    while (r >= p) r -= p;
    return static_cast<Elt>(r);
  }
  Elt zero() const { return 0; }
  Elt one() const { return 1; }
  bool is_zero(Elt a) const { return a == 0; }
  Elt add(Elt a, Elt b) const {
    uint64_t s = static_cast<uint64_t>(a) + b;
    return s >= p ? static_cast<Elt>(s - p) : static_cast<Elt>(s);
  }
  Elt sub(Elt a, Elt b) const { return a >= b ? a - b : static_cast<Elt>(a + p - b); }
  Elt mul(Elt a, Elt b) const { return reduce(static_cast<uint64_t>(a) * b); }
  Elt neg(Elt a) const { return a == 0 ? 0 : static_cast<Elt>(p - a); }
  Elt inv(Elt a) const {
    if (a == 0) throw DivisionByZero();
    int64_t t = 0, newt = 1;
    int64_t r = static_cast<int64_t>(p), newr = static_cast<int64_t>(a);
    while (newr != 0) {
      int64_t q = r / newr;
      int64_t tmp = t - q * newt;
      t = newt;
      newt = tmp;
      tmp = r - q * newr;
      r = newr;
      newr = tmp;
    }
    if (t < 0) t += static_cast<int64_t>(p);
    return static_cast<Elt>(t);
  }
  // dst -= m * src, fused
  void row_submul(Elt* dst, const Elt* src, Elt m, size_t len) const {
    const uint64_t mm = p - m;  // subtract = add (p - m) * src
    for (size_t j = 0; j < len; ++j)
      dst[j] = reduce(static_cast<uint64_t>(dst[j]) + mm * src[j]);
  }
  Elt from_scalar(const Scalar& s) const { return static_cast<Elt>(s.residue()); }
  Scalar to_scalar(const Field& f, Elt e) const { return Scalar::of_int(f, static_cast<long long>(e)); }
};

/// Arithmetic policy over any exact Field (used for Q and large primes).
struct ScalarOps {
  using Elt = Scalar;
  Field field;

  explicit ScalarOps(const Field& f) : field(f) {}
  Elt zero() const { return Scalar::zero(field); }
  Elt one() const { return Scalar::one(field); }
  bool is_zero(const Elt& a) const { return a.is_zero(); }
  Elt add(const Elt& a, const Elt& b) const { return a + b; }
  Elt sub(const Elt& a, const Elt& b) const { return a - b; }
  Elt mul(const Elt& a, const Elt& b) const { return a * b; }
  Elt neg(const Elt& a) const { return -a; }
  Elt inv(const Elt& a) const { return a.inv(); }
  // m by value: dst may alias the entry m was read from
  void row_submul(Elt* dst, const Elt* src, Elt m, size_t len) const {
    for (size_t j = 0; j < len; ++j)
      if (!src[j].is_zero()) dst[j] -= m * src[j];
  }
  Elt from_scalar(const Scalar& s) const { return s; }
  Scalar to_scalar(const Field&, const Elt& e) const { return e; }
};

/// Dense row-major matrix over a policy.
template <class Ops>
struct Mat {
  using Elt = typename Ops::Elt;
  Ops ops;
  int nr = 0, nc = 0;
  std::vector<Elt> a;

  Mat(Ops o, int rows, int cols) : ops(o), nr(rows), nc(cols), a(static_cast<size_t>(rows) * cols, o.zero()) {}
  Elt* row(int r) { return a.data() + static_cast<size_t>(r) * nc; }
  const Elt* row(int r) const { return a.data() + static_cast<size_t>(r) * nc; }
  Elt& at(int r, int c) { return a[static_cast<size_t>(r) * nc + c]; }
  const Elt& at(int r, int c) const { return a[static_cast<size_t>(r) * nc + c]; }
};

/// In-place reduction to row echelon form; returns pivot columns in order.
/// Deterministic: scans columns left to right, picks the first unprocessed
/// row with a nonzero entry.
template <class Ops>
std::vector<int> row_echelon(Mat<Ops>& M) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < M.nc && r < M.nr; ++c) {
    int sel = -1;
    for (int i = r; i < M.nr; ++i)
      if (!M.ops.is_zero(M.at(i, c))) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = c; j < M.nc; ++j) std::swap(M.at(r, j), M.at(sel, j));
    // normalize pivot row
    auto piv_inv = M.ops.inv(M.at(r, c));
    for (int j = c; j < M.nc; ++j) M.at(r, j) = M.ops.mul(M.at(r, j), piv_inv);
    for (int i = r + 1; i < M.nr; ++i) {
      auto m = M.at(i, c);
      if (M.ops.is_zero(m)) continue;
      M.ops.row_submul(M.row(i) + c, M.row(r) + c, m, static_cast<size_t>(M.nc - c));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class Ops>
int rank(Mat<Ops> M) {
  return static_cast<int>(row_echelon(M).size());
}

/// Basis of the right kernel {v : M v = 0}; one vector per free column,
/// deterministic order.
template <class Ops>
std::vector<std::vector<typename Ops::Elt>> kernel(Mat<Ops> M) {
  const auto pivots = row_echelon(M);
  // back-substitute to reduced form
  for (int k = static_cast<int>(pivots.size()) - 1; k >= 0; --k) {
    const int c = pivots[static_cast<size_t>(k)];
    for (int i = 0; i < k; ++i) {
      auto m = M.at(i, c);
      if (M.ops.is_zero(m)) continue;
      M.ops.row_submul(M.row(i) + c, M.row(k) + c, m, static_cast<size_t>(M.nc - c));
    }
  }
  std::vector<bool> is_pivot(static_cast<size_t>(M.nc), false);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<std::vector<typename Ops::Elt>> basis;
  for (int c = 0; c < M.nc; ++c) {
    if (is_pivot[static_cast<size_t>(c)]) continue;
    std::vector<typename Ops::Elt> v(static_cast<size_t>(M.nc), M.ops.zero());
    v[static_cast<size_t>(c)] = M.ops.one();
    for (size_t k = 0; k < pivots.size(); ++k)
      v[static_cast<size_t>(pivots[k])] = M.ops.neg(M.at(static_cast<int>(k), c));
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Incrementally maintained row span (row echelon, not reduced); used for
/// rank growth tests and for picking deterministic complement bases.
template <class Ops>
class RowSpan {
 public:
  using Elt = typename Ops::Elt;
  RowSpan(Ops ops, int width) : ops_(ops), width_(width) {}

  int dim() const { return static_cast<int>(rows_.size()); }

  /// Reduces v against the span; returns the residual (empty if v is in the span).
  std::vector<Elt> residual(std::vector<Elt> v) const {
    for (size_t k = 0; k < rows_.size(); ++k) {
      const int p = pivots_[k];
      if (ops_.is_zero(v[static_cast<size_t>(p)])) continue;
      ops_.row_submul(v.data() + p, rows_[k].data() + p, v[static_cast<size_t>(p)],
                      static_cast<size_t>(width_ - p));
    }
    for (const auto& x : v)
      if (!ops_.is_zero(x)) return v;
    return {};
  }

  bool contains(std::vector<Elt> v) const { return residual(std::move(v)).empty(); }

  /// Adds v to the span; returns true iff the dimension grew.
  bool add(std::vector<Elt> v) {
    auto r = residual(std::move(v));
    if (r.empty()) return false;
    int p = 0;
    while (ops_.is_zero(r[static_cast<size_t>(p)])) ++p;
    auto pinv = ops_.inv(r[static_cast<size_t>(p)]);
    for (int j = p; j < width_; ++j) r[static_cast<size_t>(j)] = ops_.mul(r[static_cast<size_t>(j)], pinv);
    // keep rows sorted by pivot for cheap reduction
    size_t pos = 0;
    while (pos < rows_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(r));
    pivots_.insert(pivots_.begin() + static_cast<long>(pos), p);
    return true;
  }

 private:
  Ops ops_;
  int width_;
  std::vector<std::vector<Elt>> rows_;
  std::vector<int> pivots_;
};

/// True when the field has a dense fast path.
inline bool has_fast_path(const Field& f) {
  return f.kind() == FieldKind::PrimeField && f.modulus() < (1ull << 31);
}

// --- Scalar-boundary conveniences (internally dispatch to the fast path) ---

/// Rank of the matrix whose rows are given.
int rank_of(const Field& f, const std::vector<std::vector<Scalar>>& rows, int width);

/// Basis of {v : sum_j rows[i][j] v_j = 0 for all i}.
std::vector<std::vector<Scalar>> kernel_of(const Field& f,
                                           const std::vector<std::vector<Scalar>>& rows, int width);

/// Indices of candidates that enlarge span(spanners ∪ earlier picks), scanned
/// in order; the chosen candidates complete the spanners to a basis of the
/// joint span.
std::vector<int> complement_indices(const Field& f, const std::vector<std::vector<Scalar>>& spanners,
                                    const std::vector<std::vector<Scalar>>& candidates, int width);

/// Does v lie in the row span?
bool in_span(const Field& f, const std::vector<std::vector<Scalar>>& rows,
             const std::vector<Scalar>& v, int width);

/// Incremental row span over Scalar rows for a runtime field.
class ScalarSpan {
 public:
  ScalarSpan(const Field& f, int width);
  ScalarSpan(const Field& f, const std::vector<std::vector<Scalar>>& rows, int width);
  int dim() const;
  bool contains(const std::vector<Scalar>& v) const;
  bool add(const std::vector<Scalar>& v);

 private:
  Field field_;
  std::variant<RowSpan<GFpOps>, RowSpan<ScalarOps>> span_;
};

}  // namespace linalg
}  // namespace socle
