#pragma once

#include <functional>
#include <map>
#include <random>
#include <unordered_map>

#include "socle/combinat.hpp"
#include "socle/groebner.hpp"
#include "socle/hilbert.hpp"
#include "socle/linalg.hpp"
#include "socle/resolution.hpp"

// Test-only oracles, independent of the engine paths they check.

namespace socle::testing {

/// Degreewise membership oracle: f in I iff f's coefficient vector lies in
/// span{m * g : g in gens, deg(m g) = deg f}. Dense linear algebra only; no
/// Groebner machinery.
inline bool member_oracle(const std::vector<Poly>& gens, const Poly& f) {
  if (f.is_zero()) return true;
  if (!f.is_homogeneous()) throw std::invalid_argument("oracle wants homogeneous input");
  const RingPtr ring = f.ring();
  const Field& field = ring->field();
  const int d = f.degree();
  const auto mons = monomials_of_degree(ring->nvars(), d);
  std::unordered_map<Monomial, int, MonomialHash> index;
  for (size_t k = 0; k < mons.size(); ++k) index[mons[k]] = static_cast<int>(k);
  auto row = [&](const Poly& p) {
    std::vector<Scalar> r(mons.size(), Scalar::zero(field));
    for (const auto& t : p.terms()) r[static_cast<size_t>(index.at(t.m))] = t.c;
    return r;
  };
  std::vector<std::vector<Scalar>> span;
  for (const auto& g : gens) {
    if (g.is_zero() || g.degree() > d) continue;
    for (const auto& m : monomials_of_degree(ring->nvars(), d - g.degree()))
      span.push_back(row(g.times_monomial(m, Scalar::one(field))));
  }
  return linalg::in_span(field, span, row(f), static_cast<int>(mons.size()));
}

/// Hilbert function oracle by brute-force span dimension.
inline long long hf_oracle(const std::vector<Poly>& gens, int d) {
  const RingPtr ring = gens.at(0).ring();
  const Field& field = ring->field();
  const auto mons = monomials_of_degree(ring->nvars(), d);
  std::unordered_map<Monomial, int, MonomialHash> index;
  for (size_t k = 0; k < mons.size(); ++k) index[mons[k]] = static_cast<int>(k);
  std::vector<std::vector<Scalar>> span;
  for (const auto& g : gens) {
    if (g.is_zero() || g.degree() > d) continue;
    for (const auto& m : monomials_of_degree(ring->nvars(), d - g.degree())) {
      std::vector<Scalar> r(mons.size(), Scalar::zero(field));
      const Poly shifted = g.times_monomial(m, Scalar::one(field));
      for (const auto& t : shifted.terms()) r[static_cast<size_t>(index.at(t.m))] = t.c;
      span.push_back(std::move(r));
    }
  }
  return static_cast<long long>(mons.size()) -
         linalg::rank_of(field, span, static_cast<int>(mons.size()));
}

/// Graded Betti numbers of R = S/I through Koszul-complex homology:
/// beta_{i,j} = dim H_i(K ⊗ R)_j. Entirely independent of the syzygy-based
/// resolution pipeline (the two must agree).
class KoszulHomologyOracle {
 public:
  explicit KoszulHomologyOracle(const Ideal& I) : ideal_(I), ring_(I.ring()) {
    leads_ = ideal_.initial_gens();
  }

  long long betti(int i, int j) {
    // H_i at degree j: ker(d_i)_j / im(d_{i+1})_j
    const auto rows_i = koszul_basis(i, j);
    if (rows_i.empty()) return 0;
    const auto mat_di = differential(i, j);
    const long long ker = static_cast<long long>(rows_i.size()) -
                          linalg::rank_of(field(), mat_di.first, mat_di.second);
    const auto mat_dnext = differential(i + 1, j);
    const long long im = linalg::rank_of(field(), mat_dnext.first, mat_dnext.second);
    return ker - im;
  }

 private:
  const Field& field() const { return ring_->field(); }

  std::vector<Monomial> standard_basis(int d) const {
    std::vector<Monomial> out;
    if (d < 0) return out;
    for (const auto& m : monomials_of_degree(ring_->nvars(), d)) {
      bool red = false;
      for (const auto& l : leads_)
        if (l.divides(m)) {
          red = true;
          break;
        }
      if (!red) out.push_back(m);
    }
    return out;
  }

  // basis of (Λ^i ⊗ R)_j: pairs (subset of size i, standard monomial of degree j - i)
  std::vector<std::pair<std::vector<int>, Monomial>> koszul_basis(int i, int j) const {
    std::vector<std::pair<std::vector<int>, Monomial>> out;
    if (i < 0 || j - i < 0) return out;
    std::vector<int> subset;
    const auto mons = standard_basis(j - i);
    if (mons.empty()) return out;
    std::function<void(int)> rec = [&](int from) {
      if (static_cast<int>(subset.size()) == i) {
        for (const auto& m : mons) out.push_back({subset, m});
        return;
      }
      for (int v = from; v < ring_->nvars(); ++v) {
        subset.push_back(v);
        rec(v + 1);
        subset.pop_back();
      }
    };
    rec(0);
    return out;
  }

  // matrix of d_i: (Λ^i ⊗ R)_j -> (Λ^{i-1} ⊗ R)_j, rows = source basis
  std::pair<std::vector<std::vector<Scalar>>, int> differential(int i, int j) {
    const auto src = koszul_basis(i, j);
    const auto dst = koszul_basis(i - 1, j);
    struct KeyLess {
      bool operator()(const std::pair<std::vector<int>, Monomial>& a,
                      const std::pair<std::vector<int>, Monomial>& b) const {
        if (a.first != b.first) return a.first < b.first;
        if (a.second.deg != b.second.deg) return a.second.deg < b.second.deg;
        return a.second.e < b.second.e;
      }
    };
    std::map<std::pair<std::vector<int>, Monomial>, int, KeyLess> index;
    for (size_t k = 0; k < dst.size(); ++k) index[dst[k]] = static_cast<int>(k);
    std::vector<std::vector<Scalar>> rows(
        src.size(), std::vector<Scalar>(dst.size(), Scalar::zero(field())));
    const auto& gb = ideal_.groebner();
    for (size_t s = 0; s < src.size(); ++s) {
      const auto& [subset, m] = src[s];
      for (size_t p = 0; p < subset.size(); ++p) {
        std::vector<int> rest;
        for (size_t q = 0; q < subset.size(); ++q)
          if (q != p) rest.push_back(subset[q]);
        const Poly img = normal_form(
            Poly::monomial(ring_, m * Monomial::var(subset[p]), Scalar::one(field())), gb);
        for (const auto& t : img.terms()) {
          auto it = index.find({rest, t.m});
          if (it == index.end()) throw std::logic_error("koszul oracle basis mismatch");
          rows[s][static_cast<size_t>(it->second)] += p % 2 == 0 ? t.c : -t.c;
        }
      }
    }
    return {std::move(rows), static_cast<int>(dst.size())};
  }

  Ideal ideal_;
  RingPtr ring_;
  std::vector<Monomial> leads_;
};

}  // namespace socle::testing
