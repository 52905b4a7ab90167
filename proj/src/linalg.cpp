#include "socle/linalg.hpp"

namespace socle {
namespace linalg {

namespace {

template <class Ops>
Mat<Ops> to_mat(const Ops& ops, const std::vector<std::vector<Scalar>>& rows, int width) {
  Mat<Ops> m(ops, static_cast<int>(rows.size()), width);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < width; ++j)
      if (!rows[i][static_cast<size_t>(j)].is_zero())
        m.at(static_cast<int>(i), j) = ops.from_scalar(rows[i][static_cast<size_t>(j)]);
  return m;
}

template <class Ops>
std::vector<typename Ops::Elt> to_row(const Ops& ops, const std::vector<Scalar>& v) {
  std::vector<typename Ops::Elt> r;
  r.reserve(v.size());
  for (const auto& s : v) r.push_back(ops.from_scalar(s));
  return r;
}

template <class Ops>
std::vector<int> complement_impl(const Ops& ops, const std::vector<std::vector<Scalar>>& spanners,
                                 const std::vector<std::vector<Scalar>>& candidates, int width) {
  RowSpan<Ops> span(ops, width);
  for (const auto& s : spanners) span.add(to_row(ops, s));
  std::vector<int> picked;
  for (size_t i = 0; i < candidates.size(); ++i)
    if (span.add(to_row(ops, candidates[i]))) picked.push_back(static_cast<int>(i));
  return picked;
}

}  // namespace

int rank_of(const Field& f, const std::vector<std::vector<Scalar>>& rows, int width) {
  if (has_fast_path(f)) {
    Mat<GFpOps> m = to_mat(GFpOps(f.modulus()), rows, width);
    return rank(std::move(m));
  }
  Mat<ScalarOps> m = to_mat(ScalarOps(f), rows, width);
  return rank(std::move(m));
}

std::vector<std::vector<Scalar>> kernel_of(const Field& f,
                                           const std::vector<std::vector<Scalar>>& rows, int width) {
  std::vector<std::vector<Scalar>> out;
  if (has_fast_path(f)) {
    GFpOps ops(f.modulus());
    for (const auto& v : kernel(to_mat(ops, rows, width))) {
      std::vector<Scalar> s;
      s.reserve(v.size());
      for (auto e : v) s.push_back(ops.to_scalar(f, e));
      out.push_back(std::move(s));
    }
  } else {
    ScalarOps ops(f);
    for (auto& v : kernel(to_mat(ops, rows, width))) out.push_back(std::move(v));
  }
  return out;
}

std::vector<int> complement_indices(const Field& f, const std::vector<std::vector<Scalar>>& spanners,
                                    const std::vector<std::vector<Scalar>>& candidates, int width) {
  if (has_fast_path(f)) return complement_impl(GFpOps(f.modulus()), spanners, candidates, width);
  return complement_impl(ScalarOps(f), spanners, candidates, width);
}

bool in_span(const Field& f, const std::vector<std::vector<Scalar>>& rows,
             const std::vector<Scalar>& v, int width) {
  ScalarSpan span(f, rows, width);
  return span.contains(v);
}

ScalarSpan::ScalarSpan(const Field& f, int width)
    : field_(f),
      span_(has_fast_path(f)
                ? std::variant<RowSpan<GFpOps>, RowSpan<ScalarOps>>(
                      std::in_place_index<0>, GFpOps(f.modulus()), width)
                : std::variant<RowSpan<GFpOps>, RowSpan<ScalarOps>>(std::in_place_index<1>,
                                                                    ScalarOps(f), width)) {}

ScalarSpan::ScalarSpan(const Field& f, const std::vector<std::vector<Scalar>>& rows, int width)
    : ScalarSpan(f, width) {
  for (const auto& r : rows) add(r);
}

int ScalarSpan::dim() const {
  if (auto* s = std::get_if<0>(&span_)) return s->dim();
  return std::get<1>(span_).dim();
}

bool ScalarSpan::contains(const std::vector<Scalar>& v) const {
  if (auto* s = std::get_if<0>(&span_)) return s->contains(to_row(GFpOps(field_.modulus()), v));
  return std::get<1>(span_).contains(v);
}

bool ScalarSpan::add(const std::vector<Scalar>& v) {
  if (auto* s = std::get_if<0>(&span_)) return s->add(to_row(GFpOps(field_.modulus()), v));
  return std::get<1>(span_).add(v);
}

}  // namespace linalg
}  // namespace socle
