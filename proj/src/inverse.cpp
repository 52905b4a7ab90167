#include "socle/inverse.hpp"

#include <unordered_map>

#include "socle/combinat.hpp"
#include "socle/hilbert.hpp"
#include "socle/linalg.hpp"

namespace socle {

RingPtr contraction_ring(const RingPtr& xring) { return Ring::dual_names(xring); }

Poly contract(const Poly& f, const Poly& F) {
  if (!f.ring() || !F.ring() || f.ring()->nvars() != F.ring()->nvars() ||
      f.ring()->field() != F.ring()->field())
    throw RingMismatch();
  std::vector<Term> out;
  for (const auto& s : F.terms()) {
    for (const auto& t : f.terms()) {
      if (!t.m.divides(s.m)) continue;
      out.push_back({s.m.divided_by(t.m), s.c * t.c});
    }
  }
  return Poly(F.ring(), std::move(out));
}

namespace {

std::vector<Scalar> poly_row(const Poly& p, const std::unordered_map<Monomial, int, MonomialHash>& index,
                             size_t width, const Field& F) {
  std::vector<Scalar> row(width, Scalar::zero(F));
  for (const auto& t : p.terms()) row[static_cast<size_t>(index.at(t.m))] = t.c;
  return row;
}

}  // namespace

Ideal annihilator(const RingPtr& xring, const Poly& F) {
  if (F.is_zero()) throw ZeroInput();
  if (!F.is_homogeneous()) throw std::invalid_argument("inverse polynomial must be homogeneous");
  if (F.ring()->nvars() != xring->nvars() || F.ring()->field() != xring->field())
    throw RingMismatch();
  const Field& field = xring->field();
  const int n = xring->nvars();
  const int r = F.degree();

  std::vector<Poly> gens;
  std::vector<std::vector<Scalar>> prev_kernel;  // basis of (0:F) in the previous degree
  std::vector<Monomial> prev_mons;
  for (int d = 1; d <= r; ++d) {
    const auto xmons = monomials_of_degree(n, d);
    const auto ymons = monomials_of_degree(n, r - d);
    // kernel of the contraction pairing S_d -> D_{r-d}
    std::vector<std::vector<Scalar>> rows(
        ymons.size(), std::vector<Scalar>(xmons.size(), Scalar::zero(field)));
    for (size_t col = 0; col < xmons.size(); ++col) {
      for (size_t row = 0; row < ymons.size(); ++row) {
        const Scalar c = F.coeff(xmons[col] * ymons[row]);
        if (!c.is_zero()) rows[row][col] = c;
      }
    }
    auto ker = linalg::kernel_of(field, rows, static_cast<int>(xmons.size()));
    // minimal generators: kernel vectors outside S_1 * (previous kernel)
    std::unordered_map<Monomial, int, MonomialHash> index;
    for (size_t k = 0; k < xmons.size(); ++k) index[xmons[k]] = static_cast<int>(k);
    std::vector<std::vector<Scalar>> spanners;
    for (const auto& v : prev_kernel) {
      std::vector<Term> terms;
      for (size_t k = 0; k < prev_mons.size(); ++k)
        if (!v[k].is_zero()) terms.push_back({prev_mons[k], v[k]});
      const Poly p(xring, std::move(terms));
      for (int var = 0; var < n; ++var)
        spanners.push_back(poly_row(p.times_monomial(Monomial::var(var), Scalar::one(field)), index,
                                    xmons.size(), field));
    }
    for (int pick : linalg::complement_indices(field, spanners, ker, static_cast<int>(xmons.size()))) {
      std::vector<Term> terms;
      const auto& v = ker[static_cast<size_t>(pick)];
      for (size_t k = 0; k < xmons.size(); ++k)
        if (!v[k].is_zero()) terms.push_back({xmons[k], v[k]});
      gens.push_back(Poly(xring, std::move(terms)));
    }
    prev_kernel = std::move(ker);
    prev_mons = xmons;
  }

  // degree r+1: S_{r+1} is annihilated entirely; new generators exist exactly
  // where the ideal generated so far misses the Hilbert function of S/(0:F)
  Ideal partial(xring, gens);
  const HilbertData h = hilbert(partial);
  if (h.value(r + 1) > 0) {
    // standard monomials of the partial ideal complete it in degree r+1
    const auto xmons = monomials_of_degree(n, r + 1);
    const auto leads = partial.initial_gens();
    for (const auto& m : xmons) {
      bool in_initial = false;
      for (const auto& l : leads)
        if (l.divides(m)) {
          in_initial = true;
          break;
        }
      if (!in_initial) gens.push_back(Poly::monomial(xring, m, Scalar::one(field)));
    }
    return Ideal(xring, gens);
  }
  return partial;
}

std::vector<Poly> dual_module(const Ideal& I, int degree_bound) {
  if (!I.is_artinian()) throw NotArtinian();
  const RingPtr xring = I.ring();
  const RingPtr yring = contraction_ring(xring);
  const Field& field = xring->field();
  const int n = xring->nvars();
  const HilbertData h = hilbert(I);
  int socle = 0;
  {
    int d = 0;
    while (h.value(d) > 0) socle = d++;
  }
  const int top = degree_bound >= 0 ? std::min(degree_bound, socle) : socle;

  // (0 :_D I)_e = joint kernel of contraction by the generators
  std::vector<std::vector<std::vector<Scalar>>> kernels(static_cast<size_t>(top) + 1);
  std::vector<std::vector<Monomial>> ybases(static_cast<size_t>(top) + 1);
  for (int e = 0; e <= top; ++e) {
    const auto ymons = monomials_of_degree(n, e);
    ybases[static_cast<size_t>(e)] = ymons;
    std::vector<std::vector<Scalar>> rows;
    for (const auto& g : I.gens()) {
      if (g.degree() > e) continue;
      const auto tmons = monomials_of_degree(n, e - g.degree());
      std::unordered_map<Monomial, int, MonomialHash> tindex;
      for (size_t k = 0; k < tmons.size(); ++k) tindex[tmons[k]] = static_cast<int>(k);
      // one constraint row per target monomial: coefficient of y^t in g . w
      std::vector<std::vector<Scalar>> block(
          tmons.size(), std::vector<Scalar>(ymons.size(), Scalar::zero(field)));
      for (size_t col = 0; col < ymons.size(); ++col) {
        for (const auto& term : g.terms()) {
          if (!term.m.divides(ymons[col])) continue;
          const Monomial tgt = ymons[col].divided_by(term.m);
          block[static_cast<size_t>(tindex.at(tgt))][col] += term.c;
        }
      }
      for (auto& row : block) rows.push_back(std::move(row));
    }
    kernels[static_cast<size_t>(e)] = linalg::kernel_of(field, rows, static_cast<int>(ymons.size()));
  }

  // minimal generators from the top down: M_e modulo x . M_{e+1}
  std::vector<Poly> out;
  for (int e = top; e >= 0; --e) {
    const auto& ymons = ybases[static_cast<size_t>(e)];
    std::unordered_map<Monomial, int, MonomialHash> index;
    for (size_t k = 0; k < ymons.size(); ++k) index[ymons[k]] = static_cast<int>(k);
    std::vector<std::vector<Scalar>> spanners;
    if (e + 1 <= top) {
      for (const auto& v : kernels[static_cast<size_t>(e) + 1]) {
        std::vector<Term> terms;
        const auto& upmons = ybases[static_cast<size_t>(e) + 1];
        for (size_t k = 0; k < upmons.size(); ++k)
          if (!v[k].is_zero()) terms.push_back({upmons[k], v[k]});
        const Poly w(yring, std::move(terms));
        for (int var = 0; var < n; ++var) {
          const Poly xv = Poly::variable(xring, var);
          const Poly down = contract(xv, w);
          if (!down.is_zero()) spanners.push_back(poly_row(down, index, ymons.size(), field));
        }
      }
    }
    const auto& cand = kernels[static_cast<size_t>(e)];
    for (int pick : linalg::complement_indices(field, spanners, cand, static_cast<int>(ymons.size()))) {
      std::vector<Term> terms;
      const auto& v = cand[static_cast<size_t>(pick)];
      for (size_t k = 0; k < ymons.size(); ++k)
        if (!v[k].is_zero()) terms.push_back({ymons[k], v[k]});
      out.push_back(Poly(yring, std::move(terms)));
    }
  }
  return out;
}

Poly cyclic_family(const RingPtr& yring) {
  const int c = yring->nvars();
  if (c < 3) throw TooFewVariables();
  const Field& f = yring->field();
  Poly F = Poly::zero(yring);
  for (int i = 0; i < c; ++i) {
    Monomial m = Monomial::var(i) * Monomial::var((i + 1) % c) *
                 Monomial::var((i + 2) % c) * Monomial::var((i + 2) % c);
    F = F + Poly::monomial(yring, m, Scalar::one(f));
  }
  return F;
}

Poly cyclic_family(int c, const Field& field, OrderKind order) {
  if (c < 3) throw TooFewVariables();
  std::vector<std::string> names;
  for (int i = 0; i < c; ++i) names.push_back("y" + std::to_string(i));
  return cyclic_family(Ring::make(c, field, order, std::move(names)));
}

Poly modified_c6(const Field& field, OrderKind order) {
  Poly F = cyclic_family(6, field, order);
  const RingPtr y = F.ring();
  const Scalar one = Scalar::one(field);
  Monomial a = Monomial::var(0) * Monomial::var(5) * Monomial::var(4) * Monomial::var(4);
  Monomial b = Monomial::var(0) * Monomial::var(5, 3);
  return F + Poly::monomial(y, a, one) + Poly::monomial(y, b, one);
}

}  // namespace socle
