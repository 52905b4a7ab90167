#include "socle/construct.hpp"

#include <algorithm>
#include <map>

#include "socle/combinat.hpp"

namespace socle {

namespace {

Poly pfaffian_rec(const RingPtr& ring, const std::vector<std::vector<Poly>>& m,
                  std::vector<int> idx) {
  if (idx.empty()) return Poly::constant(ring, Scalar::one(ring->field()));
  if (idx.size() % 2) return Poly::zero(ring);
  Poly acc = Poly::zero(ring);
  const int first = idx[0];
  for (size_t j = 1; j < idx.size(); ++j) {
    const Poly& e = m[static_cast<size_t>(first)][static_cast<size_t>(idx[j])];
    if (e.is_zero()) continue;
    std::vector<int> rest;
    for (size_t k = 1; k < idx.size(); ++k)
      if (k != j) rest.push_back(idx[k]);
    Poly sub = pfaffian_rec(ring, m, std::move(rest));
    if (j % 2 == 1)
      acc = acc + e * sub;
    else
      acc = acc - e * sub;
  }
  return acc;
}

}  // namespace

Poly pfaffian(const AlternatingMatrix& m) {
  if (m.size() % 2) throw OddSize();
  std::vector<int> idx(static_cast<size_t>(m.size()));
  for (int i = 0; i < m.size(); ++i) idx[static_cast<size_t>(i)] = i;
  return pfaffian_rec(m.ring(), m.entries(), std::move(idx));
}

std::vector<Poly> submaximal_pfaffians(const AlternatingMatrix& m) {
  if (m.size() % 2 == 0) throw EvenSize();
  std::vector<Poly> out;
  for (int k = 0; k < m.size(); ++k) {
    std::vector<int> idx;
    for (int i = 0; i < m.size(); ++i)
      if (i != k) idx.push_back(i);
    Poly p = pfaffian_rec(m.ring(), m.entries(), std::move(idx));
    out.push_back(k % 2 == 0 ? -p : p);  // sign (-1)^(k+1)
  }
  return out;
}

Poly determinant(const RingPtr& ring, const std::vector<std::vector<Poly>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return Poly::constant(ring, Scalar::one(ring->field()));
  // expand row by row; state = bitmask of used columns
  std::map<uint32_t, Poly> cur;
  cur[0] = Poly::constant(ring, Scalar::one(ring->field()));
  for (int row = 0; row < n; ++row) {
    std::map<uint32_t, Poly> next;
    for (const auto& [mask, minor] : cur) {
      int sign = 1;
      for (int col = 0; col < n; ++col) {
        if (mask & (1u << col)) continue;
        const Poly& e = m[static_cast<size_t>(row)][static_cast<size_t>(col)];
        if (!e.is_zero()) {
          Poly contrib = sign > 0 ? minor * e : -(minor * e);
          auto it = next.find(mask | (1u << col));
          if (it == next.end())
            next.emplace(mask | (1u << col), std::move(contrib));
          else
            it->second = it->second + contrib;
        }
        sign = -sign;
      }
    }
    cur = std::move(next);
  }
  return cur.begin()->second;
}

// ---------------------------------------------------------------------------
// Deviation two
// ---------------------------------------------------------------------------

DeviationTwoReport build_deviation_two(const DeviationTwoSpec& spec) {
  DeviationTwoReport rep;
  const RingPtr ring = spec.m.ring();
  if (spec.m.size() != 5) throw PreconditionUnmet("deviation-two shape wants a 5x5 matrix");
  for (const auto& q : spec.extra_quadrics)
    if (q.is_zero() || !q.is_homogeneous() || q.degree() != 2)
      throw PreconditionUnmet("extra generators must be quadrics");
  const int c = 3 + static_cast<int>(spec.extra_quadrics.size());
  rep.codim = c;

  std::vector<Poly> pf = submaximal_pfaffians(spec.m);
  Ideal pf_ideal(ring, pf);
  rep.pfaffian_height_3 = !pf_ideal.is_unit() && pf_ideal.height() == 3;
  rep.extras_regular = is_regular_sequence(spec.extra_quadrics, pf_ideal);

  std::vector<Poly> gens = pf;
  gens.insert(gens.end(), spec.extra_quadrics.begin(), spec.extra_quadrics.end());
  rep.ideal = Ideal(ring, std::move(gens));
  rep.height_is_c = !rep.ideal.is_unit() && rep.ideal.height() == c;

  const HilbertData h = hilbert(rep.ideal);
  rep.h_vector = h.h_vector;
  rep.multiplicity_matches = h.multiplicity == 5ll * (1ll << (c - 3));

  const FreeResolution res = free_resolution(rep.ideal);
  rep.betti = res.betti();
  rep.regularity_matches = rep.betti.regularity() == c - 1;
  // closed form: β_{i,2i} = 5 C(c-3,i-1) + C(c-3,i), β_{i,2i-1} = 5 C(c-3,i-2) + C(c-3,i-3)
  BettiTable expected;
  expected.add(0, 0, 1);
  for (int i = 1; i <= c; ++i) {
    expected.add(i, 2 * i, 5 * binom(c - 3, i - 1) + binom(c - 3, i));
    expected.add(i, 2 * i - 1, 5 * binom(c - 3, i - 2) + binom(c - 3, i - 3));
  }
  rep.betti_matches_closed_form = rep.betti == expected;
  rep.valid = rep.pfaffian_height_3 && rep.extras_regular && rep.height_is_c &&
              rep.betti_matches_closed_form && rep.multiplicity_matches && rep.regularity_matches;
  return rep;
}

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
  if (f.kind() == FieldKind::PrimeField) {
    std::uniform_int_distribution<uint64_t> dist(0, f.modulus() - 1);
    return Scalar::of_int(f, static_cast<long long>(dist(rng)));
  }
  std::uniform_int_distribution<int> dist(-9, 9);
  return Scalar::of_int(f, dist(rng));
}

Poly random_form(const RingPtr& ring, int degree, std::mt19937_64& rng) {
  std::vector<Term> terms;
  for (const auto& m : monomials_of_degree(ring->nvars(), degree))
    terms.push_back({m, random_scalar(ring->field(), rng)});
  return Poly(ring, std::move(terms));
}

DeviationTwoSpec random_deviation_two(int c, const Field& field, uint64_t seed) {
  if (c < 3) throw PreconditionUnmet("deviation-two shape wants c >= 3");
  std::mt19937_64 rng(seed);
  const RingPtr ring = Ring::make(c, field, OrderKind::Grevlex);
  std::vector<std::vector<Poly>> e(5, std::vector<Poly>(5, Poly::zero(ring)));
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      Poly f = random_form(ring, 1, rng);
      e[static_cast<size_t>(i)][static_cast<size_t>(j)] = f;
      e[static_cast<size_t>(j)][static_cast<size_t>(i)] = -f;
    }
  std::vector<Poly> extras;
  for (int k = 0; k < c - 3; ++k) extras.push_back(random_form(ring, 2, rng));
  return DeviationTwoSpec{AlternatingMatrix(ring, std::move(e)), std::move(extras)};
}

// ---------------------------------------------------------------------------
// Linkage
// ---------------------------------------------------------------------------

LinkReport link(const Ideal& L, const Ideal& I) {
  if (!L.ring()->compatible(*I.ring())) throw RingMismatch();
  LinkReport rep;
  if (L.is_unit() || I.is_unit()) throw PreconditionUnmet("link wants proper ideals");
  const int c = L.height();
  rep.height = c;
  if (I.height() != c) throw PreconditionUnmet("heights of the link differ");
  const auto& lgens = L.minimal_generators();
  if (static_cast<int>(lgens.size()) != c)
    throw PreconditionUnmet("L is not a complete intersection");
  for (const auto& g : lgens)
    if (g.degree() != 2) throw PreconditionUnmet("L is not a quadratic complete intersection");
  if (!I.contains_ideal(L)) throw PreconditionUnmet("L is not contained in I");

  const HilbertData hi = hilbert(I);
  rep.h_i = hi.h_vector;

  if (I.contains_ideal(L) && L.contains_ideal(I)) {
    // self-link: (L : L) = (1); the identity degenerates to h_i(S/I) = C(c,i)
    rep.self_link = true;
    rep.linked = Ideal(I.ring(), {Poly::constant(I.ring(), Scalar::one(I.ring()->field()))});
    rep.h_j = {};
    rep.identity_holds = true;
    for (int i = 0; i <= c; ++i)
      if ((i < static_cast<int>(rep.h_i.size()) ? rep.h_i[static_cast<size_t>(i)] : 0) != binom(c, i))
        rep.identity_holds = false;
    return rep;
  }

  rep.linked = colon(L, I);
  const HilbertData hj = hilbert(rep.linked);
  rep.h_j = hj.h_vector;

  // Cohen-Macaulay check backing the identity
  const FreeResolution res = free_resolution(I);
  rep.cm_checked = res.betti().pd() == I.height();

  rep.identity_holds = true;
  for (int i = 0; i <= c; ++i) {
    const long long lhs = i < static_cast<int>(rep.h_i.size()) ? rep.h_i[static_cast<size_t>(i)] : 0;
    const long long rhs =
        binom(c, i) -
        (c - i < static_cast<int>(rep.h_j.size()) && c - i >= 0 ? rep.h_j[static_cast<size_t>(c - i)] : 0);
    if (lhs != rhs) rep.identity_holds = false;
  }
  return rep;
}

bool hvector_matches_family(const Ideal& I, HVectorFamily family) {
  const HilbertData h = hilbert(I);
  const int c = I.height();
  std::vector<long long> expected;
  for (int i = 0;; ++i) {
    long long v = 0;
    switch (family) {
      case HVectorFamily::AlmostCompleteIntersection:
        v = binom(c, i) - binom(c - 2, i - 2);
        break;
      case HVectorFamily::DeviationTwo:
        v = binom(c - 1, i) + binom(c - 3, i - 1);
        break;
    }
    if (v == 0 && i > c) break;
    expected.push_back(v);
  }
  while (!expected.empty() && expected.back() == 0) expected.pop_back();
  return h.h_vector == expected;
}

// ---------------------------------------------------------------------------
// Tensor products and Artinian reduction
// ---------------------------------------------------------------------------

Ideal tensor_product(const Ideal& a, const Ideal& b) {
  const RingPtr ra = a.ring();
  const RingPtr rb = b.ring();
  if (ra->field() != rb->field() || ra->order().kind != rb->order().kind)
    throw RingMismatch();
  const int n = ra->nvars() + rb->nvars();
  const RingPtr ring = Ring::make(n, ra->field(), ra->order().kind);
  std::vector<Poly> gens;
  for (const auto& g : a.gens()) gens.push_back(Poly(ring, g.terms()));
  for (const auto& g : b.gens()) {
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      Monomial m;
      for (int v = 0; v < rb->nvars(); ++v)
        m.e[static_cast<size_t>(ra->nvars() + v)] = t.m.e[static_cast<size_t>(v)];
      m.deg = t.m.deg;
      terms.push_back({m, t.c});
    }
    gens.push_back(Poly(ring, std::move(terms)));
  }
  return Ideal(ring, std::move(gens));
}

namespace {

/// Substitute variable `var` by the linear form `value` (over the smaller ring
/// obtained by dropping `var`).
Poly eliminate_variable(const Poly& p, int var, const Poly& value, const RingPtr& smaller) {
  auto compress = [&](const Monomial& m) {
    Monomial r;
    int at = 0;
    for (int v = 0; v < p.ring()->nvars(); ++v) {
      if (v == var) continue;
      r.e[static_cast<size_t>(at++)] = m.e[static_cast<size_t>(v)];
    }
    r.deg = static_cast<uint16_t>(m.deg - m.e[static_cast<size_t>(var)]);
    return r;
  };
  Poly acc = Poly::zero(smaller);
  for (const auto& t : p.terms()) {
    const int e = t.m.e[static_cast<size_t>(var)];
    Monomial rest = t.m;
    rest.e[static_cast<size_t>(var)] = 0;
    rest.deg = static_cast<uint16_t>(rest.deg - e);
    Poly term = Poly::monomial(smaller, compress(rest), t.c);
    for (int k = 0; k < e; ++k) term = term * value;
    acc = acc + term;
  }
  return acc;
}

}  // namespace

ArtinianReductionResult artinian_reduction(const Ideal& I, uint64_t seed, int max_attempts) {
  ArtinianReductionResult out;
  out.seed = seed;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Ideal cur = I;
    const std::vector<long long> target = hilbert(I).numerator;
    bool good = true;
    int used = 0;
    while (cur.krull_dim() > 0) {
      const RingPtr ring = cur.ring();
      const int n = ring->nvars();
      const RingPtr smaller = Ring::make(n - 1, ring->field(), ring->order().kind);
      // random linear form; eliminate the last variable through it
      std::vector<Term> terms;
      for (int v = 0; v + 1 < n; ++v) {
        const Scalar c = random_scalar(ring->field(), rng);
        if (!c.is_zero()) terms.push_back({Monomial::var(v), c});
      }
      // x_{n-1} = value
      Poly value(smaller, std::move(terms));
      std::vector<Poly> gens;
      for (const auto& g : cur.gens()) {
        Poly img = eliminate_variable(g, n - 1, -value, smaller);
        if (!img.is_zero()) gens.push_back(std::move(img));
      }
      cur = Ideal(smaller, std::move(gens));
      ++used;
      if (cur.is_unit()) {
        good = false;
        break;
      }
    }
    if (good && hilbert(cur).numerator == target) {
      out.ideal = std::move(cur);
      out.ok = true;
      out.forms_used = used;
      return out;
    }
  }
  out.ideal = I;
  out.ok = false;
  return out;
}

}  // namespace socle
