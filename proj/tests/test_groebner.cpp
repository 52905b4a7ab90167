#include "doctest.h"

#include <random>

#include "socle/parse.hpp"
#include "support.hpp"

using namespace socle;
using namespace socle::testing;

namespace {

Ideal ideal_of(const RingPtr& r, const std::vector<std::string>& gens) {
  std::vector<Poly> ps;
  for (const auto& g : gens) ps.push_back(parse_poly(g, r));
  return Ideal(r, std::move(ps));
}

Poly random_homog(const RingPtr& r, int deg, std::mt19937_64& rng) {
  std::vector<Term> terms;
  for (const auto& m : monomials_of_degree(r->nvars(), deg))
    if (rng() % 3 == 0)
      terms.push_back({m, Scalar::of_int(r->field(), static_cast<long long>(rng() % 32002 + 1))});
  return Poly(r, std::move(terms));
}

}  // namespace

TEST_CASE("a monomial ideal is its own reduced basis") {
  auto r = Ring::make(2, Field::prime(32003));
  const Ideal I = ideal_of(r, {"x0^2", "x0*x1", "x1^2"});
  const auto& gb = I.groebner().gens;
  CHECK(gb.size() == 3);
  for (const auto& g : gb) CHECK(g.size() == 1);
}

TEST_CASE("normal form and membership") {
  auto r = Ring::make(2, Field::prime(32003));
  const Ideal I = ideal_of(r, {"x0^2"});
  CHECK(I.normal_form(parse_poly("x0^2", r)).is_zero());
  CHECK_FALSE(I.normal_form(parse_poly("x0*x1", r)).is_zero());
  CHECK(I.contains(parse_poly("x0^3 + x0^2*x1", r)));
}

TEST_CASE("groebner membership agrees with the dense oracle on random ideals") {
  std::mt19937_64 rng(101);
  auto r = Ring::make(4, Field::prime(32003));
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Poly> gens;
    const int k = 2 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) {
      Poly g = random_homog(r, 2 + static_cast<int>(rng() % 2), rng);
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    const Ideal I(r, gens);
    for (int probe = 0; probe < 8; ++probe) {
      const int d = 2 + static_cast<int>(rng() % 3);
      Poly f = random_homog(r, d, rng);
      // mix a known member in half the probes
      if (probe % 2 == 0 && gens[0].degree() <= d) {
        const auto pad = monomials_of_degree(r->nvars(), d - gens[0].degree());
        f = f + gens[0].times_monomial(pad[rng() % pad.size()], Scalar::one(r->field()));
      }
      CHECK(I.contains(f) == member_oracle(gens, f));
    }
  }
}

TEST_CASE("initial ideal has the Hilbert function of the ideal") {
  auto r = Ring::make(4, Field::prime(32003));
  const Ideal I = ideal_of(r, {"x0^2 - x1*x3", "x1^2 - x2*x0", "x2^2 - x3*x1"});
  const HilbertData h = hilbert(I);  // computed from in(I)
  for (int d = 0; d <= 8; ++d) CHECK(h.value(d) == hf_oracle(I.gens(), d));
}

TEST_CASE("colon ideals") {
  auto r1 = Ring::make(1, Field::prime(32003));
  CHECK(colon(ideal_of(r1, {"x0^2"}), parse_poly("x0", r1)).equals(ideal_of(r1, {"x0"})));

  auto r = Ring::make(2, Field::prime(32003));
  const Ideal A = ideal_of(r, {"x0^2", "x1^2"});
  const Ideal B = ideal_of(r, {"x0^2", "x0*x1", "x1^2"});
  const Ideal J = colon(A, B);
  CHECK(J.equals(ideal_of(r, {"x0", "x1"})));

  // (A : B) * B ⊆ A
  for (const auto& f : J.gens())
    for (const auto& b : B.gens()) CHECK(A.contains(f * b));

  // inclusion-monotone: B ⊆ B' implies (A : B') ⊆ (A : B)
  const Ideal Bp = ideal_of(r, {"x0^2", "x0*x1", "x1^2", "x0*x1^2"});
  CHECK(colon(A, B).contains_ideal(colon(A, Bp)));
}

TEST_CASE("colon via brute-force degreewise kernel in two variables") {
  // independent check of ((x0^2, x1^2) : (x0^2, x0x1, x1^2)) = (x0, x1)
  auto r = Ring::make(2, Field::prime(32003));
  const Ideal A = ideal_of(r, {"x0^2", "x1^2"});
  const std::vector<Poly> b = {parse_poly("x0^2", r), parse_poly("x0*x1", r),
                               parse_poly("x1^2", r)};
  // degree-1 part of the colon by inspection over the monomial basis
  std::vector<Poly> degree1;
  for (const auto& m : monomials_of_degree(2, 1)) {
    const Poly f = Poly::monomial(r, m, Scalar::one(r->field()));
    bool in_colon = true;
    for (const auto& g : b)
      if (!member_oracle(A.gens(), f * g)) in_colon = false;
    if (in_colon) degree1.push_back(f);
  }
  CHECK(degree1.size() == 2);
  CHECK(colon(A, Ideal(r, b)).equals(Ideal(r, degree1)));
}

TEST_CASE("dimension and height") {
  auto r3 = Ring::make(3, Field::prime(32003));
  const Ideal I = ideal_of(r3, {"x0*x1"});
  CHECK(I.krull_dim() == 2);
  CHECK(I.height() == 1);

  const Ideal zero(r3, {});
  CHECK(zero.krull_dim() == 3);

  const Ideal unit = ideal_of(r3, {"1"});
  CHECK(unit.is_unit());
  CHECK_THROWS_AS(unit.krull_dim(), UnitIdeal);

  auto r2 = Ring::make(2, Field::prime(32003));
  CHECK(ideal_of(r2, {"x0^2", "x1^2"}).is_artinian());
}

TEST_CASE("regular sequences") {
  auto r = Ring::make(3, Field::prime(32003));
  const Ideal zero(r, {});
  CHECK(is_regular_sequence({parse_poly("x0", r), parse_poly("x1", r), parse_poly("x2", r)}, zero));
  CHECK_FALSE(is_regular_sequence({parse_poly("x0", r), parse_poly("x0*x1", r)}, zero));
}

TEST_CASE("syzygies of two variables is the Koszul relation") {
  auto r = Ring::make(2, Field::prime(32003));
  const std::vector<Poly> gens = {parse_poly("x0", r), parse_poly("x1", r)};
  const auto syz = syzygies(r, gens);
  REQUIRE(syz.size() == 1);
  // s = (x1, -x0) up to a scalar
  const Poly a = syz[0].coords[0];
  const Poly b = syz[0].coords[1];
  CHECK((a * gens[0] + b * gens[1]).is_zero());
  CHECK(a.degree() == 1);
  CHECK(syz[0].homogeneous_degree() == 2);
}

TEST_CASE("emitted syzygies generate the whole kernel, degree by degree") {
  std::mt19937_64 rng(13579);
  auto r = Ring::make(3, Field::prime(32003));
  const Field& f = r->field();
  int done = 0;
  while (done < 4) {
    std::vector<Poly> gens;
    for (int i = 0; i < 3; ++i) {
      Poly g = random_homog(r, 2, rng);
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.size() < 2) continue;
    const auto syz = syzygies(r, gens);
    for (int d = 3; d <= 5; ++d) {
      // kernel dimension of (S(-2)^k)_d -> S_d by plain linear algebra
      const auto mons = monomials_of_degree(3, d);
      std::unordered_map<Monomial, int, MonomialHash> index;
      for (size_t k = 0; k < mons.size(); ++k) index[mons[k]] = static_cast<int>(k);
      std::vector<std::vector<Scalar>> img;
      long long ambient = 0;
      for (const auto& g : gens) {
        for (const auto& m : monomials_of_degree(3, d - 2)) {
          std::vector<Scalar> row(mons.size(), Scalar::zero(f));
          const Poly p = g.times_monomial(m, Scalar::one(f));
          for (const auto& t : p.terms()) row[static_cast<size_t>(index.at(t.m))] = t.c;
          img.push_back(std::move(row));
          ++ambient;
        }
      }
      const long long kernel_dim = ambient - linalg::rank_of(f, img, static_cast<int>(mons.size()));
      // dimension of the degree-d piece spanned by the emitted syzygies
      std::vector<std::vector<Scalar>> span;
      const auto low = monomials_of_degree(3, d - 2);
      std::unordered_map<Monomial, int, MonomialHash> lowidx;
      for (size_t k = 0; k < low.size(); ++k) lowidx[low[k]] = static_cast<int>(k);
      for (const auto& s : syz) {
        const int sdeg = s.homogeneous_degree();
        if (sdeg < 0 || sdeg > d) continue;
        for (const auto& m : monomials_of_degree(3, d - sdeg)) {
          std::vector<Scalar> row(gens.size() * low.size(), Scalar::zero(f));
          for (size_t c = 0; c < gens.size(); ++c) {
            const Poly shifted = s.coords[c].times_monomial(m, Scalar::one(f));
            for (const auto& t : shifted.terms())
              row[c * low.size() + static_cast<size_t>(lowidx.at(t.m))] = t.c;
          }
          span.push_back(std::move(row));
        }
      }
      const long long generated =
          linalg::rank_of(f, span, static_cast<int>(gens.size() * low.size()));
      CHECK(generated == kernel_dim);
    }
    ++done;
  }
}

TEST_CASE("emitted syzygies annihilate the generators exactly") {
  std::mt19937_64 rng(77);
  auto r = Ring::make(3, Field::prime(32003));
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Poly> gens;
    for (int i = 0; i < 3; ++i) {
      Poly g = random_homog(r, 2, rng);
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.size() < 2) continue;
    for (const auto& s : syzygies(r, gens)) {
      Poly acc = Poly::zero(r);
      for (size_t i = 0; i < gens.size(); ++i) acc = acc + s.coords[i] * gens[i];
      CHECK(acc.is_zero());
    }
  }
}

TEST_CASE("minimal generators, degree by degree") {
  auto r = Ring::make(2, Field::prime(32003));
  // x1^3 is superfluous: it lies in (x0^2, x0 x1) + nothing... it does not; mix a redundant gen
  const Ideal I(r, {parse_poly("x0^2", r), parse_poly("x0*x1", r), parse_poly("x0^2 + x0*x1", r)});
  CHECK(I.minimal_generators().size() == 2);

  const Ideal J = ideal_of(r, {"x0^2", "x1^3"});
  const auto& mg = J.minimal_generators();
  REQUIRE(mg.size() == 2);
  CHECK(mg[0].degree() == 2);
  CHECK(mg[1].degree() == 3);

  CHECK_THROWS_AS(Ideal(r, {parse_poly("x0 + x0^2", r)}).minimal_generators(), NonHomogeneous);
}

TEST_CASE("unit ideal short-circuits") {
  auto r = Ring::make(2, Field::prime(32003));
  const Ideal I = ideal_of(r, {"x0", "x0 + 1"});
  CHECK(I.is_unit());
  CHECK(I.minimal_generators().size() == 1);
  CHECK(I.minimal_generators()[0].degree() == 0);
}

TEST_CASE("module membership") {
  auto r = Ring::make(2, Field::prime(32003));
  GradedFreeModule mod{r, {0, 0}};
  const Poly x0 = parse_poly("x0", r), x1 = parse_poly("x1", r);
  std::vector<ModuleElement> gens = {{mod, {x0, x1}}, {mod, {x1, Poly::zero(r)}}};
  CHECK(module_contains(mod, gens, ModuleElement{mod, {x0 * x0, x0 * x1}}));
  CHECK_FALSE(module_contains(mod, gens, ModuleElement{mod, {Poly::zero(r), x0}}));
}
