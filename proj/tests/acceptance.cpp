// Acceptance suite: one pass/fail line per criterion, exact tolerances.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "socle/construct.hpp"
#include "socle/inverse.hpp"
#include "socle/koszul.hpp"
#include "socle/parse.hpp"
#include "support.hpp"

using namespace socle;
using namespace socle::testing;

namespace {

const Field kGF = Field::prime(32003);

int failures = 0;
std::ostringstream detail;

void criterion(int number, const std::string& name, const std::function<bool()>& body) {
  detail.str("");
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string error;
  try {
    ok = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
          .count();
  std::cout << "[" << std::setw(2) << number << "/10] " << (ok ? "PASS" : "FAIL") << "  " << name
            << "  (" << ms << " ms)\n";
  if (!ok) {
    ++failures;
    if (!error.empty()) std::cout << "        exception: " << error << "\n";
    if (!detail.str().empty()) std::cout << detail.str();
  }
}

bool expect(bool cond, const std::string& what) {
  if (!cond) detail << "        failed: " << what << "\n";
  return cond;
}

struct FamilyData {
  Ideal ideal;
  BettiTable betti;
  HilbertData hilbert_data;
  GorensteinReport gorenstein;
};

FamilyData& family(int c) {
  static std::map<int, FamilyData> cache;
  auto it = cache.find(c);
  if (it == cache.end()) {
    FamilyData d;
    d.ideal = annihilator(Ring::make(c, kGF), cyclic_family(c, kGF));
    d.gorenstein = gorenstein_diagnostics(d.ideal);
    d.betti = d.gorenstein.betti;
    d.hilbert_data = hilbert(d.ideal);
    it = cache.emplace(c, std::move(d)).first;
  }
  return it->second;
}

Ideal quadratic_ci(int c, const Field& f = kGF) {
  auto r = Ring::make(c, f);
  std::vector<Poly> gens;
  for (int i = 0; i < c; ++i)
    gens.push_back(Poly::monomial(r, Monomial::var(i, 2), Scalar::one(f)));
  return Ideal(r, gens);
}

Ideal g6_ideal() {
  static Ideal I = annihilator(Ring::make(6, Field::rationals()), modified_c6(Field::rationals()));
  return I;
}

DeviationTwoReport& devtwo(int c) {
  static std::map<int, DeviationTwoReport> cache;
  auto it = cache.find(c);
  if (it == cache.end()) {
    // seeds fixed for reproducibility; the validity report re-checks every run
    DeviationTwoReport rep = build_deviation_two(random_deviation_two(c, kGF, 9000 + c));
    it = cache.emplace(c, std::move(rep)).first;
  }
  return it->second;
}

// --- criteria ---

bool criterion1_family_invariants() {
  bool ok = true;
  for (int c = 7; c <= 10; ++c) {
    const FamilyData& d = family(c);
    const auto& mg = d.ideal.minimal_generators();
    long long quadrics = 0;
    bool higher = false;
    for (const auto& g : mg) {
      if (g.degree() == 2) ++quadrics;
      if (g.degree() > 2) higher = true;
    }
    ok &= expect(quadrics == c * (c - 3) / 2,
                 "c=" + std::to_string(c) + " quadric generator count");
    ok &= expect(!higher, "c=" + std::to_string(c) + " has no higher-degree generators");
    ok &= expect(d.hilbert_data.h_vector ==
                     std::vector<long long>{1, c, 2ll * c, c, 1},
                 "c=" + std::to_string(c) + " h-vector (1,c,2c,c,1)");
    ok &= expect(d.gorenstein.gorenstein && d.gorenstein.type == 1,
                 "c=" + std::to_string(c) + " Gorenstein of type 1");
    ok &= expect(d.gorenstein.betti_symmetric, "c=" + std::to_string(c) + " symmetric betti table");
    ok &= expect(d.gorenstein.h_symmetric, "c=" + std::to_string(c) + " symmetric h-vector");
  }
  return ok;
}

bool criterion2_c7_table() {
  BettiTable expect_table;
  expect_table.add(0, 0, 1);
  expect_table.add(1, 2, 14);
  expect_table.add(2, 3, 21);
  expect_table.add(2, 4, 36);
  expect_table.add(3, 5, 126);
  expect_table.add(4, 6, 126);
  expect_table.add(5, 7, 36);
  expect_table.add(5, 8, 21);
  expect_table.add(6, 9, 14);
  expect_table.add(7, 11, 1);
  return expect(family(7).betti == expect_table, "c=7 betti table entry-for-entry");
}

bool criterion3_non_koszul_certificates() {
  bool ok = true;
  for (int c = 7; c <= 10; ++c) {
    const auto start = std::chrono::steady_clock::now();
    const FamilyData& d = family(c);
    const SyzygyObstruction obs = syzygy_obstruction(d.ideal);
    ok &= expect(obs.found, "c=" + std::to_string(c) + " quadratic-syzygy witness exists");
    if (obs.found) {
      // witness validity: annihilates the generators exactly (kernel membership)
      Poly acc = Poly::zero(d.ideal.ring());
      const auto& mg = d.ideal.minimal_generators();
      for (size_t g = 0; g < mg.size(); ++g)
        acc = acc + obs.witness.coords[g] * mg[g];
      ok &= expect(acc.is_zero(), "c=" + std::to_string(c) + " witness is an exact syzygy");
      ok &= expect(obs.syzygy_dim > obs.z_dim,
                   "c=" + std::to_string(c) + " witness lies outside the linear+Koszul span");
    }
    const ResidueBetti rb = resolve_residue_field(QuotientRing(d.ideal), 3, 2, true);
    bool off = false;
    for (const auto& [k, v] : rb.betti)
      if (v > 0 && k.second != k.first && k.first <= 3) off = true;
    ok &= expect(off, "c=" + std::to_string(c) + " off-diagonal residue-field betti with i <= 3");
    const auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    ok &= expect(secs <= 60, "c=" + std::to_string(c) + " within the 60 s budget");
  }
  // c = 7: the computed value, compared against the reported value 1 for the
  // toric ring this quotient is the Artinian reduction of
  const ResidueBetti rb7 = resolve_residue_field(QuotientRing(family(7).ideal), 3, 2);
  const long long beta34 = rb7.betti.count({3, 4}) ? rb7.betti.at({3, 4}) : 0;
  std::cout << "        c=7 residue-field beta_{3,4} = " << beta34
            << " (reported toric value 1, via the Artinian-reduction correspondence)\n";
  return expect(beta34 == 1, "c=7 beta_{3,4} over R equals 1") && ok;
}

bool criterion4_modified_c6_over_q() {
  const Ideal I = g6_ideal();
  bool ok = expect(I.ring()->field() == Field::rationals(), "computed over the rationals");
  const auto& mg = I.minimal_generators();
  ok &= expect(mg.size() == 9, "nine minimal generators");
  for (const auto& g : mg) ok &= expect(g.degree() == 2, "generator degrees are all 2");
  ok &= expect(hilbert(I).h_vector == std::vector<long long>{1, 6, 12, 6, 1}, "h-vector");
  const BettiTable t = free_resolution(I).betti();
  BettiTable expect_table;
  expect_table.add(0, 0, 1);
  expect_table.add(1, 2, 9);
  expect_table.add(2, 3, 4);
  expect_table.add(2, 4, 40);
  expect_table.add(3, 5, 72);
  expect_table.add(4, 6, 40);
  expect_table.add(4, 7, 4);
  expect_table.add(5, 8, 9);
  expect_table.add(6, 10, 1);
  ok &= expect(t == expect_table, "betti table entry-for-entry");
  const Degree2BoundReport bd = degree2_betti_bound(t);
  ok &= expect(bd.fires && bd.beta_2_4 == 40 && bd.bound == 36, "degree-2 bound fires: 40 > 36");
  return ok;
}

bool criterion5_deviation_two_closed_forms() {
  bool ok = true;
  for (int c : {4, 5}) {
    const DeviationTwoReport& rep = devtwo(c);
    ok &= expect(rep.valid, "c=" + std::to_string(c) + " validity report");
    ok &= expect(rep.betti_matches_closed_form,
                 "c=" + std::to_string(c) + " betti closed form beta_{i,2i}, beta_{i,2i-1}");
    for (int i = 0; i <= c; ++i)
      ok &= expect(rep.betti.total(i) == binom(c, i) + 2 * binom(c - 2, i - 1),
                   "c=" + std::to_string(c) + " total beta_" + std::to_string(i));
    ok &= expect(rep.multiplicity_matches, "c=" + std::to_string(c) + " multiplicity 5*2^(c-3)");
    ok &= expect(rep.regularity_matches, "c=" + std::to_string(c) + " regularity c-1");
    const KoszulCertificate cert = koszul_certificate(rep.ideal, 4, 2);
    ok &= expect(cert.verdict == KoszulCertificate::Verdict::KoszulUpTo && cert.steps == 4,
                 "c=" + std::to_string(c) + " KoszulUpTo(4)");
  }
  return ok;
}

bool criterion6_linkage_identity() {
  bool ok = true;
  std::mt19937_64 rng(20260809);
  int verified = 0;
  int attempts = 0;
  while (verified < 20 && attempts < 400) {
    ++attempts;
    const int c = 2 + static_cast<int>(rng() % 3);
    auto r = Ring::make(c, kGF);
    std::vector<Poly> lgens;
    for (int i = 0; i < c; ++i) lgens.push_back(random_form(r, 2, rng));
    const Ideal L(r, lgens);
    if (L.is_unit() || !L.is_artinian()) continue;
    if (static_cast<int>(L.minimal_generators().size()) != c) continue;
    std::vector<Poly> igens = lgens;
    const int extra = 1 + static_cast<int>(rng() % 2);
    for (int e = 0; e < extra; ++e) igens.push_back(random_form(r, 2, rng));
    const Ideal I(r, igens);
    if (I.is_unit() || I.equals(L)) continue;
    const LinkReport rep = link(L, I);
    ok &= expect(rep.identity_holds,
                 "randomized link " + std::to_string(verified) + " transfer identity");
    ++verified;
  }
  ok &= expect(verified >= 20, "at least 20 randomized links verified");

  // the deviation-two link: J = (L : I) contains a linear form and has
  // h_i(S/J) = C(c-1,i) - C(c-3,i-2)
  const int c = 4;
  const DeviationTwoReport& dev = devtwo(c);
  const auto& mg = dev.ideal.minimal_generators();
  std::mt19937_64 rng2(7777);
  bool built = false;
  for (int attempt = 0; attempt < 50 && !built; ++attempt) {
    std::vector<Poly> lgens;
    for (int k = 0; k < c; ++k) {
      Poly combo = Poly::zero(dev.ideal.ring());
      for (const auto& g : mg) combo = combo + g.scaled(random_scalar(kGF, rng2));
      lgens.push_back(combo);
    }
    const Ideal L(dev.ideal.ring(), lgens);
    if (L.is_unit() || !L.is_artinian()) continue;
    if (static_cast<int>(L.minimal_generators().size()) != c) continue;
    const LinkReport rep = link(L, dev.ideal);
    ok &= expect(rep.identity_holds, "deviation-two link transfer identity");
    bool linear = false;
    for (const auto& g : rep.linked.minimal_generators())
      if (g.degree() == 1) linear = true;
    ok &= expect(linear, "linked ideal contains a linear form");
    std::vector<long long> expect_h;
    for (int i = 0;; ++i) {
      const long long v = binom(c - 1, i) - binom(c - 3, i - 2);
      if (v == 0 && i > c) break;
      expect_h.push_back(v);
    }
    while (!expect_h.empty() && expect_h.back() == 0) expect_h.pop_back();
    ok &= expect(hilbert(rep.linked).h_vector == expect_h,
                 "linked h-vector C(c-1,i) - C(c-3,i-2)");
    built = true;
  }
  ok &= expect(built, "deviation-two link instance constructed");
  return ok;
}

bool criterion7_euler_identities() {
  bool ok = true;
  // every corpus ring: alternating betti sums match the K-polynomial
  std::vector<std::pair<std::string, Ideal>> corpus;
  for (int c = 7; c <= 10; ++c)
    corpus.push_back({"family c=" + std::to_string(c), family(c).ideal});
  corpus.push_back({"modified c6", g6_ideal()});
  for (int c : {3, 4, 5}) corpus.push_back({"deviation-two c=" + std::to_string(c), devtwo(c).ideal});
  corpus.push_back({"quadratic CI c=3", quadratic_ci(3)});
  {
    auto r = Ring::make(3, kGF);
    corpus.push_back({"monomial non-CM", Ideal(r, {parse_poly("x0^2", r), parse_poly("x0*x1", r)})});
  }
  for (const auto& [name, I] : corpus) {
    const BettiTable t = free_resolution(I).betti();
    ok &= expect(euler_identity_check(t, hilbert(I)), name + " Euler identity");
  }
  // deviation-two t^2 and t^3 coefficients
  for (int c : {3, 4, 5}) {
    const auto sums = devtwo(c).betti.euler_alternating_sums();
    ok &= expect(sums.size() > 3 && sums[2] == -(c + 2) && sums[3] == 5,
                 "deviation-two c=" + std::to_string(c) + " coefficients -(c+2), +5");
  }
  return ok;
}

bool criterion8_regularity_bound() {
  bool ok = true;
  std::vector<std::pair<std::string, Ideal>> corpus;
  for (int c : {2, 3, 4}) corpus.push_back({"quadratic CI c=" + std::to_string(c), quadratic_ci(c)});
  for (int c = 7; c <= 10; ++c)
    corpus.push_back({"family c=" + std::to_string(c), family(c).ideal});
  corpus.push_back({"modified c6", g6_ideal()});
  for (int c : {3, 4, 5}) corpus.push_back({"deviation-two c=" + std::to_string(c), devtwo(c).ideal});
  for (const auto& [name, I] : corpus) {
    const RegularityBoundReport rep = regularity_bound_check(I);
    ok &= expect(rep.precondition_met, name + " is quadratic Cohen-Macaulay");
    ok &= expect(rep.bound_holds, name + " satisfies reg <= pd");
    ok &= expect(rep.equality_iff_ci, name + " equality exactly for complete intersections");
  }
  return ok;
}

bool criterion9_property_suites() {
  bool ok = true;
  std::mt19937_64 rng(31337);

  // pfaffian identities up to size 8
  auto r5 = Ring::make(5, kGF);
  for (int m : {2, 4, 6, 8}) {
    std::vector<std::vector<Poly>> e(static_cast<size_t>(m),
                                     std::vector<Poly>(static_cast<size_t>(m), Poly::zero(r5)));
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        Poly f = random_form(r5, 1, rng);
        e[static_cast<size_t>(i)][static_cast<size_t>(j)] = f;
        e[static_cast<size_t>(j)][static_cast<size_t>(i)] = -f;
      }
    const AlternatingMatrix a(r5, e);
    ok &= expect(pfaffian(a) * pfaffian(a) == determinant(r5, a.entries()),
                 "pfaffian squared = determinant at size " + std::to_string(m));
  }
  for (int m : {3, 5, 7}) {
    std::vector<std::vector<Poly>> e(static_cast<size_t>(m),
                                     std::vector<Poly>(static_cast<size_t>(m), Poly::zero(r5)));
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        Poly f = random_form(r5, 1, rng);
        e[static_cast<size_t>(i)][static_cast<size_t>(j)] = f;
        e[static_cast<size_t>(j)][static_cast<size_t>(i)] = -f;
      }
    const AlternatingMatrix a(r5, e);
    const auto pf = submaximal_pfaffians(a);
    for (int i = 0; i < m; ++i) {
      Poly acc = Poly::zero(r5);
      for (int j = 0; j < m; ++j) acc = acc + a.at(i, j) * pf[static_cast<size_t>(j)];
      ok &= expect(acc.is_zero(), "matrix times pfaffian vector vanishes at size " + std::to_string(m));
    }
  }

  // annihilator/dual round trips
  {
    auto x = Ring::make(3, kGF);
    auto y = contraction_ring(x);
    std::vector<Term> terms;
    for (const auto& m : monomials_of_degree(3, 3))
      if (rng() % 2)
        terms.push_back({m, Scalar::of_int(kGF, static_cast<long long>(rng() % 32002 + 1))});
    const Poly F(y, terms);
    if (!F.is_zero()) {
      const Ideal I = annihilator(x, F);
      const auto dual = dual_module(I);
      ok &= expect(dual.size() == 1, "Gorenstein dual has one generator");
      const Ideal again = annihilator(x, Poly(y, dual[0].terms()));
      ok &= expect(again.equals(I), "annihilator-dual round trip");
    }
    const FamilyData& d7 = family(7);
    const auto dual7 = dual_module(d7.ideal);
    ok &= expect(dual7.size() == 1 && dual7[0].degree() == 4, "family dual is one quartic");
  }

  // groebner membership against the dense oracle, <= 4 variables
  {
    auto r = Ring::make(4, kGF);
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<Poly> gens;
      for (int i = 0; i < 3; ++i) {
        Poly g = random_form(r, 2, rng);
        if (!g.is_zero()) gens.push_back(g);
      }
      if (gens.empty()) continue;
      const Ideal I(r, gens);
      for (int probe = 0; probe < 6; ++probe) {
        Poly f = random_form(r, 2 + static_cast<int>(rng() % 3), rng);
        if (probe % 2 == 0) {
          const auto pad = monomials_of_degree(4, f.degree() - 2);
          f = f + gens[0].times_monomial(pad[rng() % pad.size()], Scalar::one(kGF));
        }
        ok &= expect(I.contains(f) == member_oracle(gens, f), "membership matches the oracle");
      }
    }
  }

  // betti invariance under the monomial order and variable permutation
  {
    const Field f = kGF;
    const Poly F6g = cyclic_family(6, f, OrderKind::Grevlex);
    const Ideal Ig = annihilator(Ring::make(6, f, OrderKind::Grevlex), F6g);
    const Poly F6l = cyclic_family(6, f, OrderKind::Lex);
    const Ideal Il = annihilator(Ring::make(6, f, OrderKind::Lex), F6l);
    const BettiTable tg = free_resolution(Ig).betti();
    const BettiTable tl = free_resolution(Il).betti();
    ok &= expect(tg == tl, "betti table is order independent");
    // permute variables cyclically: x_i -> x_{i+1}
    std::vector<Poly> permuted;
    for (const auto& g : Ig.gens()) {
      std::vector<Term> terms;
      for (const auto& t : g.terms()) {
        Monomial m;
        for (int v = 0; v < 6; ++v) m.e[static_cast<size_t>((v + 1) % 6)] = t.m.e[static_cast<size_t>(v)];
        m.deg = t.m.deg;
        terms.push_back({m, t.c});
      }
      permuted.push_back(Poly(Ig.ring(), terms));
    }
    const BettiTable tp = free_resolution(Ideal(Ig.ring(), permuted)).betti();
    ok &= expect(tg == tp, "betti table is permutation independent");
  }
  return ok;
}

bool criterion10_scope_honesty() {
  // Koszulness of the deviation-two family is an infinite condition; the tool
  // only ever certifies KoszulUpTo(N) plus the structure-theorem validity
  // checks, and NotKoszul verdicts carry finite witnesses.
  bool ok = true;
  for (int c : {4, 5}) {
    const KoszulCertificate cert = koszul_certificate(devtwo(c).ideal, 4, 2);
    ok &= expect(cert.verdict == KoszulCertificate::Verdict::KoszulUpTo,
                 "deviation-two c=" + std::to_string(c) + " reports KoszulUpTo, not Koszul");
    ok &= expect(cert.steps == 4, "bounded certificate depth is recorded");
    ok &= expect(devtwo(c).valid, "structure checks accompany the bounded certificate");
  }
  std::cout << "        note: KoszulUpTo(N) is evidence bounded by N; NotKoszul is exact\n";
  return ok;
}

}  // namespace

int main() {
  std::cout << "acceptance suite (exact arithmetic; fixed seeds)\n";
  criterion(1, "cyclic family c=7..10: generators, h-vector, Gorenstein symmetry",
            criterion1_family_invariants);
  criterion(2, "c=7 betti table, entry for entry", criterion2_c7_table);
  criterion(3, "non-Koszul certificates for c=7..10 (witness + residue field)",
            criterion3_non_koszul_certificates);
  criterion(4, "modified c=6 example over Q: table, h-vector, degree-2 bound",
            criterion4_modified_c6_over_q);
  criterion(5, "deviation-two closed forms at c=4,5 with KoszulUpTo(4)",
            criterion5_deviation_two_closed_forms);
  criterion(6, "h-vector transfer across 20 randomized links + structured link",
            criterion6_linkage_identity);
  criterion(7, "Euler identities, with the deviation-two coefficients",
            criterion7_euler_identities);
  criterion(8, "reg <= pd on quadratic CM corpus; equality exactly on CIs",
            criterion8_regularity_bound);
  criterion(9, "property suites: pfaffians, round trips, membership oracle, invariance",
            criterion9_property_suites);
  criterion(10, "scope honesty: bounded Koszul certificates only", criterion10_scope_honesty);
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
