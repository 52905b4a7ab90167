#pragma once

#include <random>

#include "socle/resolution.hpp"

namespace socle {

struct PreconditionUnmet : std::runtime_error {
  explicit PreconditionUnmet(const std::string& what) : std::runtime_error(what) {}
};
struct OddSize : std::runtime_error {
  OddSize() : std::runtime_error("pfaffian wants an even matrix; use submaximal_pfaffians") {}
};
struct EvenSize : std::runtime_error {
  EvenSize() : std::runtime_error("submaximal pfaffians want an odd matrix") {}
};

/// Pfaffian of an even alternating matrix, by expansion along the first row;
/// Pf(M)^2 = det(M).
Poly pfaffian(const AlternatingMatrix& m);

/// The m signed submaximal Pfaffians of an odd alternating matrix; pf_k
/// carries sign (-1)^(k+1) so that M . pf = 0 identically.
std::vector<Poly> submaximal_pfaffians(const AlternatingMatrix& m);

/// Determinant of a square polynomial matrix (subset-memoized expansion).
Poly determinant(const RingPtr& ring, const std::vector<std::vector<Poly>>& m);

/// I = Pf(M) + (extra quadrics): the deviation-two shape.
struct DeviationTwoSpec {
  AlternatingMatrix m;  // 5x5, linear entries
  std::vector<Poly> extra_quadrics;
};

struct DeviationTwoReport {
  Ideal ideal;
  int codim = 0;  // intended c = 3 + #extra
  bool pfaffian_height_3 = false;
  bool extras_regular = false;
  bool height_is_c = false;
  bool betti_matches_closed_form = false;
  bool multiplicity_matches = false;  // e(R) = 5 * 2^(c-3)
  bool regularity_matches = false;    // reg = c - 1
  bool valid = false;
  BettiTable betti;
  std::vector<long long> h_vector;
};

/// Builds and verifies a deviation-two instance; failures are reported in the
/// flags, not thrown.
DeviationTwoReport build_deviation_two(const DeviationTwoSpec& spec);

/// Random 5x5 alternating matrix of linear forms in c variables plus c-3
/// random extra quadrics over the given field (seeded, reproducible).
DeviationTwoSpec random_deviation_two(int c, const Field& field, uint64_t seed);

struct LinkReport {
  Ideal linked;                         // J = (L : I)
  bool self_link = false;               // I = L, J = (1)
  int height = 0;
  std::vector<long long> h_i;           // h-vector of S/I
  std::vector<long long> h_j;           // h-vector of S/J
  bool identity_holds = false;          // h_i(S/I) = C(c,i) - h_{c-i}(S/J)
  bool cm_checked = false;              // S/I verified Cohen-Macaulay
};

/// J = (L : I) with the h-vector transfer identity verified. Preconditions
/// (quadratic CI L inside I of the same height) throw PreconditionUnmet.
LinkReport link(const Ideal& L, const Ideal& I);

enum class HVectorFamily { AlmostCompleteIntersection, DeviationTwo };

/// Computed h-vector against the family's closed form at c = height(I).
bool hvector_matches_family(const Ideal& I, HVectorFamily family);

/// I + I' in a combined ring on disjoint variables.
Ideal tensor_product(const Ideal& a, const Ideal& b);

struct ArtinianReductionResult {
  Ideal ideal;
  bool ok = false;         // numerator preserved
  int forms_used = 0;
  uint64_t seed = 0;
};

/// Quotients by random linear forms (eliminating one variable per form) until
/// the quotient is Artinian; verifies the K-polynomial is unchanged and
/// reports failure rather than guessing.
ArtinianReductionResult artinian_reduction(const Ideal& I, uint64_t seed, int max_attempts = 8);

// --- randomized corpus helpers (deterministic in the seed) ---

Scalar random_scalar(const Field& f, std::mt19937_64& rng);
Poly random_form(const RingPtr& ring, int degree, std::mt19937_64& rng);

}  // namespace socle
