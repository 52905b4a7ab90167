#pragma once

#include <optional>
#include <string>

#include "socle/resolution.hpp"

namespace socle {

struct NotQuadratic : std::runtime_error {
  NotQuadratic() : std::runtime_error("ideal is not generated by quadrics") {}
};

/// Artinian quotient R = S/I with its standard monomial basis per degree and
/// per-variable multiplication tables over the coefficient field.
class QuotientRing {
 public:
  explicit QuotientRing(Ideal I);

  const Ideal& ideal() const { return ideal_; }
  const RingPtr& ring() const { return ideal_.ring(); }
  int socle_degree() const { return socle_; }
  int dim(int d) const {
    return d < 0 || d > socle_ ? 0 : static_cast<int>(basis_[static_cast<size_t>(d)].size());
  }
  const std::vector<Monomial>& basis(int d) const { return basis_[static_cast<size_t>(d)]; }
  /// Column j: coordinates of x_var * basis(d)[j] over basis(d+1).
  const std::vector<std::vector<Scalar>>& mult(int var, int d) const {
    return tables_[static_cast<size_t>(d)][static_cast<size_t>(var)];
  }

 private:
  Ideal ideal_;
  int socle_ = 0;
  std::vector<std::vector<Monomial>> basis_;
  // tables_[d][var][col] = image vector of length dim(d+1)
  std::vector<std::vector<std::vector<std::vector<Scalar>>>> tables_;
};

/// Graded Betti numbers of the residue field over R, by degreewise linear
/// algebra on a minimal R-free resolution of k: step i <= steps, internal
/// degree j <= i + degree_slack. With stop_at_off_diagonal the walk returns
/// as soon as some β_{i,j} with j != i is found (the reported entries stay
/// exact; later entries are simply not computed).
struct ResidueBetti {
  std::map<std::pair<int, int>, long long> betti;
  int steps = 0;
  int slack = 0;
  bool stopped_early = false;
};
ResidueBetti resolve_residue_field(const QuotientRing& R, int steps, int degree_slack,
                                   bool stop_at_off_diagonal = false);

struct KoszulCertificate {
  enum class Verdict { KoszulUpTo, NotKoszul };
  Verdict verdict = Verdict::KoszulUpTo;
  int steps = 0;  // N: NotKoszul is exact; KoszulUpTo(N) is evidence bounded by N
  int slack = 0;
  int off_i = -1, off_j = -1;
  long long off_beta = 0;
  std::string reason;
  std::map<std::pair<int, int>, long long> betti;
  std::string field;
};

/// Immediate NotKoszul when I is not generated by quadrics; otherwise scans
/// the residue-field Betti table for an off-diagonal entry.
KoszulCertificate koszul_certificate(const Ideal& I, int steps = 4, int slack = 2,
                                     bool stop_at_off_diagonal = true);

/// Quadratic first syzygy outside the submodule Z spanned by S_1 times the
/// linear syzygies and the Koszul syzygies, by exact linear algebra in
/// internal degree 4. A witness certifies that R is not Koszul.
struct SyzygyObstruction {
  bool found = false;
  ModuleElement witness;      // coordinates against minimal_generators(I)
  long long syzygy_dim = 0;   // dim of the degree-4 part of syz^1(I)
  long long z_dim = 0;        // dim of the degree-4 part of Z
};
SyzygyObstruction syzygy_obstruction(const Ideal& I);

/// NotKoszul when β_{2,4} > C(β_{1,2}, 2); Inconclusive otherwise.
struct Degree2BoundReport {
  bool fires = false;  // fires => NotKoszul
  long long beta_2_4 = 0;
  long long beta_1_2 = 0;
  long long bound = 0;
};
Degree2BoundReport degree2_betti_bound(const BettiTable& t);

}  // namespace socle
