#pragma once

#include "socle/groebner.hpp"

namespace socle {

struct ZeroInput : std::runtime_error {
  ZeroInput() : std::runtime_error("inverse polynomial must be nonzero") {}
};
struct TooFewVariables : std::runtime_error {
  TooFewVariables() : std::runtime_error("cyclic family wants at least 3 variables") {}
};

/// Inverse polynomials live in the contraction module D = k[y0..y_{c-1}],
/// represented as Poly over a mirror ring with y-names. The S-action is
/// contraction: x^a . y^b = y^{b-a} when b >= a componentwise, else 0.

/// Mirror of an x-ring with variables renamed y0..y_{n-1}.
RingPtr contraction_ring(const RingPtr& xring);

/// Contraction action f . F (f in the x-ring, F in the y-ring; matching
/// variable counts and fields). Bilinear; (fg).F = f.(g.F).
Poly contract(const Poly& f, const Poly& F);

/// Annihilator ideal (0 :_S F) of a nonzero homogeneous inverse polynomial,
/// as its minimal generators: degreewise kernels of the contraction pairing,
/// reduced modulo S_1 times the lower-degree part. The top degree r+1 is
/// handled through the Hilbert function of the partial ideal.
Ideal annihilator(const RingPtr& xring, const Poly& F);

/// Minimal generators of the inverse system (0 :_D I) of an Artinian ideal,
/// as y-ring polynomials, highest degree first. Gorenstein quotients yield
/// exactly one generator, in the socle degree.
std::vector<Poly> dual_module(const Ideal& I, int degree_bound = -1);

/// F = sum over i in Z/cZ of y_i y_{i+1} y_{i+2}^2.
Poly cyclic_family(int c, const Field& field, OrderKind order = OrderKind::Grevlex);
Poly cyclic_family(const RingPtr& yring);

/// The modified c = 6 polynomial: cyclic_family(6) + y0 y5 y4^2 + y0 y5^3.
Poly modified_c6(const Field& field, OrderKind order = OrderKind::Grevlex);

}  // namespace socle
