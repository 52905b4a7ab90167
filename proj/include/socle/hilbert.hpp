#pragma once

#include <vector>

#include "socle/groebner.hpp"

namespace socle {

/// Hilbert data of a graded quotient S/I: the K-polynomial numerator
/// H(t)*(1-t)^n, the Krull dimension, and the h-vector (numerator divided by
/// (1-t)^codim). Negative h-entries flag that the h-vector is not the
/// Cohen-Macaulay one (reported, never asserted).
struct HilbertData {
  std::vector<long long> numerator;
  int dim = 0;
  int nvars = 0;
  std::vector<long long> h_vector;
  long long multiplicity = 0;
  bool h_nonnegative = true;

  /// Value of the Hilbert function of S/I in degree d.
  long long value(int d) const;
};

/// K-polynomial of S/(monomial ideal), by pivot-variable recursion.
std::vector<long long> kpolynomial(const std::vector<Monomial>& monomial_gens, int nvars);

HilbertData hilbert(const Ideal& I);

/// Coefficientwise product (tensor product of quotients multiplies numerators).
std::vector<long long> poly_mult(const std::vector<long long>& a, const std::vector<long long>& b);

}  // namespace socle
