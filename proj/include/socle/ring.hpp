#pragma once

#include <memory>
#include <string>
#include <vector>

#include "socle/field.hpp"
#include "socle/monomial.hpp"

namespace socle {

struct RingMismatch : std::runtime_error {
  RingMismatch() : std::runtime_error("operands live in different rings") {}
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Standard graded polynomial ring k[x0..x_{n-1}], every variable in degree 1,
/// together with the monomial order active for all arithmetic in it.
class Ring {
 public:
  static RingPtr make(int nvars, Field field, Order order, std::vector<std::string> names = {});
  static RingPtr make(int nvars, Field field, OrderKind kind = OrderKind::Grevlex,
                      std::vector<std::string> names = {});
  /// Same ring with variable names y0..y_{n-1}; used for inverse polynomials.
  static RingPtr dual_names(const RingPtr& r);

  int nvars() const { return n_; }
  const Field& field() const { return field_; }
  const Order& order() const { return order_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[static_cast<size_t>(i)]; }
  int var_index(const std::string& name) const;  // -1 when unknown

  bool compatible(const Ring& o) const {
    return n_ == o.n_ && field_ == o.field_ && order_ == o.order_;
  }

 private:
  Ring(int n, Field f, Order o, std::vector<std::string> names)
      : n_(n), field_(f), order_(o), names_(std::move(names)) {}
  int n_;
  Field field_;
  Order order_;
  std::vector<std::string> names_;
};

struct Term {
  Monomial m;
  Scalar c;
};

/// Multivariate polynomial; terms strictly descending in the ring's order,
/// coefficients nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
  /// Normalizes: sorts, merges duplicates, drops zeros.
  Poly(RingPtr ring, std::vector<Term> terms);

  static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
  static Poly constant(RingPtr ring, const Scalar& c);
  static Poly variable(RingPtr ring, int i);
  static Poly monomial(RingPtr ring, const Monomial& m, const Scalar& c);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  /// Max term degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : max_degree(); }
  bool is_homogeneous() const;

  const Monomial& lead_monomial() const { return terms_.front().m; }
  const Scalar& lead_coeff() const { return terms_.front().c; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const Scalar& c) const;
  Poly times_monomial(const Monomial& m, const Scalar& c) const;
  Poly monic() const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Coefficient of a monomial (zero scalar if absent).
  Scalar coeff(const Monomial& m) const;

  /// Re-sorts terms for a ring with a different active order (same field/vars).
  Poly with_ring(const RingPtr& r) const;

  std::string str() const;

 private:
  int max_degree() const;
  void normalize();
  RingPtr ring_;
  std::vector<Term> terms_;
};

void check_same_ring(const Poly& a, const Poly& b);

/// Graded free module ⊕ S(-twists[i]); basis element i has generator degree
/// twists[i] (the S(-d) convention, so an element with coordinate of degree e
/// in slot i has total degree e + twists[i]).
struct GradedFreeModule {
  RingPtr ring;
  std::vector<int> twists;
  int rank() const { return static_cast<int>(twists.size()); }
};

/// Element of a graded free module.
struct ModuleElement {
  GradedFreeModule module;
  std::vector<Poly> coords;

  bool is_zero() const;
  /// Total degree if homogeneous, -1 if zero; throws if inhomogeneous.
  int homogeneous_degree() const;
};

/// Square matrix of linear forms with M[i][i] = 0 and M[j][i] = -M[i][j];
/// the constructor rejects anything else.
class AlternatingMatrix {
 public:
  AlternatingMatrix(RingPtr ring, std::vector<std::vector<Poly>> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  const RingPtr& ring() const { return ring_; }
  const Poly& at(int i, int j) const {
    return entries_[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  const std::vector<std::vector<Poly>>& entries() const { return entries_; }

 private:
  RingPtr ring_;
  std::vector<std::vector<Poly>> entries_;
};

}  // namespace socle
