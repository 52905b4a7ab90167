#pragma once

#include <optional>
#include <vector>

#include "socle/ring.hpp"

namespace socle {

struct NonHomogeneous : std::runtime_error {
  NonHomogeneous() : std::runtime_error("operation wants a homogeneous ideal") {}
};
struct UnitIdeal : std::runtime_error {
  UnitIdeal() : std::runtime_error("operation undefined for the unit ideal") {}
};
struct NotArtinian : std::runtime_error {
  NotArtinian() : std::runtime_error("quotient is not Artinian") {}
};

/// Term of a free-module element: component index and monomial.
struct VTerm {
  int comp;
  Monomial m;
  bool operator==(const VTerm& o) const { return comp == o.comp && m == o.m; }
};

struct VEntry {
  VTerm t;
  Scalar c;
};

/// Module monomial order over a fixed ring order. Schreyer orders carry the
/// accumulated lead monomials of the generators they were induced by; ties on
/// the weighted monomial break toward the smaller component.
struct ModOrder {
  enum class Kind { POT, TOP, Schreyer };
  Order base;
  Kind kind = Kind::POT;
  std::vector<Monomial> via;  // Schreyer only

  static ModOrder pot(const Order& base) { return ModOrder{base, Kind::POT, {}}; }
  static ModOrder top(const Order& base) { return ModOrder{base, Kind::TOP, {}}; }
  static ModOrder schreyer(const Order& base, std::vector<Monomial> via) {
    return ModOrder{base, Kind::Schreyer, std::move(via)};
  }

  int cmp(const VTerm& a, const VTerm& b) const {
    switch (kind) {
      case Kind::POT:
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return base.cmp(a.m, b.m);
      case Kind::TOP: {
        const int c = base.cmp(a.m, b.m);
        if (c != 0) return c;
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return 0;
      }
      case Kind::Schreyer:
      default: {
        const int c = base.cmp(a.m * via[static_cast<size_t>(a.comp)],
                               b.m * via[static_cast<size_t>(b.comp)]);
        if (c != 0) return c;
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return 0;
      }
    }
  }
};

/// Element of a free module, terms strictly descending in a ModOrder.
class Vec {
 public:
  Vec() = default;
  const std::vector<VEntry>& entries() const { return e_; }
  std::vector<VEntry>& entries() { return e_; }
  bool is_zero() const { return e_.empty(); }
  const VTerm& lead() const { return e_.front().t; }
  const Scalar& lead_coeff() const { return e_.front().c; }

  static Vec from_terms(const ModOrder& ord, std::vector<VEntry> entries);
  static Vec from_poly(const Poly& p, int comp = 0);

  Vec plus(const ModOrder& ord, const Vec& o) const;
  Vec minus(const ModOrder& ord, const Vec& o) const;
  Vec times_monomial(const Monomial& m, const Scalar& c) const;
  Vec scaled(const Scalar& c) const;
  Vec negated() const;

  /// Gathers the coordinate in one component as a polynomial.
  Poly coord(const RingPtr& ring, int comp) const;
  int max_comp() const;

 private:
  std::vector<VEntry> e_;
};

/// Reduced Groebner basis of an ideal (module bases are engine-internal).
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Poly> gens;  // monic, interreduced, descending leads
  bool reduced = true;
};

/// Homogeneous ideal with cached derived data. Immutable: derived caches are
/// computed on demand and never invalidated.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Poly> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& gens() const { return gens_; }
  bool is_homogeneous() const;

  const GroebnerBasis& groebner() const;
  /// Lead monomials of the reduced GB (minimal generators of the initial ideal).
  std::vector<Monomial> initial_gens() const;

  Poly normal_form(const Poly& f) const;
  bool contains(const Poly& f) const { return normal_form(f).is_zero(); }
  bool contains_ideal(const Ideal& o) const;
  bool equals(const Ideal& o) const;
  bool is_unit() const;
  bool is_zero_ideal() const;

  /// Krull dimension of S/I and height of I, from the initial ideal.
  int krull_dim() const;
  int height() const { return ring_->nvars() - krull_dim(); }
  bool is_artinian() const { return krull_dim() == 0; }

  /// Minimal homogeneous generators, degree by degree.
  const std::vector<Poly>& minimal_generators() const;

 private:
  RingPtr ring_;
  std::vector<Poly> gens_;
  mutable std::optional<GroebnerBasis> gb_;
  mutable std::optional<int> dim_;
  mutable std::optional<std::vector<Poly>> mingens_;
};

// --- engine entry points ---

GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Poly>& gens);
Poly normal_form(const Poly& f, const GroebnerBasis& gb);

/// Generating set of the first syzygy module of `gens` (not necessarily
/// minimal), expressed on the given generators: Schreyer syzygies of the GB
/// pulled back through the change of basis.
std::vector<ModuleElement> syzygies(const RingPtr& ring, const std::vector<Poly>& gens);

/// Module membership: is v in the submodule of S(-twists)^r generated by gens?
bool module_contains(const GradedFreeModule& mod, const std::vector<ModuleElement>& gens,
                     const ModuleElement& v);

Ideal colon(const Ideal& a, const Poly& b);
Ideal colon(const Ideal& a, const Ideal& b);
Ideal intersect(const Ideal& a, const Ideal& b);

/// Each element a nonzerodivisor modulo the ideal plus its predecessors,
/// tested via colon: (J : f) = J.
bool is_regular_sequence(const std::vector<Poly>& seq, const Ideal& modulo);

/// Exact division f / g; throws when not divisible.
Poly exact_divide(const Poly& f, const Poly& g);

// --- engine internals shared with the resolution builder ---

/// Reducers bucketed by lead component, for repeated division against one basis.
struct ReducerIndex {
  std::vector<std::vector<int>> bycomp;
  ReducerIndex() = default;
  explicit ReducerIndex(const std::vector<Vec>& basis);
};

/// Full normal form of f against basis (sorted leads not required). When
/// trail_out is set, records quotients: f = sum(q_i * basis_i) + remainder.
Vec vec_normal_form(const ModOrder& ord, Vec f, const std::vector<Vec>& basis,
                    std::vector<std::vector<std::pair<Monomial, Scalar>>>* trail_out = nullptr);
Vec vec_normal_form(const ModOrder& ord, Vec f, const std::vector<Vec>& basis,
                    const ReducerIndex& index,
                    std::vector<std::vector<std::pair<Monomial, Scalar>>>* trail_out);

struct ModuleGB {
  std::vector<Vec> basis;
  // expression of each basis element in the original generators (when tracked)
  std::vector<std::vector<Poly>> trails;
};

/// Buchberger for submodules of a free module. When track_trails is set, each
/// basis element carries its expression in the input generators.
ModuleGB module_buchberger(const RingPtr& ring, const ModOrder& ord, std::vector<Vec> gens,
                           bool track_trails);

}  // namespace socle
