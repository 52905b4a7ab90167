#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace socle {

struct FieldMismatch : std::runtime_error {
  FieldMismatch() : std::runtime_error("scalars belong to different fields") {}
};
struct DivisionByZero : std::runtime_error {
  DivisionByZero() : std::runtime_error("division by zero") {}
};

enum class FieldKind { Rationals, PrimeField };

/// Deterministic Miller-Rabin, valid for all moduli < 2^64.
bool is_prime_u64(uint64_t n);

/// Coefficient field descriptor: the rationals, or Z/p for prime p.
class Field {
 public:
  static Field rationals() { return Field(FieldKind::Rationals, 0); }
  static Field prime(uint64_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
    return Field(FieldKind::PrimeField, p);
  }
  /// Parses "q" or "gf:<p>".
  static Field parse(const std::string& text);

  FieldKind kind() const { return kind_; }
  uint64_t modulus() const { return p_; }
  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }
  std::string str() const;

 private:
  Field(FieldKind k, uint64_t p) : kind_(k), p_(p) {}
  FieldKind kind_;
  uint64_t p_;
};

/// Exact field element: reduced fraction over Q, or canonical residue in [0,p).
/// A scalar knows its own field, so mixed-field arithmetic throws rather than
/// corrupting values.
class Scalar {
 public:
  Scalar() : rep_(Residue{0, 0}) {}  // zero of an unspecified prime field; usable only as placeholder

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar of_int(const Field& f, long long v);
  static Scalar of_ratio(const Field& f, long long num, long long den);
  /// Accepts "a", "-a", "a/b".
  static Scalar parse(const Field& f, const std::string& text);

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return std::holds_alternative<mpq_class>(rep_); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inv() const;
  Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
  Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
  Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

  /// Residue value for prime-field scalars.
  uint64_t residue() const;
  /// Rational value for Q scalars.
  const mpq_class& rational() const;

 private:
  struct Residue {
    uint64_t v;
    uint64_t p;
    bool operator==(const Residue& o) const { return v == o.v && p == o.p; }
  };
  explicit Scalar(Residue r) : rep_(r) {}
  explicit Scalar(mpq_class q) : rep_(std::move(q)) {}

  std::variant<Residue, mpq_class> rep_;
};

}  // namespace socle
