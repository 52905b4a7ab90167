#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <stdexcept>

namespace socle {

/// Hard cap on ring size; tensor constructions stay well below it.
inline constexpr int kMaxVars = 24;
/// Exponent guard; the degrees in this library are single digits.
inline constexpr int kMaxExponent = 200;

/// Exponent vector with cached total degree. Entries beyond the ring's
/// variable count are zero, so monomials from rings of different sizes
/// compare and hash consistently.
struct Monomial {
  std::array<uint8_t, kMaxVars> e{};
  uint16_t deg = 0;

  static Monomial one() { return Monomial{}; }
  static Monomial var(int i, int power = 1) {
    Monomial m;
    m.e[static_cast<size_t>(i)] = static_cast<uint8_t>(power);
    m.deg = static_cast<uint16_t>(power);
    return m;
  }

  bool is_one() const { return deg == 0; }

  bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      const int s = e[i] + o.e[i];
      if (s > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
      r.e[i] = static_cast<uint8_t>(s);
    }
    r.deg = static_cast<uint16_t>(deg + o.deg);
    return r;
  }

  bool divides(const Monomial& o) const {
    if (deg > o.deg) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }

  /// Quotient o.divided_by(this) caller-checked; asserts componentwise >=.
  Monomial divided_by(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      if (e[i] < o.e[i]) throw std::invalid_argument("monomial division is not exact");
      r.e[i] = static_cast<uint8_t>(e[i] - o.e[i]);
    }
    r.deg = static_cast<uint16_t>(deg - o.deg);
    return r;
  }

  Monomial lcm(const Monomial& o) const {
    Monomial r;
    int d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      r.e[i] = std::max(e[i], o.e[i]);
      d += r.e[i];
    }
    r.deg = static_cast<uint16_t>(d);
    return r;
  }

  Monomial gcd(const Monomial& o) const {
    Monomial r;
    int d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      r.e[i] = std::min(e[i], o.e[i]);
      d += r.e[i];
    }
    r.deg = static_cast<uint16_t>(d);
    return r;
  }

  bool coprime_with(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] && o.e[i]) return false;
    return true;
  }
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const {
    uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < kMaxVars; ++i) {
      h ^= m.e[i];
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

enum class OrderKind { Grevlex, Lex, Grlex };

/// Monomial order on a ring with n variables, x0 > x1 > ... > x_{n-1}.
/// When elim_last is set, the final variable dominates (lex block on it,
/// grevlex on the rest); used internally for elimination.
struct Order {
  OrderKind kind = OrderKind::Grevlex;
  int nvars = 0;
  bool elim_last = false;

  static Order grevlex(int n) { return Order{OrderKind::Grevlex, n, false}; }
  static Order lex(int n) { return Order{OrderKind::Lex, n, false}; }
  static Order grlex(int n) { return Order{OrderKind::Grlex, n, false}; }
  static Order elim(int n) { return Order{OrderKind::Grevlex, n, true}; }

  /// Returns <0, 0, >0 as a < b, a == b, a > b.
  int cmp(const Monomial& a, const Monomial& b) const {
    if (elim_last) {
      const int last = nvars - 1;
      if (a.e[last] != b.e[last]) return a.e[last] < b.e[last] ? -1 : 1;
      return cmp_base(a, b, last);
    }
    if (kind == OrderKind::Grevlex) {
      // exponents beyond nvars are zero, so the cached degree is usable
      if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
      for (int i = nvars - 1; i >= 0; --i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
      return 0;
    }
    return cmp_base(a, b, nvars);
  }

  bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

  bool operator==(const Order& o) const {
    return kind == o.kind && nvars == o.nvars && elim_last == o.elim_last;
  }

 private:
  int cmp_base(const Monomial& a, const Monomial& b, int n) const {
    switch (kind) {
      case OrderKind::Lex:
        for (int i = 0; i < n; ++i)
          if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        return 0;
      case OrderKind::Grlex:
        if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
        for (int i = 0; i < n; ++i)
          if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        return 0;
      case OrderKind::Grevlex:
      default: {
        int da = 0, db = 0;
        for (int i = 0; i < n; ++i) da += a.e[i];
        for (int i = 0; i < n; ++i) db += b.e[i];
        if (da != db) return da < db ? -1 : 1;
        for (int i = n - 1; i >= 0; --i)
          if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
        return 0;
      }
    }
  }
};

}  // namespace socle
