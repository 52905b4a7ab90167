#include "socle/field.hpp"

namespace socle {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

// Extended Euclid; returns x with a*x ≡ 1 (mod p).
uint64_t invmod_u64(uint64_t a, uint64_t p) {
  if (a == 0) throw DivisionByZero();
  int64_t t = 0, newt = 1;
  int64_t r = static_cast<int64_t>(p), newr = static_cast<int64_t>(a % p);
  while (newr != 0) {
    int64_t q = r / newr;
    int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += static_cast<int64_t>(p);
  return static_cast<uint64_t>(t);
}

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set decides primality for every n < 2^64.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("gf:", 0) == 0) {
    const std::string num = text.substr(3);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad field spec: " + text);
    return prime(std::stoull(num));
  }
  throw std::invalid_argument("bad field spec (want q or gf:<p>): " + text);
}

std::string Field::str() const {
  return kind_ == FieldKind::Rationals ? "q" : "gf:" + std::to_string(p_);
}

Scalar Scalar::zero(const Field& f) {
  if (f.kind() == FieldKind::Rationals) return Scalar(mpq_class(0));
  return Scalar(Residue{0, f.modulus()});
}

Scalar Scalar::one(const Field& f) {
  if (f.kind() == FieldKind::Rationals) return Scalar(mpq_class(1));
  return Scalar(Residue{1 % f.modulus(), f.modulus()});
}

Scalar Scalar::of_int(const Field& f, long long v) {
  if (f.kind() == FieldKind::Rationals) return Scalar(mpq_class(static_cast<long>(v)));
  const uint64_t p = f.modulus();
  int64_t r = static_cast<int64_t>(v % static_cast<long long>(p));
  if (r < 0) r += static_cast<int64_t>(p);
  return Scalar(Residue{static_cast<uint64_t>(r), p});
}

Scalar Scalar::of_ratio(const Field& f, long long num, long long den) {
  if (den == 0) throw DivisionByZero();
  return of_int(f, num) / of_int(f, den);
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (f.kind() == FieldKind::Rationals) {
      mpq_class q;
      if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad scalar: " + text);
      q.canonicalize();
      return Scalar(q);
    }
    return of_int(f, std::stoll(text));
  }
  if (f.kind() == FieldKind::Rationals) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad scalar: " + text);
    if (q.get_den() == 0) throw DivisionByZero();
    q.canonicalize();
    return Scalar(q);
  }
  return of_int(f, std::stoll(text.substr(0, slash))) / of_int(f, std::stoll(text.substr(slash + 1)));
}

bool Scalar::is_zero() const {
  if (auto* r = std::get_if<Residue>(&rep_)) return r->v == 0;
  return std::get<mpq_class>(rep_) == 0;
}

bool Scalar::is_one() const {
  if (auto* r = std::get_if<Residue>(&rep_)) return r->v == 1;
  return std::get<mpq_class>(rep_) == 1;
}

#define SOCLE_BINOP_PROLOGUE(o)                                        \
  const Residue* ra = std::get_if<Residue>(&rep_);                     \
  const Residue* rb = std::get_if<Residue>(&o.rep_);                   \
  if ((ra == nullptr) != (rb == nullptr)) throw FieldMismatch();       \
  if (ra && ra->p != rb->p) throw FieldMismatch();

Scalar Scalar::operator+(const Scalar& o) const {
  SOCLE_BINOP_PROLOGUE(o)
  if (ra) {
    uint64_t s = ra->v + rb->v;  // p < 2^63 would be enough; moduli are < 2^64, guard via subtraction
    if (s < ra->v || s >= ra->p) s -= ra->p;
    return Scalar(Residue{s, ra->p});
  }
  return Scalar(mpq_class(std::get<mpq_class>(rep_) + std::get<mpq_class>(o.rep_)));
}

Scalar Scalar::operator-(const Scalar& o) const {
  SOCLE_BINOP_PROLOGUE(o)
  if (ra) {
    uint64_t s = ra->v >= rb->v ? ra->v - rb->v : ra->p - (rb->v - ra->v);
    return Scalar(Residue{s, ra->p});
  }
  return Scalar(mpq_class(std::get<mpq_class>(rep_) - std::get<mpq_class>(o.rep_)));
}

Scalar Scalar::operator*(const Scalar& o) const {
  SOCLE_BINOP_PROLOGUE(o)
  if (ra) return Scalar(Residue{mulmod_u64(ra->v, rb->v, ra->p), ra->p});
  return Scalar(mpq_class(std::get<mpq_class>(rep_) * std::get<mpq_class>(o.rep_)));
}

Scalar Scalar::operator/(const Scalar& o) const {
  SOCLE_BINOP_PROLOGUE(o)
  if (ra) {
    if (rb->v == 0) throw DivisionByZero();
    return Scalar(Residue{mulmod_u64(ra->v, invmod_u64(rb->v, ra->p), ra->p), ra->p});
  }
  const mpq_class& d = std::get<mpq_class>(o.rep_);
  if (d == 0) throw DivisionByZero();
  return Scalar(mpq_class(std::get<mpq_class>(rep_) / d));
}

#undef SOCLE_BINOP_PROLOGUE

Scalar Scalar::operator-() const {
  if (auto* r = std::get_if<Residue>(&rep_))
    return Scalar(Residue{r->v == 0 ? 0 : r->p - r->v, r->p});
  return Scalar(mpq_class(-std::get<mpq_class>(rep_)));
}

Scalar Scalar::inv() const {
  if (auto* r = std::get_if<Residue>(&rep_)) return Scalar(Residue{invmod_u64(r->v, r->p), r->p});
  const mpq_class& q = std::get<mpq_class>(rep_);
  if (q == 0) throw DivisionByZero();
  return Scalar(mpq_class(1 / q));
}

bool Scalar::operator==(const Scalar& o) const {
  if (rep_.index() != o.rep_.index()) throw FieldMismatch();
  if (auto* r = std::get_if<Residue>(&rep_)) {
    auto* s = std::get_if<Residue>(&o.rep_);
    if (r->p != s->p) throw FieldMismatch();
    return r->v == s->v;
  }
  return std::get<mpq_class>(rep_) == std::get<mpq_class>(o.rep_);
}

std::string Scalar::str() const {
  if (auto* r = std::get_if<Residue>(&rep_)) return std::to_string(r->v);
  return std::get<mpq_class>(rep_).get_str();
}

uint64_t Scalar::residue() const { return std::get<Residue>(rep_).v; }

const mpq_class& Scalar::rational() const { return std::get<mpq_class>(rep_); }

}  // namespace socle
