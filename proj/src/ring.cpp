#include "socle/ring.hpp"

#include <algorithm>
#include <sstream>

namespace socle {

RingPtr Ring::make(int nvars, Field field, Order order, std::vector<std::string> names) {
  if (nvars < 1 || nvars > kMaxVars)
    throw std::invalid_argument("variable count out of range [1, " + std::to_string(kMaxVars) + "]");
  if (names.empty()) {
    names.reserve(static_cast<size_t>(nvars));
    for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
  }
  if (static_cast<int>(names.size()) != nvars)
    throw std::invalid_argument("variable name count does not match ring size");
  order.nvars = nvars;
  return RingPtr(new Ring(nvars, field, order, std::move(names)));
}

RingPtr Ring::make(int nvars, Field field, OrderKind kind, std::vector<std::string> names) {
  Order o;
  o.kind = kind;
  o.nvars = nvars;
  return make(nvars, field, o, std::move(names));
}

RingPtr Ring::dual_names(const RingPtr& r) {
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(r->nvars()));
  for (int i = 0; i < r->nvars(); ++i) names.push_back("y" + std::to_string(i));
  return make(r->nvars(), r->field(), r->order(), std::move(names));
}

int Ring::var_index(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

void check_same_ring(const Poly& a, const Poly& b) {
  if (!a.ring() || !b.ring()) throw RingMismatch();
  if (a.ring() == b.ring()) return;
  if (!a.ring()->compatible(*b.ring())) throw RingMismatch();
}

Poly::Poly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  normalize();
}

void Poly::normalize() {
  const Order& ord = ring_->order();
  std::sort(terms_.begin(), terms_.end(),
            [&](const Term& a, const Term& b) { return ord.cmp(a.m, b.m) > 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c += t.c;
      if (out.back().c.is_zero()) out.pop_back();
    } else if (!t.c.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
}

Poly Poly::constant(RingPtr ring, const Scalar& c) {
  Poly p(ring);
  if (!c.is_zero()) p.terms_.push_back({Monomial::one(), c});
  return p;
}

Poly Poly::variable(RingPtr ring, int i) {
  if (i < 0 || i >= ring->nvars()) throw std::out_of_range("variable index");
  Poly p(ring);
  p.terms_.push_back({Monomial::var(i), Scalar::one(ring->field())});
  return p;
}

Poly Poly::monomial(RingPtr ring, const Monomial& m, const Scalar& c) {
  Poly p(ring);
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

int Poly::max_degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.m.deg));
  return d;
}

bool Poly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.m.deg != terms_.front().m.deg) return false;
  return true;
}

Poly Poly::operator+(const Poly& o) const {
  check_same_ring(*this, o);
  const Order& ord = ring_->order();
  Poly r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const int c = ord.cmp(terms_[i].m, o.terms_[j].m);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar s = terms_[i].c + o.terms_[j].c;
      if (!s.is_zero()) r.terms_.push_back({terms_[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.m, -t.c});
  return r;
}

Poly Poly::scaled(const Scalar& c) const {
  if (c.is_zero()) return Poly(ring_);
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.m, t.c * c});
  return r;
}

Poly Poly::times_monomial(const Monomial& m, const Scalar& c) const {
  if (c.is_zero()) return Poly(ring_);
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
  return r;  // multiplying by a monomial preserves the term order
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(lead_coeff().inv());
}

Poly Poly::operator*(const Poly& o) const {
  check_same_ring(*this, o);
  if (is_zero() || o.is_zero()) return Poly(ring_);
  Poly acc(ring_);
  // multiply by the shorter operand term-by-term
  const Poly& longer = terms_.size() >= o.terms_.size() ? *this : o;
  const Poly& shorter = terms_.size() >= o.terms_.size() ? o : *this;
  for (const auto& t : shorter.terms_) acc = acc + longer.times_monomial(t.m, t.c);
  return acc;
}

bool Poly::operator==(const Poly& o) const {
  check_same_ring(*this, o);
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
  return true;
}

Scalar Poly::coeff(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.m == m) return t.c;
  return Scalar::zero(ring_->field());
}

Poly Poly::with_ring(const RingPtr& r) const {
  if (r->nvars() < ring_->nvars() || r->field() != ring_->field())
    throw RingMismatch();
  return Poly(r, terms_);
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = t.c.str();
    bool neg = false;
    if (!c.empty() && c[0] == '-') {
      neg = true;
      c = c.substr(1);
    }
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    std::vector<std::string> factors;
    if (c != "1" || t.m.is_one()) factors.push_back(c);
    for (int i = 0; i < ring_->nvars(); ++i) {
      if (t.m.e[i] == 0) continue;
      std::string f = ring_->name(i);
      if (t.m.e[i] > 1) f += "^" + std::to_string(t.m.e[i]);
      factors.push_back(f);
    }
    for (size_t k = 0; k < factors.size(); ++k) {
      if (k) out << "*";
      out << factors[k];
    }
  }
  return out.str();
}

AlternatingMatrix::AlternatingMatrix(RingPtr ring, std::vector<std::vector<Poly>> entries)
    : ring_(std::move(ring)), entries_(std::move(entries)) {
  const size_t m = entries_.size();
  for (const auto& row : entries_)
    if (row.size() != m) throw std::invalid_argument("alternating matrix must be square");
  for (size_t i = 0; i < m; ++i) {
    if (!entries_[i][i].is_zero())
      throw std::invalid_argument("alternating matrix wants a zero diagonal");
    for (size_t j = i + 1; j < m; ++j) {
      const Poly& e = entries_[i][j];
      if (!e.is_zero() && (!e.is_homogeneous() || e.degree() != 1))
        throw std::invalid_argument("alternating matrix entries must be linear forms");
      if (!(entries_[j][i] == -e))
        throw std::invalid_argument("matrix is not alternating");
    }
  }
}

bool ModuleElement::is_zero() const {
  for (const auto& p : coords)
    if (!p.is_zero()) return false;
  return true;
}

int ModuleElement::homogeneous_degree() const {
  int deg = -1;
  for (size_t i = 0; i < coords.size(); ++i) {
    const Poly& p = coords[i];
    if (p.is_zero()) continue;
    if (!p.is_homogeneous()) throw std::invalid_argument("inhomogeneous module element");
    const int d = p.degree() + module.twists[i];
    if (deg == -1) deg = d;
    if (d != deg) throw std::invalid_argument("inhomogeneous module element");
  }
  return deg;
}

}  // namespace socle
