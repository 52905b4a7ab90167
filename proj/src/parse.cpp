#include "socle/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace socle {

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  void expect_ascii() {
    if (i < s.size() && static_cast<unsigned char>(s[i]) > 127)
      throw SyntaxError("non-ASCII input rejected", i);
  }
};

std::string read_uint(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  if (c.i == start) throw SyntaxError("expected a number", c.i);
  return c.s.substr(start, c.i - start);
}

std::string read_ident(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  if (c.i >= c.s.size() || !(std::isalpha(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '_'))
    throw SyntaxError("expected an identifier", c.i);
  while (c.i < c.s.size() &&
         (std::isalnum(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '_'))
    ++c.i;
  return c.s.substr(start, c.i - start);
}

// term := coefficient? ('*'? var ('^' int)?)*
Term parse_term(Cursor& c, const RingPtr& ring) {
  const Field& F = ring->field();
  Scalar coeff = Scalar::one(F);
  Monomial mono = Monomial::one();
  bool saw_factor = false;

  c.skip_ws();
  c.expect_ascii();
  if (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
    std::string num = read_uint(c);
    if (c.peek() == '/') {
      ++c.i;
      std::string den = read_uint(c);
      coeff = Scalar::parse(F, num + "/" + den);
    } else {
      coeff = Scalar::parse(F, num);
    }
    saw_factor = true;
  }
  for (;;) {
    c.skip_ws();
    c.expect_ascii();
    if (c.i < c.s.size() && c.s[c.i] == '*') {
      ++c.i;
      c.skip_ws();
    }
    if (c.i >= c.s.size() ||
        !(std::isalpha(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '_'))
      break;
    const size_t at = c.i;
    std::string name = read_ident(c);
    const int v = ring->var_index(name);
    if (v < 0) {
      (void)at;
      throw UnknownVariable(name);
    }
    int exp = 1;
    if (c.peek() == '^') {
      ++c.i;
      exp = std::stoi(read_uint(c));
    }
    for (int k = 0; k < exp; ++k) mono = mono * Monomial::var(v);
    saw_factor = true;
  }
  if (!saw_factor) throw SyntaxError("expected a term", c.i);
  return Term{mono, coeff};
}

}  // namespace

Poly parse_poly(const std::string& text, const RingPtr& ring) {
  Cursor c{text};
  std::vector<Term> terms;
  bool negate = false;
  if (c.peek() == '+') {
    ++c.i;
  } else if (c.peek() == '-') {
    negate = true;
    ++c.i;
  }
  for (;;) {
    Term t = parse_term(c, ring);
    if (negate) t.c = -t.c;
    terms.push_back(std::move(t));
    if (c.done()) break;
    const char op = c.peek();
    if (op == '+') {
      negate = false;
      ++c.i;
    } else if (op == '-') {
      negate = true;
      ++c.i;
    } else {
      throw SyntaxError(std::string("unexpected character '") + op + "'", c.i);
    }
  }
  return Poly(ring, std::move(terms));
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string strip_comment(const std::string& line) {
  const auto h = line.find('#');
  return h == std::string::npos ? line : line.substr(0, h);
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

IdealFile read_ideal_text(const std::string& text, OrderKind order) {
  std::istringstream in(text);
  std::string line;
  IdealFile out;
  int nvars = 0;
  Field field = Field::rationals();
  std::vector<std::string> names;
  bool have_ring = false;

  enum class Section { None, Ideal, Inverse, Alternating } section = Section::None;
  int alt_size = 0;
  std::vector<std::string> alt_lines;
  std::vector<std::string> gen_lines;
  std::vector<std::string> inv_lines;

  while (std::getline(in, line)) {
    line = strip_comment(line);
    if (blank(line)) continue;
    auto toks = split_ws(line);
    const std::string& head = toks[0];
    if (head == "ring") {
      if (toks.size() != 3) throw std::runtime_error("ring line wants: ring <n> <field>");
      nvars = std::stoi(toks[1]);
      field = Field::parse(toks[2]);
      have_ring = true;
    } else if (head == "vars") {
      names.assign(toks.begin() + 1, toks.end());
    } else if (head == "ideal") {
      section = Section::Ideal;
    } else if (head == "inverse") {
      section = Section::Inverse;
    } else if (head == "alternating") {
      if (toks.size() != 2) throw std::runtime_error("alternating line wants: alternating <m>");
      alt_size = std::stoi(toks[1]);
      section = Section::Alternating;
    } else {
      switch (section) {
        case Section::Ideal:
          gen_lines.push_back(line);
          break;
        case Section::Inverse:
          inv_lines.push_back(line);
          break;
        case Section::Alternating:
          alt_lines.push_back(line);
          break;
        case Section::None:
          throw std::runtime_error("content before a section header: " + line);
      }
    }
  }
  if (!have_ring) throw std::runtime_error("missing ring header");

  if (!inv_lines.empty() && names.empty()) {
    for (int i = 0; i < nvars; ++i) names.push_back("y" + std::to_string(i));
  }
  out.ring = Ring::make(nvars, field, order, names);

  for (const auto& g : gen_lines) {
    Poly p = parse_poly(g, out.ring);
    if (!p.is_homogeneous()) out.generators_homogeneous = false;
    if (!p.is_zero()) out.generators.push_back(std::move(p));
  }
  if (!inv_lines.empty()) {
    Poly f = Poly::zero(out.ring);
    for (const auto& l : inv_lines) f = f + parse_poly(l, out.ring);
    out.inverse = f;
  }
  if (alt_size > 0) {
    if (static_cast<int>(alt_lines.size()) != alt_size - 1)
      throw std::runtime_error("alternating section wants " + std::to_string(alt_size - 1) +
                               " rows of upper entries");
    std::vector<std::vector<Poly>> m(static_cast<size_t>(alt_size),
                                     std::vector<Poly>(static_cast<size_t>(alt_size), Poly::zero(out.ring)));
    for (int i = 0; i < alt_size - 1; ++i) {
      std::vector<std::string> cells;
      std::string cell;
      std::istringstream row(alt_lines[static_cast<size_t>(i)]);
      while (std::getline(row, cell, ';')) cells.push_back(cell);
      if (static_cast<int>(cells.size()) != alt_size - 1 - i)
        throw std::runtime_error("alternating row " + std::to_string(i) + " wants " +
                                 std::to_string(alt_size - 1 - i) + " entries");
      for (int j = i + 1; j < alt_size; ++j) {
        Poly e = parse_poly(cells[static_cast<size_t>(j - i - 1)], out.ring);
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] = e;
        m[static_cast<size_t>(j)][static_cast<size_t>(i)] = -e;
      }
    }
    out.alternating = std::move(m);
  }
  return out;
}

IdealFile read_ideal_file(const std::string& path, OrderKind order) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return read_ideal_text(buf.str(), order);
}

std::string write_ideal_text(const RingPtr& ring, const std::vector<Poly>& gens) {
  std::ostringstream out;
  out << "ring " << ring->nvars() << " " << ring->field().str() << "\n";
  out << "vars";
  for (int i = 0; i < ring->nvars(); ++i) out << " " << ring->name(i);
  out << "\nideal\n";
  for (const auto& g : gens) out << g.str() << "\n";
  return out.str();
}

}  // namespace socle
