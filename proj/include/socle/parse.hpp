#pragma once

#include <optional>
#include <string>
#include <vector>

#include "socle/ring.hpp"

namespace socle {

struct SyntaxError : std::runtime_error {
  size_t position;
  SyntaxError(const std::string& what, size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};
struct UnknownVariable : std::runtime_error {
  explicit UnknownVariable(const std::string& name)
      : std::runtime_error("unknown variable: " + name) {}
};

/// Parses "c0*x0^2 - x1*x3 + 1/2*x2" style expressions. '*' is optional,
/// ASCII only, no parentheses.
Poly parse_poly(const std::string& text, const RingPtr& ring);

/// Contents of a .ideal / .inv input file.
struct IdealFile {
  RingPtr ring;
  std::vector<Poly> generators;          // section "ideal"
  std::optional<Poly> inverse;           // section "inverse" (y-variable polynomial)
  std::vector<std::vector<Poly>> alternating;  // section "alternating m": full m x m matrix
  bool generators_homogeneous = true;
};

/// Parses the line-oriented file format:
///   ring <n> <field>        field is q or gf:<p>
///   vars <name> ...         optional
///   ideal                   then one generator per line
///   inverse                 then one polynomial per line (summed)
///   alternating <m>         then m-1 lines of ';'-separated upper entries
/// '#' starts a comment. The inverse section uses variable names y0..y_{n-1}
/// unless vars was given.
IdealFile read_ideal_text(const std::string& text, OrderKind order = OrderKind::Grevlex);
IdealFile read_ideal_file(const std::string& path, OrderKind order = OrderKind::Grevlex);

std::string write_ideal_text(const RingPtr& ring, const std::vector<Poly>& gens);

}  // namespace socle
