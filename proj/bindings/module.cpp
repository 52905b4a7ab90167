#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "socle/construct.hpp"
#include "socle/inverse.hpp"
#include "socle/koszul.hpp"
#include "socle/parse.hpp"
#include "socle/report.hpp"

namespace py = pybind11;
using namespace socle;
using nlohmann::json;

namespace {

RingPtr make_ring(int nvars, const std::string& field, const std::string& order,
                  std::vector<std::string> names = {}) {
  OrderKind kind = OrderKind::Grevlex;
  if (order == "lex") kind = OrderKind::Lex;
  if (order == "grlex") kind = OrderKind::Grlex;
  return Ring::make(nvars, Field::parse(field), kind, std::move(names));
}

Ideal ideal_from_strings(const RingPtr& ring, const std::vector<std::string>& gens) {
  std::vector<Poly> ps;
  for (const auto& g : gens) ps.push_back(parse_poly(g, ring));
  return Ideal(ring, std::move(ps));
}

json full_report(const Ideal& I, int steps, int slack) {
  json doc;
  doc["ring"] = ring_to_json(I.ring());
  json gens = json::array();
  for (const auto& g : I.minimal_generators()) gens.push_back(g.str());
  doc["minimal_generators"] = gens;
  const HilbertData h = hilbert(I);
  doc["h_vector"] = h.h_vector;
  doc["multiplicity"] = h.multiplicity;
  const GorensteinReport rep = gorenstein_diagnostics(I);
  doc["betti"] = betti_to_json(rep.betti);
  doc["regularity"] = rep.regularity;
  doc["pd"] = rep.pd;
  doc["gorenstein"] = gorenstein_to_json(rep);
  doc["euler_identity"] = euler_identity_check(rep.betti, h);
  json certs = json::object();
  if (rep.artinian) {
    bool quadratic = true;
    for (const auto& g : I.minimal_generators()) quadratic = quadratic && g.degree() == 2;
    certs["koszul"] = certificate_to_json(koszul_certificate(I, steps, slack));
    if (quadratic) {
      const Degree2BoundReport bd = degree2_betti_bound(rep.betti);
      certs["degree2_bound"] = {{"fires", bd.fires},
                                {"beta_2_4", bd.beta_2_4},
                                {"beta_1_2", bd.beta_1_2},
                                {"bound", bd.bound}};
      const SyzygyObstruction obs = syzygy_obstruction(I);
      certs["syzygy_obstruction"] = {{"found", obs.found},
                                     {"syzygy_dim", obs.syzygy_dim},
                                     {"z_dim", obs.z_dim}};
      if (obs.found) certs["syzygy_obstruction"]["witness"] = module_element_to_json(obs.witness);
    }
  }
  doc["certificates"] = certs;
  return doc;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact computer algebra: Groebner bases, minimal free resolutions, Macaulay inverse "
            "systems, Koszulness certificates";

  m.def(
      "family_report",
      [](int c, const std::string& field, const std::string& order, int steps, int slack) {
        const Field f = Field::parse(field);
        OrderKind kind = order == "lex" ? OrderKind::Lex : OrderKind::Grevlex;
        const Poly F = cyclic_family(c, f, kind);
        const Ideal I = annihilator(Ring::make(c, f, kind), F);
        json doc = full_report(I, steps, slack);
        doc["inverse_polynomial"] = F.str();
        return doc.dump();
      },
      py::arg("c"), py::arg("field") = "gf:32003", py::arg("order") = "grevlex",
      py::arg("steps") = 4, py::arg("slack") = 2,
      "cyclic inverse-polynomial family: ideal, invariants and certificates (JSON)");

  m.def(
      "modified_c6_report",
      [](int steps, int slack) {
        const Poly G = modified_c6(Field::rationals());
        const Ideal I = annihilator(Ring::make(6, Field::rationals()), G);
        json doc = full_report(I, steps, slack);
        doc["inverse_polynomial"] = G.str();
        return doc.dump();
      },
      py::arg("steps") = 4, py::arg("slack") = 2,
      "the modified codimension-6 example over Q (JSON)");

  m.def(
      "ideal_report",
      [](int nvars, const std::string& field, const std::vector<std::string>& gens,
         const std::string& order, int steps, int slack) {
        const RingPtr r = make_ring(nvars, field, order);
        return full_report(ideal_from_strings(r, gens), steps, slack).dump();
      },
      py::arg("nvars"), py::arg("field"), py::arg("generators"), py::arg("order") = "grevlex",
      py::arg("steps") = 4, py::arg("slack") = 2,
      "betti table, h-vector, diagnostics and certificates for an ideal (JSON)");

  m.def(
      "groebner_basis",
      [](int nvars, const std::string& field, const std::vector<std::string>& gens,
         const std::string& order) {
        const RingPtr r = make_ring(nvars, field, order);
        const Ideal I = ideal_from_strings(r, gens);
        std::vector<std::string> out;
        for (const auto& g : I.groebner().gens) out.push_back(g.str());
        return out;
      },
      py::arg("nvars"), py::arg("field"), py::arg("generators"), py::arg("order") = "grevlex",
      "reduced Groebner basis");

  m.def(
      "normal_form",
      [](int nvars, const std::string& field, const std::vector<std::string>& gens,
         const std::string& poly, const std::string& order) {
        const RingPtr r = make_ring(nvars, field, order);
        return ideal_from_strings(r, gens).normal_form(parse_poly(poly, r)).str();
      },
      py::arg("nvars"), py::arg("field"), py::arg("generators"), py::arg("poly"),
      py::arg("order") = "grevlex", "normal form of a polynomial against the reduced basis");

  m.def(
      "annihilator",
      [](int nvars, const std::string& field, const std::string& inverse_poly) {
        const Field f = Field::parse(field);
        std::vector<std::string> ynames;
        for (int i = 0; i < nvars; ++i) ynames.push_back("y" + std::to_string(i));
        const RingPtr yring = Ring::make(nvars, f, OrderKind::Grevlex, ynames);
        const RingPtr xring = Ring::make(nvars, f, OrderKind::Grevlex);
        const Ideal I = annihilator(xring, parse_poly(inverse_poly, yring));
        std::vector<std::string> out;
        for (const auto& g : I.minimal_generators()) out.push_back(g.str());
        return out;
      },
      py::arg("nvars"), py::arg("field"), py::arg("inverse_poly"),
      "minimal generators of the annihilator of an inverse polynomial (variables y0..y_{n-1})");

  m.def(
      "contract",
      [](int nvars, const std::string& field, const std::string& poly,
         const std::string& inverse_poly) {
        const Field f = Field::parse(field);
        std::vector<std::string> ynames;
        for (int i = 0; i < nvars; ++i) ynames.push_back("y" + std::to_string(i));
        const RingPtr yring = Ring::make(nvars, f, OrderKind::Grevlex, ynames);
        const RingPtr xring = Ring::make(nvars, f, OrderKind::Grevlex);
        return contract(parse_poly(poly, xring), parse_poly(inverse_poly, yring)).str();
      },
      py::arg("nvars"), py::arg("field"), py::arg("poly"), py::arg("inverse_poly"),
      "contraction action of an x-polynomial on a y-polynomial");

  m.def(
      "hilbert",
      [](int nvars, const std::string& field, const std::vector<std::string>& gens,
         const std::string& order) {
        const RingPtr r = make_ring(nvars, field, order);
        return hilbert_to_json(hilbert(ideal_from_strings(r, gens))).dump();
      },
      py::arg("nvars"), py::arg("field"), py::arg("generators"), py::arg("order") = "grevlex",
      "K-polynomial, dimension, h-vector and multiplicity (JSON)");

  m.def(
      "pfaffians",
      [](int nvars, const std::string& field, const std::vector<std::vector<std::string>>& upper) {
        const RingPtr r = make_ring(nvars, field, "grevlex");
        const int msize = static_cast<int>(upper.size()) + 1;
        std::vector<std::vector<Poly>> e(static_cast<size_t>(msize),
                                         std::vector<Poly>(static_cast<size_t>(msize), Poly::zero(r)));
        for (int i = 0; i + 1 < msize; ++i)
          for (int j = i + 1; j < msize; ++j) {
            Poly p = parse_poly(upper[static_cast<size_t>(i)][static_cast<size_t>(j - i - 1)], r);
            e[static_cast<size_t>(i)][static_cast<size_t>(j)] = p;
            e[static_cast<size_t>(j)][static_cast<size_t>(i)] = -p;
          }
        const AlternatingMatrix m(r, std::move(e));
        std::vector<std::string> out;
        if (m.size() % 2 == 0) {
          out.push_back(pfaffian(m).str());
        } else {
          for (const auto& p : submaximal_pfaffians(m)) out.push_back(p.str());
        }
        return out;
      },
      py::arg("nvars"), py::arg("field"), py::arg("upper_rows"),
      "pfaffian (even size) or submaximal pfaffians (odd size); rows of upper entries");

  m.def(
      "link_report",
      [](int nvars, const std::string& field, const std::vector<std::string>& ci,
         const std::vector<std::string>& ideal) {
        const RingPtr r = make_ring(nvars, field, "grevlex");
        const LinkReport rep = link(ideal_from_strings(r, ci), ideal_from_strings(r, ideal));
        json jgens = json::array();
        for (const auto& g : rep.linked.gens()) jgens.push_back(g.str());
        json doc = {{"linked_generators", jgens}, {"h_vector", rep.h_i},
                    {"h_vector_linked", rep.h_j}, {"identity_holds", rep.identity_holds},
                    {"self_link", rep.self_link}, {"height", rep.height}};
        return doc.dump();
      },
      py::arg("nvars"), py::arg("field"), py::arg("ci"), py::arg("ideal"),
      "J = (L : I) with the h-vector transfer identity (JSON)");

  m.def(
      "tensor_report",
      [](int na, const std::vector<std::string>& a, int nb, const std::vector<std::string>& b,
         const std::string& field, int steps, int slack) {
        const RingPtr ra = make_ring(na, field, "grevlex");
        const RingPtr rb = make_ring(nb, field, "grevlex");
        const Ideal T = tensor_product(ideal_from_strings(ra, a), ideal_from_strings(rb, b));
        return full_report(T, steps, slack).dump();
      },
      py::arg("nvars_a"), py::arg("a"), py::arg("nvars_b"), py::arg("b"),
      py::arg("field") = "gf:32003", py::arg("steps") = 3, py::arg("slack") = 2,
      "report for the tensor product of two quotients (JSON)");
}
