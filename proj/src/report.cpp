#include "socle/report.hpp"

#include <iomanip>
#include <sstream>

namespace socle {

std::string render_betti(const BettiTable& t) {
  const int pd = t.pd();
  const int reg = t.regularity();
  size_t w = 2;
  for (const auto& [k, v] : t.entries) w = std::max(w, std::to_string(v).size());
  std::ostringstream out;
  auto cell = [&](const std::string& s) { out << std::setw(static_cast<int>(w) + 2) << s; };
  cell("");
  for (int i = 0; i <= pd; ++i) cell(std::to_string(i));
  out << "\n";
  for (int row = 0; row <= reg; ++row) {
    cell(std::to_string(row) + ":");
    for (int i = 0; i <= pd; ++i) {
      const long long v = t.get(i, i + row);
      cell(v ? std::to_string(v) : "--");
    }
    out << "\n";
  }
  return out.str();
}

nlohmann::json betti_to_json(const BettiTable& t) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [k, v] : t.entries)
    if (v) entries.push_back({k.first, k.second, v});
  return entries;
}

BettiTable betti_from_json(const nlohmann::json& j) {
  BettiTable t;
  for (const auto& e : j) t.add(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<long long>());
  return t;
}

nlohmann::json hilbert_to_json(const HilbertData& h) {
  return {{"numerator", h.numerator},
          {"dim", h.dim},
          {"h_vector", h.h_vector},
          {"multiplicity", h.multiplicity},
          {"h_nonnegative", h.h_nonnegative}};
}

nlohmann::json ring_to_json(const RingPtr& r) {
  nlohmann::json names = nlohmann::json::array();
  for (int i = 0; i < r->nvars(); ++i) names.push_back(r->name(i));
  std::string order;
  switch (r->order().kind) {
    case OrderKind::Grevlex: order = "grevlex"; break;
    case OrderKind::Lex: order = "lex"; break;
    case OrderKind::Grlex: order = "grlex"; break;
  }
  return {{"vars", r->nvars()}, {"field", r->field().str()}, {"names", names}, {"order", order}};
}

nlohmann::json gorenstein_to_json(const GorensteinReport& rep) {
  return {{"artinian", rep.artinian},
          {"cohen_macaulay", rep.cohen_macaulay},
          {"type", rep.type},
          {"gorenstein", rep.gorenstein},
          {"betti_symmetric", rep.betti_symmetric},
          {"h_symmetric", rep.h_symmetric},
          {"regularity", rep.regularity},
          {"pd", rep.pd},
          {"multiplicity", rep.multiplicity},
          {"h_vector", rep.h_vector},
          {"betti", betti_to_json(rep.betti)}};
}

nlohmann::json certificate_to_json(const KoszulCertificate& cert) {
  nlohmann::json betti = nlohmann::json::array();
  for (const auto& [k, v] : cert.betti)
    if (v) betti.push_back({k.first, k.second, v});
  nlohmann::json j = {
      {"verdict",
       cert.verdict == KoszulCertificate::Verdict::NotKoszul
           ? "NotKoszul"
           : "KoszulUpTo(" + std::to_string(cert.steps) + ")"},
      {"steps", cert.steps},
      {"slack", cert.slack},
      {"field", cert.field},
      {"reason", cert.reason},
      {"betti_over_r", betti},
  };
  if (cert.off_i >= 0) j["off_diagonal"] = {cert.off_i, cert.off_j, cert.off_beta};
  return j;
}

nlohmann::json module_element_to_json(const ModuleElement& v) {
  nlohmann::json coords = nlohmann::json::array();
  for (const auto& p : v.coords) coords.push_back(p.str());
  return {{"twists", v.module.twists}, {"coords", coords}};
}

}  // namespace socle
