#pragma once

#include <string>

#include "socle/koszul.hpp"
#include "socle/parse.hpp"
#include "socle/resolution.hpp"

#include "json.hpp"

namespace socle {

/// Betti table in the standard layout: columns are homological degree i, rows
/// are j - i, "--" for zero entries.
std::string render_betti(const BettiTable& t);

nlohmann::json betti_to_json(const BettiTable& t);
BettiTable betti_from_json(const nlohmann::json& j);

nlohmann::json hilbert_to_json(const HilbertData& h);
nlohmann::json ring_to_json(const RingPtr& r);
nlohmann::json gorenstein_to_json(const GorensteinReport& rep);
nlohmann::json certificate_to_json(const KoszulCertificate& cert);
nlohmann::json module_element_to_json(const ModuleElement& v);

}  // namespace socle
