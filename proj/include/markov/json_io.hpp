#pragma once

// JSON file formats. Every reader throws Error(ParseError) naming the
// offending field; every writer output reads back to an equal value.

#include "json.hpp"
#include "markov/foliation.hpp"
#include "markov/move.hpp"
#include "markov/unlink.hpp"

namespace markov {

nlohmann::json tiling_to_json(const Tiling& t);
Tiling tiling_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const MoveCertificate& cert);
MoveCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json diagram_to_json(const ColoredDiagram& d);
ColoredDiagram diagram_from_json(const nlohmann::json& j);

nlohmann::json switches_to_json(const SwitchCertificate& s);

/// Parses text, mapping JSON syntax errors to ParseError.
nlohmann::json parse_json_text(std::string_view text);

}  // namespace markov
