// JSON descriptors for the map catalog: {"kind": "...", parameters...}.
// Kept apart from conformal.hpp so only JSON-speaking consumers pay for the
// include.

#pragma once

#include <string>

#include "json.hpp"
#include "lumer/conformal.hpp"

namespace lumer {

inline nlohmann::ordered_json map_to_json(const ConformalMap& map) {
  using nlohmann::ordered_json;
  switch (map.kind()) {
    case ConformalMap::Kind::mobius:
      return ordered_json{{"kind", "mobius"},
                          {"a", {map.mobius_a().real(), map.mobius_a().imag()}},
                          {"phi", map.mobius_phi()}};
    case ConformalMap::Kind::cayley:
      return ordered_json{{"kind", "cayley"}};
    case ConformalMap::Kind::wedge:
      return ordered_json{{"kind", "wedge"}, {"alpha", map.wedge_alpha()}};
    case ConformalMap::Kind::composition:
      return ordered_json{{"kind", "composition"},
                          {"outer", map_to_json(map.outer())},
                          {"inner", map_to_json(map.inner())}};
  }
  throw std::logic_error("unreachable");
}

inline ConformalMap map_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw std::invalid_argument("map descriptor: expected an object with a 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "mobius") {
    cplx a = 0.0;
    if (j.contains("a")) {
      const auto& ja = j.at("a");
      if (ja.is_array() && ja.size() == 2)
        a = cplx(ja[0].get<double>(), ja[1].get<double>());
      else if (ja.is_number())
        a = cplx(ja.get<double>(), 0.0);
      else
        throw std::invalid_argument("map descriptor: 'a' must be a number or [re, im]");
    }
    const double phi = j.value("phi", 0.0);
    return ConformalMap::mobius(a, phi);
  }
  if (kind == "rotation") return ConformalMap::rotation(j.value("phi", 0.0));
  if (kind == "cayley") return ConformalMap::cayley();
  if (kind == "wedge") return ConformalMap::wedge(j.at("alpha").get<double>());
  if (kind == "composition")
    return ConformalMap::compose(map_from_json(j.at("outer")), map_from_json(j.at("inner")));
  throw std::invalid_argument("map descriptor: unknown kind '" + kind + "'");
}

inline ConformalMap map_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("map descriptor: invalid JSON: ") + e.what());
  }
  return map_from_json(j);
}

}  // namespace lumer
