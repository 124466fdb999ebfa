#pragma once

// JSON form of witnesses:
//   {"kind": "near_sunflower", "indices": [...]}
//   {"kind": "focal" | "0-focal" | "1-focal", "indices": [...], "focus": i, "petals": [...]}
//   {"kind": "disjoint_symdiffs", "indices": [...], "pairs": [[a, b], [c, d], [e, f]]}
// Member indices are 0-based positions in the family.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "sunforge/detect/witness.hpp"

namespace sunforge {

inline nlohmann::json to_json(const NearSunflowerWitness& w) {
  return {{"kind", "near_sunflower"}, {"indices", w.indices}};
}

inline nlohmann::json to_json(const FocalWitness& w) {
  return {{"kind", std::string(to_string(w.side))}, {"indices", w.indices()}, {"focus", w.focus}, {"petals", w.petals}};
}

inline nlohmann::json to_json(const DisjointPairsWitness& w) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [a, b] : w.pairs) pairs.push_back({a, b});
  return {{"kind", "disjoint_symdiffs"}, {"indices", w.indices()}, {"pairs", pairs}};
}

inline FocalWitness focal_witness_from_json(const nlohmann::json& j) {
  FocalWitness w;
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "focal")
    w.side = FocalSide::both;
  else if (kind == "0-focal")
    w.side = FocalSide::zero;
  else if (kind == "1-focal")
    w.side = FocalSide::one;
  else
    throw std::invalid_argument("not a focal witness: " + kind);
  w.focus = j.at("focus").get<std::size_t>();
  w.petals = j.at("petals").get<std::vector<std::size_t>>();
  return w;
}

inline NearSunflowerWitness near_sunflower_witness_from_json(const nlohmann::json& j) {
  if (j.at("kind") != "near_sunflower") throw std::invalid_argument("not a near-sunflower witness");
  return {j.at("indices").get<std::vector<std::size_t>>()};
}

}  // namespace sunforge
