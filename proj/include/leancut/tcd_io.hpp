#pragma once

/**
 * Decomposition JSON:
 *   {"nodes": [{"id": 0, "bag": [0, 1]}, ...], "links": [[0, 1], ...]}
 *
 * Serialization is canonical (ids ascending, bags and links sorted) and
 * byte-stable: equal decompositions always produce identical bytes.
 */

#include <istream>
#include <ostream>

#include <nlohmann/json.hpp>

#include "leancut/errors.hpp"
#include "leancut/tcd.hpp"

namespace leancut {

inline nlohmann::ordered_json decomposition_to_json(const TreeCutDecomposition& d) {
  nlohmann::ordered_json j;
  j["nodes"] = nlohmann::ordered_json::array();
  for (size_t i = 0; i < d.nodes.size(); ++i) {
    nlohmann::ordered_json n;
    n["id"] = d.nodes[i];
    n["bag"] = d.bags[i];
    j["nodes"].push_back(std::move(n));
  }
  j["links"] = nlohmann::ordered_json::array();
  for (const auto& l : d.links) j["links"].push_back({l.u, l.v});
  return j;
}

inline void write_decomposition(std::ostream& out, const TreeCutDecomposition& d) {
  out << decomposition_to_json(d).dump(2) << "\n";
}

inline TreeCutDecomposition decomposition_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("nodes") || !j.contains("links"))
    throw parse_error("decomposition: expected object with 'nodes' and 'links'");
  std::vector<std::pair<int, std::vector<int>>> node_bags;
  for (const auto& n : j.at("nodes")) {
    if (!n.is_object() || !n.contains("id") || !n.contains("bag"))
      throw parse_error("decomposition: node entries need 'id' and 'bag'");
    std::vector<int> bag;
    for (const auto& v : n.at("bag")) {
      if (!v.is_number_integer()) throw parse_error("decomposition: bag entries must be ints");
      bag.push_back(v.get<int>());
    }
    if (!n.at("id").is_number_integer())
      throw parse_error("decomposition: node id must be an int");
    node_bags.emplace_back(n.at("id").get<int>(), std::move(bag));
  }
  std::vector<Link> links;
  for (const auto& l : j.at("links")) {
    if (!l.is_array() || l.size() != 2 || !l[0].is_number_integer() ||
        !l[1].is_number_integer())
      throw parse_error("decomposition: links must be [id, id] pairs");
    links.emplace_back(l[0].get<int>(), l[1].get<int>());
  }
  try {
    return TreeCutDecomposition::make(std::move(node_bags), std::move(links));
  } catch (const input_error& e) {
    throw parse_error(std::string("decomposition: ") + e.what());
  }
}

inline TreeCutDecomposition read_decomposition(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("decomposition: ") + e.what());
  }
  return decomposition_from_json(j);
}

}  // namespace leancut
