#include "ordsplit/json_io.hpp"

#include <stdexcept>

namespace ordsplit {

Json to_json(const OrderedHypergraph& h) {
  Json edges = Json::array();
  for (auto e : h.edges()) edges.push_back(Json(std::vector<Vertex>(e.begin(), e.end())));
  Json j;
  j["n"] = h.n();
  j["r"] = h.r();
  j["edges"] = std::move(edges);
  return j;
}

OrderedHypergraph hypergraph_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("hypergraph JSON must be an object");
  for (const char* key : {"n", "r", "edges"}) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("hypergraph JSON lacks \"") + key + "\"");
  }
  if (!j["n"].is_number_integer() || !j["r"].is_number_integer()) {
    throw std::invalid_argument("hypergraph JSON: n and r must be integers");
  }
  const int n = j["n"].get<int>();
  const int r = j["r"].get<int>();
  if (!j["edges"].is_array()) throw std::invalid_argument("hypergraph JSON: edges must be an array");
  std::vector<Edge> edges;
  edges.reserve(j["edges"].size());
  std::size_t index = 0;
  for (const auto& item : j["edges"]) {
    if (!item.is_array()) throw std::invalid_argument("hypergraph JSON: every edge must be an array");
    Edge e;
    for (const auto& v : item) {
      if (!v.is_number_integer()) throw std::invalid_argument("hypergraph JSON: vertices must be integers");
      e.push_back(v.get<int>());
    }
    if (static_cast<int>(e.size()) != r) throw InvalidHypergraph({"edge has wrong size", index, e});
    edges.push_back(std::move(e));
    ++index;
  }
  // Report inner-list violations against the input order, before sorting.
  auto raw = OrderedHypergraph::unchecked(n, r, edges);
  if (auto v = validate(raw)) throw InvalidHypergraph(*v);
  return OrderedHypergraph::from_edges(n, r, edges);
}

OrderedHypergraph parse_hypergraph(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  return hypergraph_from_json(j);
}

std::string dump_canonical(const OrderedHypergraph& h) { return to_json(h).dump(); }

Json intervals_to_json(const std::vector<Interval>& intervals) {
  Json a = Json::array();
  for (const auto& iv : intervals) a.push_back(Json::array({iv.lo, iv.hi}));
  return a;
}

}  // namespace ordsplit
