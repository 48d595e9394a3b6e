#pragma once

#include <string>

#include <json.hpp>

#include "ordsplit/hypergraph.hpp"

namespace ordsplit {

using Json = nlohmann::ordered_json;

// {"n": .., "r": .., "edges": [[..], ..]} with edges in lexicographic order.
Json to_json(const OrderedHypergraph& h);

// Accepts an unsorted outer edge list. Rejects malformed inner lists, out of
// range vertices and duplicate edges with InvalidHypergraph; missing or
// mistyped fields raise std::invalid_argument. Unknown keys are ignored.
OrderedHypergraph hypergraph_from_json(const Json& j);

OrderedHypergraph parse_hypergraph(const std::string& text);

// Compact canonical text: {"n":4,"r":2,"edges":[[1,2],[3,4]]}
std::string dump_canonical(const OrderedHypergraph& h);

Json intervals_to_json(const std::vector<Interval>& intervals);

}  // namespace ordsplit
