#pragma once

#include <json.hpp>

#include <string>
#include <variant>
#include <vector>

#include "mjac/bounds.hpp"
#include "mjac/density.hpp"
#include "mjac/fp_count.hpp"
#include "mjac/graph.hpp"
#include "mjac/jacobian.hpp"
#include "mjac/matroid.hpp"
#include "mjac/polynomial.hpp"

namespace mjac {

using Json = nlohmann::json;

/// A polynomial document: variables carry labels.
struct LabelledPoly {
  std::vector<std::string> vars;
  MultilinearPoly poly;
};

using InputDocument = std::variant<Graph, RegularMatroid, LabelledPoly>;

// Schemas:
//   graph    {"vertices": n, "edges": [[label, u, v], ...]}
//   matroid  {"rank": r, "ground": [label, ...], "rows": [[a11, ...], ...]}
//   poly     {"vars": [label, ...], "terms": [{"support": [label, ...], "coeff": "c"}, ...]}
// The kind is detected from the keys "edges", "rows" and "terms"; exactly
// one must be present.

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);
Json matroid_to_json(const RegularMatroid& m);
RegularMatroid matroid_from_json(const Json& j);
/// Terms in increasing mask order.
Json poly_to_json(const MultilinearPoly& p, const std::vector<std::string>& labels);
LabelledPoly poly_from_json(const Json& j);

/// {"label": length, ...}; every ground label must be present.
LengthMap length_map_from_json(const Json& j, const std::vector<std::string>& ground);
Json length_map_to_json(const LengthMap& lam, const std::vector<std::string>& ground);

Json group_to_json(const AbelianGroup& g);
Json count_to_json(const CountReport& r);
Json density_to_json(const DensityReport& r);
Json sandwich_to_json(const SandwichReport& s);
Json asymptotic_to_json(const AsymptoticReport& a);
Json bound_to_json(const BoundReport& b);

Json parse_json_text(const std::string& text);
InputDocument read_document(const Json& j);
InputDocument read_document_file(const std::string& path);

/// Matroid of a graph or matroid document; throws for a polynomial.
RegularMatroid as_matroid(const InputDocument& doc);

}  // namespace mjac
