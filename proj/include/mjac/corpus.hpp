#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mjac/graph.hpp"
#include "mjac/matroid.hpp"

namespace mjac {

/// Built-in test matroids; graphic ones keep their graph so subdivision
/// can be compared with expansion.
struct CorpusEntry {
  std::string name;
  std::optional<Graph> graph;
  RegularMatroid matroid;
  bool irreducible = false;
};

/// C_2 with edges labelled e and f.
Graph c2_graph();

const std::vector<CorpusEntry>& corpus();
/// Throws on an unknown name.
const CorpusEntry& corpus_entry(std::string_view name);

}  // namespace mjac
