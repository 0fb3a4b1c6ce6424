#include "mjac/corpus.hpp"

#include "mjac/error.hpp"

namespace mjac {

namespace {

Graph relabelled(Graph g, const std::string& prefix) {
  for (std::size_t i = 0; i < g.edges.size(); ++i) g.edges[i].label = prefix + std::to_string(i + 1);
  return g;
}

CorpusEntry from_graph(std::string name, Graph g) {
  RegularMatroid m = incidence_matroid(g);
  const bool irr = m.size() > 0 && irreducible_components(m).size() == 1;
  return {std::move(name), std::move(g), std::move(m), irr};
}

CorpusEntry from_matroid(std::string name, RegularMatroid m) {
  const bool irr = m.size() > 0 && irreducible_components(m).size() == 1;
  return {std::move(name), std::nullopt, std::move(m), irr};
}

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> c;
  c.push_back(from_graph("C2", c2_graph()));
  c.push_back(from_graph("C3", cycle_graph(3)));
  c.push_back(from_graph("path2", path_graph(2)));
  c.push_back(from_graph("path3", path_graph(3)));
  c.push_back(from_graph("diamond", diamond_graph()));
  c.push_back(from_graph("K4", complete_graph(4)));
  c.push_back(from_graph("banana3", banana_graph(3)));
  c.push_back(from_graph("banana10", banana_graph(10)));
  c.push_back(from_graph("diamond+C2", disjoint_union(diamond_graph(), relabelled(c2_graph(), "f"))));
  c.push_back(from_graph("C2+C2", disjoint_union(c2_graph(), relabelled(c2_graph(), "g"))));
  // A self-loop next to a digon: Psi = x_l (x_e + x_f).
  c.push_back(from_graph("loop+C2", Graph{2, {{"l", 0, 0}, {"e", 0, 1}, {"f", 0, 1}}}));
  c.push_back(from_matroid("U11", coloop_matroid(1)));
  c.push_back(from_matroid("U11+U11", coloop_matroid(2)));
  c.push_back(from_matroid("C2+U11", direct_sum(incidence_matroid(c2_graph()), coloop_matroid(1))));
  return c;
}

}  // namespace

Graph c2_graph() { return Graph{2, {{"e", 0, 1}, {"f", 0, 1}}}; }

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build();
  return entries;
}

const CorpusEntry& corpus_entry(std::string_view name) {
  for (const auto& e : corpus())
    if (e.name == name) return e;
  fail("unknown corpus entry '" + std::string(name) + "'");
}

}  // namespace mjac
