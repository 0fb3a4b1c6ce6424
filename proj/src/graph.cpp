#include "mjac/graph.hpp"

#include <set>

#include "mjac/error.hpp"
#include "mjac/matroid.hpp"

namespace mjac {

void Graph::validate() const {
  std::set<std::string> seen;
  for (const auto& e : edges) {
    if (e.tail >= vertex_count || e.head >= vertex_count)
      fail("edge '" + e.label + "' has an endpoint outside 0.." +
           std::to_string(vertex_count == 0 ? 0 : vertex_count - 1));
    if (!seen.insert(e.label).second) fail("duplicate edge label '" + e.label + "'");
  }
}

std::vector<std::string> Graph::edge_labels() const {
  std::vector<std::string> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.push_back(e.label);
  return out;
}

static std::string edge_name(std::size_t i) { return "e" + std::to_string(i + 1); }

Graph path_graph(std::size_t n) {
  Graph g{n + 1, {}};
  for (std::size_t i = 0; i < n; ++i) g.edges.push_back({edge_name(i), i, i + 1});
  return g;
}

Graph cycle_graph(std::size_t n) {
  Graph g{n, {}};
  for (std::size_t i = 0; i < n; ++i) g.edges.push_back({edge_name(i), i, (i + 1) % n});
  return g;
}

Graph banana_graph(std::size_t n) {
  Graph g{2, {}};
  for (std::size_t i = 0; i < n; ++i) g.edges.push_back({edge_name(i), 0, 1});
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g{n, {}};
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.edges.push_back({edge_name(k++), i, j});
  return g;
}

Graph diamond_graph() {
  // Triangles {e1,e2,e5} and {e3,e4,e5}.
  return Graph{4,
               {{"e1", 0, 1}, {"e2", 0, 3}, {"e3", 2, 1}, {"e4", 2, 3}, {"e5", 1, 3}}};
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g = a;
  g.vertex_count += b.vertex_count;
  for (const auto& e : b.edges)
    g.edges.push_back({e.label, e.tail + a.vertex_count, e.head + a.vertex_count});
  g.validate();
  return g;
}

Graph subdivide_graph(const Graph& g, const LengthMap& lam) {
  g.validate();
  if (lam.size() != g.edges.size()) fail("length map size does not match the edge count");
  Graph out{g.vertex_count, {}};
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    const unsigned len = lam[i];
    std::size_t prev = e.tail;
    for (unsigned k = 0; k < len; ++k) {
      std::string label = k == 0 ? e.label : e.label + "#" + std::to_string(k);
      std::size_t next = k + 1 == len ? e.head : out.vertex_count++;
      out.edges.push_back({std::move(label), prev, next});
      prev = next;
    }
  }
  return out;
}

}  // namespace mjac
