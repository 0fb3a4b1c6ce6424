#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace mjac {

class LengthMap;

/// Finite undirected multigraph with labeled, oriented edges.
/// Multi-edges and self-loops are allowed.
struct Graph {
  struct Edge {
    std::string label;
    std::size_t tail = 0;
    std::size_t head = 0;
  };

  std::size_t vertex_count = 0;
  std::vector<Edge> edges;

  /// Throws on an out-of-range endpoint or a duplicate label.
  void validate() const;

  std::vector<std::string> edge_labels() const;
};

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
/// Two vertices joined by n parallel edges.
Graph banana_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// K4 minus an edge; labels e1..e5 with e5 the diagonal.
Graph diamond_graph();
/// Disjoint union; labels of `b` must not collide with those of `a`.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Replaces every edge e by a path of lam(e) edges through fresh vertices.
/// The path keeps e's label on its first edge, then e#1, e#2, ...
Graph subdivide_graph(const Graph& g, const LengthMap& lam);

}  // namespace mjac
