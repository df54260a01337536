#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pairwalk/types.hpp"

namespace pairwalk {

/// Two-coloring of a connected bipartite graph; vertex 0 is always on side X1.
struct Bipartition {
  std::vector<int> side_of;  // 0 = X1, 1 = X2

  bool same_side(int a, int b) const { return side_of[a] == side_of[b]; }
  int side_size(int side) const;
};

enum class VertexOrigin { BaseVertex, BaseEdge };

/// Identifies what a vertex of a total graph corresponds to in the base graph.
struct TotalGraphLabel {
  int index = 0;
  VertexOrigin origin = VertexOrigin::BaseVertex;
  int base_vertex = -1;                 // set when origin == BaseVertex
  std::pair<int, int> base_edge{-1, -1};  // set when origin == BaseEdge
};

/// Undirected simple connected graph with a deterministic, lexicographically
/// sorted edge list. Immutable after construction.
class Graph {
public:
  static Graph complete(int n);
  static Graph circulant(int n, const std::vector<int>& connection);
  static Graph cocktail_party(int m);
  static Graph hypercube(int d);
  static Graph petersen();
  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

  /// Parses "n m" followed by m lines "u v" (0-based).
  static Graph from_edge_list_text(const std::string& text);
  std::string to_edge_list_text() const;

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const Eigen::MatrixXi& adjacency() const { return adjacency_; }

  int degree(int v) const;
  std::optional<int> regularity() const;

  Matrix laplacian() const;
  /// n x m vertex-edge incidence matrix; column order follows edges().
  Matrix incidence_matrix() const;

  const std::optional<Bipartition>& bipartition() const { return bipartition_; }
  bool is_bipartite() const { return bipartition_.has_value(); }

private:
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  Eigen::MatrixXi adjacency_;
  std::optional<Bipartition> bipartition_;
};

struct TotalGraph {
  Graph graph;
  std::vector<TotalGraphLabel> labels;
};

/// T(G): base vertices first (in order), then one vertex per base edge (in
/// edge-list order). Adjacency is assembled from the block identity
/// [[A, R], [R^T, R^T R - 2I]].
TotalGraph total_graph(const Graph& g);

}  // namespace pairwalk
