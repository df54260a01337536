#include "pairwalk/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace pairwalk {

int Bipartition::side_size(int side) const {
  int c = 0;
  for (int s : side_of) c += (s == side);
  return c;
}

namespace {

std::optional<Bipartition> two_color(const Eigen::MatrixXi& adj) {
  const int n = static_cast<int>(adj.rows());
  std::vector<int> color(n, -1);
  std::deque<int> queue;
  color[0] = 0;
  queue.push_back(0);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v = 0; v < n; ++v) {
      if (!adj(u, v)) continue;
      if (color[v] == -1) {
        color[v] = 1 - color[u];
        queue.push_back(v);
      } else if (color[v] == color[u]) {
        return std::nullopt;
      }
    }
  }
  return Bipartition{std::move(color)};
}

bool connected(const Eigen::MatrixXi& adj) {
  const int n = static_cast<int>(adj.rows());
  std::vector<bool> seen(n, false);
  std::deque<int> queue{0};
  seen[0] = true;
  int visited = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v = 0; v < n; ++v) {
      if (adj(u, v) && !seen[v]) {
        seen[v] = true;
        ++visited;
        queue.push_back(v);
      }
    }
  }
  return visited == n;
}

}  // namespace

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 2) throw Error(ErrorCode::InvalidParameter, "graph needs at least 2 vertices");
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (u == v) throw Error(ErrorCode::InvalidParameter, "self-loop rejected");
    if (u < 0 || v >= n) throw Error(ErrorCode::InvalidParameter, "edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw Error(ErrorCode::InvalidParameter, "duplicate edge rejected");
  edges_ = std::move(edges);

  adjacency_ = Eigen::MatrixXi::Zero(n, n);
  for (const auto& [u, v] : edges_) {
    adjacency_(u, v) = 1;
    adjacency_(v, u) = 1;
  }
  if (!connected(adjacency_))
    throw Error(ErrorCode::InvalidParameter, "graph must be connected");
  bipartition_ = two_color(adjacency_);
}

Graph Graph::complete(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidParameter, "complete graph needs n >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph Graph::circulant(int n, const std::vector<int>& connection) {
  if (n < 2) throw Error(ErrorCode::InvalidParameter, "circulant needs n >= 2");
  std::set<int> reduced;
  for (int s : connection) {
    int r = ((s % n) + n) % n;
    if (r == 0) throw Error(ErrorCode::InvalidParameter, "circulant connection set contains 0");
    reduced.insert(r);
  }
  if (reduced.empty()) throw Error(ErrorCode::InvalidParameter, "circulant connection set empty");
  for (int s : reduced)
    if (!reduced.count((n - s) % n))
      throw Error(ErrorCode::InvalidParameter, "circulant connection set not closed under negation");
  std::set<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int s : reduced) {
      const int j = (i + s) % n;
      edges.emplace(std::min(i, j), std::max(i, j));
    }
  return Graph(n, {edges.begin(), edges.end()});  // ctor rejects disconnected results
}

Graph Graph::cocktail_party(int m) {
  if (m < 2) throw Error(ErrorCode::InvalidParameter, "cocktail party graph needs m >= 2");
  std::vector<int> connection;
  for (int s = 1; s < 2 * m; ++s)
    if (s != m) connection.push_back(s);
  return circulant(2 * m, connection);
}

Graph Graph::hypercube(int d) {
  if (d < 1) throw Error(ErrorCode::InvalidParameter, "hypercube needs d >= 1");
  if (d > 20) throw Error(ErrorCode::TooLarge, "hypercube dimension capped at 20");
  const int n = 1 << d;
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < n; ++x)
    for (int k = 0; k < d; ++k) {
      const int y = x ^ (1 << k);
      if (x < y) edges.emplace_back(x, y);
    }
  return Graph(n, std::move(edges));
}

Graph Graph::petersen() {
  // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, 5 + i);
  }
  return Graph(10, std::move(edges));
}

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  return Graph(n, std::move(edges));
}

Graph Graph::from_edge_list_text(const std::string& text) {
  std::istringstream in(text);
  int n = 0, m = 0;
  if (!(in >> n >> m)) throw Error(ErrorCode::InvalidParameter, "edge list: expected header 'n m'");
  if (m < 0) throw Error(ErrorCode::InvalidParameter, "edge list: negative edge count");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v))
      throw Error(ErrorCode::InvalidParameter, "edge list: expected " + std::to_string(m) + " edges");
    edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

std::string Graph::to_edge_list_text() const {
  std::ostringstream out;
  out << n_ << " " << edges_.size() << "\n";
  for (const auto& [u, v] : edges_) out << u << " " << v << "\n";
  return out.str();
}

int Graph::degree(int v) const {
  if (v < 0 || v >= n_) throw Error(ErrorCode::InvalidParameter, "vertex out of range");
  return adjacency_.row(v).sum();
}

std::optional<int> Graph::regularity() const {
  const int d0 = degree(0);
  for (int v = 1; v < n_; ++v)
    if (degree(v) != d0) return std::nullopt;
  return d0;
}

Matrix Graph::laplacian() const {
  Matrix l = -adjacency_.cast<double>();
  for (int v = 0; v < n_; ++v) l(v, v) += degree(v);
  return l;
}

Matrix Graph::incidence_matrix() const {
  Matrix r = Matrix::Zero(n_, static_cast<Eigen::Index>(edges_.size()));
  for (std::size_t j = 0; j < edges_.size(); ++j) {
    r(edges_[j].first, static_cast<Eigen::Index>(j)) = 1.0;
    r(edges_[j].second, static_cast<Eigen::Index>(j)) = 1.0;
  }
  return r;
}

TotalGraph total_graph(const Graph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  std::vector<std::pair<int, int>> edges;

  // Base-base block: A_G.
  edges.insert(edges.end(), g.edges().begin(), g.edges().end());
  // Base-edge block: R_G (vertex u adjacent to every edge it lies on).
  for (int j = 0; j < m; ++j) {
    edges.emplace_back(g.edges()[j].first, n + j);
    edges.emplace_back(g.edges()[j].second, n + j);
  }
  // Edge-edge block: R^T R - 2I (edges sharing an endpoint).
  for (int j = 0; j < m; ++j)
    for (int k = j + 1; k < m; ++k) {
      const auto& [a, b] = g.edges()[j];
      const auto& [c, d] = g.edges()[k];
      if (a == c || a == d || b == c || b == d) edges.emplace_back(n + j, n + k);
    }

  std::vector<TotalGraphLabel> labels(n + m);
  for (int v = 0; v < n; ++v)
    labels[v] = {v, VertexOrigin::BaseVertex, v, {-1, -1}};
  for (int j = 0; j < m; ++j)
    labels[n + j] = {n + j, VertexOrigin::BaseEdge, -1, g.edges()[j]};

  return TotalGraph{Graph::from_edges(n + m, std::move(edges)), std::move(labels)};
}

}  // namespace pairwalk
