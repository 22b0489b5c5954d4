#include "specjoin/graph.hpp"

#include <algorithm>
#include <string>

namespace specjoin {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw Error(ErrorKind::Argument, "vertex count must be non-negative");
  words_per_row_ = (n + 63) / 64;
  adj_.assign(static_cast<std::size_t>(n) * words_per_row_, 0);
  degree_.assign(n, 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw Error(ErrorKind::Argument,
                "vertex " + std::to_string(v) + " out of range [0, " +
                    std::to_string(n_) + ")");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorKind::Argument, "self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) return;
  adj_[static_cast<std::size_t>(u) * words_per_row_ + v / 64] |= (std::uint64_t{1} << (v % 64));
  adj_[static_cast<std::size_t>(v) * words_per_row_ + u / 64] |= (std::uint64_t{1} << (u % 64));
  ++degree_[u];
  ++degree_[v];
  edges_.emplace_back(std::min(u, v), std::max(u, v));
  edges_sorted_ = false;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  return (adj_[static_cast<std::size_t>(u) * words_per_row_ + v / 64] >>
          (v % 64)) & 1;
}

int Graph::degree(int v) const {
  check_vertex(v);
  return degree_[v];
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  out.reserve(degree_[v]);
  for (int u = 0; u < n_; ++u)
    if (u != v && has_edge(u, v)) out.push_back(u);
  return out;
}

void Graph::sort_edges() const {
  if (!edges_sorted_) {
    std::sort(edges_.begin(), edges_.end());
    edges_sorted_ = true;
  }
}

const std::vector<std::pair<int, int>>& Graph::edges() const {
  sort_edges();
  return edges_;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d = degree_;
  std::sort(d.begin(), d.end(), std::greater<int>());
  return d;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<bool> seen(n_, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < n_; ++u) {
      if (!seen[u] && has_edge(v, u)) {
        seen[u] = true;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == n_;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  return *std::min_element(degree_.begin(), degree_.end());
}

bool Graph::operator==(const Graph& other) const {
  if (n_ != other.n_) return false;
  sort_edges();
  other.sort_edges();
  return edges_ == other.edges_;
}

RegularProfile regular_profile(const Graph& g) {
  if (g.vertex_count() == 0)
    throw Error(ErrorKind::Domain, "regular profile of the empty graph is undefined");
  int r = g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) != r)
      throw Error(ErrorKind::Regularity,
                  "graph is not regular: vertex 0 has degree " + std::to_string(r) +
                      " but vertex " + std::to_string(v) + " has degree " +
                      std::to_string(g.degree(v)));
  }
  return RegularProfile{g.vertex_count(), g.edge_count(), r};
}

PartTag PartLabels::label(int v) const {
  if (v < 0 || v >= size())
    throw Error(ErrorKind::Argument, "label index out of range");
  if (v < n1) return PartTag::OriginalOfG1;
  if (v < n1 + m1) return PartTag::SubdivisionVertex;
  return PartTag::VertexOfG2;
}

std::vector<PartTag> PartLabels::to_vector() const {
  std::vector<PartTag> out;
  out.reserve(size());
  for (int v = 0; v < size(); ++v) out.push_back(label(v));
  return out;
}

}  // namespace specjoin
