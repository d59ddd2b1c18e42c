#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace apollo {

/// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int size() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }
  bool adjacent(int u, int v) const { return adj_[idx(u, v)] != 0; }
  void add_edge(int u, int v);
  const std::vector<int>& neighbors(int v) const { return nbr_[v]; }
  int degree(int v) const { return int(nbr_[v].size()); }
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  std::size_t idx(int u, int v) const;
  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<char> adj_;
  std::vector<std::vector<int>> nbr_;
};

// standard constructions
Graph path(int m);
Graph cycle(int m);
Graph complete(int n);
Graph empty_graph(int n);
Graph join(const Graph& g, const Graph& h);
Graph orthoplex(int d);  // 1-skeleton of the d-orthoplex: K_{2d} minus a perfect matching

bool is_clique(const Graph& g, const std::vector<int>& verts);
std::vector<int> common_neighbors(const Graph& g, const std::vector<int>& verts);
Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);

/// A connected graph whose complement is a perfect matching; used to
/// recognize orthoplex skeletons without a full isomorphism test.
bool is_orthoplex(const Graph& g);
bool is_path_graph(const Graph& g);
bool is_cycle_graph(const Graph& g);

struct CliqueLimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// All maximal cliques (Bron-Kerbosch with pivoting).  Throws
/// CliqueLimitExceeded beyond `cap` cliques.
std::vector<std::vector<int>> maximal_cliques(const Graph& g, std::size_t cap = 1u << 20);

/// All cliques of exactly k vertices, ascending within each clique.
std::vector<std::vector<int>> cliques_of_size(const Graph& g, int k, std::size_t cap = 1u << 20);

/// Canonical labeling by color refinement with individualization; two
/// graphs are isomorphic iff their canonical forms compare equal.
/// Designed for the small graphs handled here (a few dozen vertices).
std::string canonical_form(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace apollo
