#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "apollo/graph.hpp"

namespace apollo {

/// Certificate of k-tree-ness: a base (k+1)-clique plus an addition order in
/// which every vertex attaches to a k-clique of the part built so far.
struct KTreeOrder {
  bool is_ktree = false;
  std::vector<int> base;
  std::vector<int> added;
  std::vector<std::vector<int>> attach;
};

KTreeOrder ktree_order(const Graph& g, int k);
inline bool is_k_tree(const Graph& g, int k) { return ktree_order(g, k).is_ktree; }

/// Kleinschmidt's criterion, with p the polytope dimension: the graph of a
/// stacked p-polytope is a p-tree in which no p-clique lies in three
/// (p+1)-cliques.
struct StackedCheck {
  bool stacked = false;
  std::string reason;
  std::optional<std::vector<int>> witness;  // an over-shared p-clique
};
StackedCheck is_stacked_polytopal(const Graph& g, int p);

enum class Decision { packable, not_packable, unknown };

inline const char* to_string(Decision d) {
  switch (d) {
    case Decision::packable: return "packable";
    case Decision::not_packable: return "not-packable";
    case Decision::unknown: return "unknown";
  }
  return "?";
}

struct Verdict {
  Decision decision = Decision::unknown;
  std::optional<std::vector<int>> witness;
  std::string reason;
};

/// Decision criterion for stacked 4-polytopes: packable iff no 3-clique is
/// shared by six 4-cliques.  Returns unknown outside its domain.
Verdict decide_packable_stacked4(const Graph& g);

/// Construction script of a stacked (p)-polytope: start from the p-simplex
/// on vertices 0..p; stack k adds vertex p+1+k onto a p-set that must be a
/// clique at that time.  Re-stacking a used facet is representable (and
/// caught later by is_stacked_polytopal), only clique-ness is enforced here.
struct StackProgram {
  int p = 4;
  std::vector<std::vector<int>> stacks;
};

Graph graph_of_stack_program(const StackProgram& sp);

struct DualTree {
  std::vector<std::vector<int>> nodes;  // maximal cliques, each sorted
  std::vector<std::pair<int, int>> edges;
};

/// Dual tree of a stacked p-polytopal graph: maximal cliques joined when
/// they share p vertices.  Throws for non-stacked input.
DualTree dual_tree(const Graph& g, int p);

/// Induced subgraph on the common neighbors of a clique.  `vertices`, when
/// given, receives the original vertex ids in subgraph order.
Graph link(const Graph& g, const std::vector<int>& face, std::vector<int>* vertices = nullptr);

/// Exhaustive enumeration of stack programs with at most max_vertices
/// vertices, stacking only on current facets and yielding one program per
/// isomorphism class of the resulting graph.
void enumerate_stack_programs(int p, int max_vertices,
                              const std::function<void(const StackProgram&, const Graph&)>& yield);
std::vector<StackProgram> all_stack_programs(int p, int max_vertices);

}  // namespace apollo
