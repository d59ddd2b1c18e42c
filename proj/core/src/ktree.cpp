#include "apollo/ktree.hpp"

#include <algorithm>
#include <set>

namespace apollo {

KTreeOrder ktree_order(const Graph& g, int k) {
  KTreeOrder out;
  if (k < 1 || g.size() < k + 1) return out;
  const int n = g.size();

  std::vector<char> active(n, 1);
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  int remaining = n;
  std::vector<int> removal;
  std::vector<std::vector<int>> hulls;

  auto simplicial = [&](int v) {
    std::vector<int> nb;
    for (int w : g.neighbors(v))
      if (active[w]) nb.push_back(w);
    if (int(nb.size()) != k) return std::vector<int>();
    return is_clique(g, nb) ? nb : std::vector<int>();
  };

  while (remaining > k + 1) {
    int pick = -1;
    std::vector<int> clique;
    for (int v = 0; v < n && pick < 0; ++v) {
      if (!active[v] || deg[v] != k) continue;
      auto nb = simplicial(v);
      if (!nb.empty()) {
        pick = v;
        clique = std::move(nb);
      }
    }
    if (pick < 0) return out;  // no simplicial degree-k vertex: not a k-tree
    active[pick] = 0;
    --remaining;
    for (int w : g.neighbors(pick))
      if (active[w]) --deg[w];
    removal.push_back(pick);
    hulls.push_back(std::move(clique));
  }

  std::vector<int> base;
  for (int v = 0; v < n; ++v)
    if (active[v]) base.push_back(v);
  for (std::size_t a = 0; a < base.size(); ++a)
    for (std::size_t b = a + 1; b < base.size(); ++b)
      if (!g.adjacent(base[a], base[b])) return out;

  out.is_ktree = true;
  out.base = std::move(base);
  out.added.assign(removal.rbegin(), removal.rend());
  out.attach.assign(hulls.rbegin(), hulls.rend());
  return out;
}

StackedCheck is_stacked_polytopal(const Graph& g, int p) {
  if (p < 3) throw std::invalid_argument("is_stacked_polytopal: polytope dimension must be >= 3");
  StackedCheck out;
  if (!is_k_tree(g, p)) {
    out.reason = "not a " + std::to_string(p) + "-tree";
    return out;
  }
  for (auto& c : cliques_of_size(g, p)) {
    int ext = int(common_neighbors(g, c).size());
    if (ext >= 3) {
      out.reason = std::to_string(ext) + " " + std::to_string(p + 1) + "-cliques share a " +
                   std::to_string(p) + "-clique";
      out.witness = c;
      return out;
    }
  }
  out.stacked = true;
  return out;
}

Verdict decide_packable_stacked4(const Graph& g) {
  Verdict v;
  auto sc = is_stacked_polytopal(g, 4);
  if (!sc.stacked) {
    v.decision = Decision::unknown;
    v.reason = "not stacked 4-polytopal: " + sc.reason;
    v.witness = sc.witness;
    return v;
  }
  for (auto& t : cliques_of_size(g, 3)) {
    int ext = int(common_neighbors(g, t).size());
    if (ext >= 6) {
      v.decision = Decision::not_packable;
      v.reason = std::to_string(ext) + " 4-cliques share a 3-clique";
      v.witness = t;
      return v;
    }
  }
  v.decision = Decision::packable;
  return v;
}

Graph graph_of_stack_program(const StackProgram& sp) {
  if (sp.p < 3) throw std::invalid_argument("stack program: polytope dimension must be >= 3");
  Graph g = complete(sp.p + 1);
  for (const auto& s : sp.stacks) {
    if (int(s.size()) != sp.p) throw std::invalid_argument("stack set must have p vertices");
    std::set<int> uniq(s.begin(), s.end());
    if (int(uniq.size()) != sp.p) throw std::invalid_argument("stack set has repeats");
    for (int v : s)
      if (v < 0 || v >= g.size()) throw std::invalid_argument("stack set vertex out of range");
    if (!is_clique(g, s)) throw std::invalid_argument("stack set is not a clique");
    Graph next(g.size() + 1);
    for (auto [u, v] : g.edges()) next.add_edge(u, v);
    for (int v : s) next.add_edge(g.size(), v);
    g = std::move(next);
  }
  return g;
}

DualTree dual_tree(const Graph& g, int p) {
  auto sc = is_stacked_polytopal(g, p);
  if (!sc.stacked) throw std::invalid_argument("dual_tree: graph is not stacked polytopal");
  DualTree t;
  t.nodes = maximal_cliques(g);
  for (std::size_t a = 0; a < t.nodes.size(); ++a)
    for (std::size_t b = a + 1; b < t.nodes.size(); ++b) {
      std::vector<int> inter;
      std::set_intersection(t.nodes[a].begin(), t.nodes[a].end(), t.nodes[b].begin(),
                            t.nodes[b].end(), std::back_inserter(inter));
      if (int(inter.size()) == p) t.edges.emplace_back(int(a), int(b));
    }
  // a stacked polytope's simplices always form a tree under facet-sharing
  if (t.edges.size() + 1 != t.nodes.size())
    throw std::logic_error("dual_tree: clique adjacency is not a tree");
  return t;
}

Graph link(const Graph& g, const std::vector<int>& face, std::vector<int>* vertices) {
  if (!is_clique(g, face)) throw std::invalid_argument("link: face must be a clique");
  auto common = common_neighbors(g, face);
  if (vertices) *vertices = common;
  return induced_subgraph(g, common);
}

namespace {

struct EnumState {
  int p;
  int max_vertices;
  const std::function<void(const StackProgram&, const Graph&)>* yield;
  std::set<std::string> seen;
};

void enum_rec(EnumState& st, StackProgram& prog, const Graph& g,
              std::vector<std::vector<int>>& facets) {
  if (g.size() >= st.max_vertices) return;
  for (std::size_t fi = 0; fi < facets.size(); ++fi) {
    StackProgram next = prog;
    next.stacks.push_back(facets[fi]);
    Graph h = graph_of_stack_program(next);
    std::string key = canonical_form(h);
    if (!st.seen.insert(key).second) continue;  // isomorphic graph already explored
    (*st.yield)(next, h);
    int nv = h.size() - 1;
    std::vector<std::vector<int>> nf;
    nf.reserve(facets.size() - 1 + st.p);
    for (std::size_t k = 0; k < facets.size(); ++k)
      if (k != fi) nf.push_back(facets[k]);
    for (int drop = 0; drop < st.p; ++drop) {
      std::vector<int> f;
      for (int k = 0; k < st.p; ++k)
        if (k != drop) f.push_back(facets[fi][k]);
      f.push_back(nv);
      std::sort(f.begin(), f.end());
      nf.push_back(std::move(f));
    }
    enum_rec(st, next, h, nf);
  }
}

}  // namespace

void enumerate_stack_programs(int p, int max_vertices,
                              const std::function<void(const StackProgram&, const Graph&)>& yield) {
  if (p < 3) throw std::invalid_argument("enumerate_stack_programs: p must be >= 3");
  if (max_vertices < p + 1)
    throw std::invalid_argument("enumerate_stack_programs: max_vertices too small");
  EnumState st{p, max_vertices, &yield, {}};
  StackProgram prog{p, {}};
  Graph g = complete(p + 1);
  st.seen.insert(canonical_form(g));
  yield(prog, g);
  std::vector<std::vector<int>> facets;
  for (int drop = 0; drop <= p; ++drop) {
    std::vector<int> f;
    for (int v = 0; v <= p; ++v)
      if (v != drop) f.push_back(v);
    facets.push_back(std::move(f));
  }
  enum_rec(st, prog, g, facets);
}

std::vector<StackProgram> all_stack_programs(int p, int max_vertices) {
  std::vector<StackProgram> out;
  enumerate_stack_programs(p, max_vertices,
                           [&](const StackProgram& sp, const Graph&) { out.push_back(sp); });
  return out;
}

}  // namespace apollo
