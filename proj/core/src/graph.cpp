#include "apollo/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace apollo {

Graph::Graph(int n) : n_(n), adj_(std::size_t(n) * n, 0), nbr_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

std::size_t Graph::idx(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("vertex index");
  return std::size_t(u) * n_ + v;
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("loops are not allowed");
  if (adjacent(u, v)) return;
  adj_[idx(u, v)] = adj_[idx(v, u)] = 1;
  nbr_[u].insert(std::lower_bound(nbr_[u].begin(), nbr_[u].end(), v), v);
  nbr_[v].insert(std::lower_bound(nbr_[v].begin(), nbr_[v].end(), u), u);
  ++edge_count_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u)
    for (int v : nbr_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph path(int m) {
  Graph g(m);
  for (int i = 0; i + 1 < m; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(int m) {
  if (m < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path(m);
  g.add_edge(m - 1, 0);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph join(const Graph& g, const Graph& h) {
  const int n = g.size(), m = h.size();
  Graph out(n + m);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(n + u, n + v);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < m; ++v) out.add_edge(u, n + v);
  return out;
}

Graph orthoplex(int d) {
  if (d < 1) throw std::invalid_argument("orthoplex dimension must be positive");
  Graph g(2 * d);
  for (int i = 0; i < 2 * d; ++i)
    for (int j = i + 1; j < 2 * d; ++j)
      if (!(j == i + 1 && i % 2 == 0)) g.add_edge(i, j);
  return g;
}

bool is_clique(const Graph& g, const std::vector<int>& verts) {
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b)
      if (!g.adjacent(verts[a], verts[b])) return false;
  return true;
}

std::vector<int> common_neighbors(const Graph& g, const std::vector<int>& verts) {
  std::vector<int> out;
  if (verts.empty()) {
    out.resize(g.size());
    std::iota(out.begin(), out.end(), 0);
    return out;
  }
  for (int v : g.neighbors(verts[0])) {
    bool all = true;
    for (std::size_t k = 1; k < verts.size() && all; ++k) all = g.adjacent(verts[k], v);
    if (all && std::find(verts.begin(), verts.end(), v) == verts.end()) out.push_back(v);
  }
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
  Graph out(int(verts.size()));
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b)
      if (g.adjacent(verts[a], verts[b])) out.add_edge(int(a), int(b));
  return out;
}

bool is_orthoplex(const Graph& g) {
  const int n = g.size();
  if (n < 2 || n % 2) return false;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != n - 2) return false;
  return true;  // complement is 1-regular, i.e. a perfect matching
}

bool is_path_graph(const Graph& g) {
  const int n = g.size();
  if (n == 0) return false;
  if (n == 1) return g.edge_count() == 0;
  if (g.edge_count() != std::size_t(n - 1)) return false;
  int ends = 0;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) > 2 || g.degree(v) == 0) return false;
    if (g.degree(v) == 1) ++ends;
  }
  if (ends != 2) return false;
  // connectivity: walk from an endpoint
  int start = 0;
  while (g.degree(start) != 1) ++start;
  int prev = -1, cur = start, seen = 1;
  while (true) {
    int next = -1;
    for (int w : g.neighbors(cur))
      if (w != prev) next = w;
    if (next < 0) break;
    prev = cur;
    cur = next;
    ++seen;
  }
  return seen == n;
}

bool is_cycle_graph(const Graph& g) {
  const int n = g.size();
  if (n < 3 || g.edge_count() != std::size_t(n)) return false;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != 2) return false;
  int prev = -1, cur = 0, seen = 0;
  do {
    int next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
    prev = cur;
    cur = next;
    ++seen;
  } while (cur != 0 && seen <= n);
  return cur == 0 && seen == n;
}

namespace {

void bron_kerbosch(const Graph& g, std::vector<int>& r, std::vector<int> p, std::vector<int> x,
                   std::vector<std::vector<int>>& out, std::size_t cap) {
  if (p.empty() && x.empty()) {
    if (out.size() >= cap) throw CliqueLimitExceeded("maximal clique cap exceeded");
    out.push_back(r);
    return;
  }
  // pivot maximizing |P ∩ N(u)|
  int pivot = -1, best = -1;
  for (int u : p) {
    int c = 0;
    for (int w : p)
      if (g.adjacent(u, w)) ++c;
    if (c > best) best = c, pivot = u;
  }
  for (int u : x) {
    int c = 0;
    for (int w : p)
      if (g.adjacent(u, w)) ++c;
    if (c > best) best = c, pivot = u;
  }
  std::vector<int> cand;
  for (int v : p)
    if (pivot < 0 || !g.adjacent(pivot, v)) cand.push_back(v);
  for (int v : cand) {
    std::vector<int> p2, x2;
    for (int w : p)
      if (g.adjacent(v, w)) p2.push_back(w);
    for (int w : x)
      if (g.adjacent(v, w)) x2.push_back(w);
    r.push_back(v);
    bron_kerbosch(g, r, std::move(p2), std::move(x2), out, cap);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

void extend_cliques(const Graph& g, std::vector<int>& cur, int k, int minv,
                    std::vector<std::vector<int>>& out, std::size_t cap) {
  if (int(cur.size()) == k) {
    if (out.size() >= cap) throw CliqueLimitExceeded("clique cap exceeded");
    out.push_back(cur);
    return;
  }
  for (int v = minv; v < g.size(); ++v) {
    bool ok = true;
    for (int u : cur)
      if (!g.adjacent(u, v)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    cur.push_back(v);
    extend_cliques(g, cur, k, v + 1, out, cap);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g, std::size_t cap) {
  std::vector<std::vector<int>> out;
  std::vector<int> r, p(g.size());
  std::iota(p.begin(), p.end(), 0);
  bron_kerbosch(g, r, std::move(p), {}, out, cap);
  for (auto& c : out) std::sort(c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> cliques_of_size(const Graph& g, int k, std::size_t cap) {
  if (k < 0) throw std::invalid_argument("clique size");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  extend_cliques(g, cur, k, 0, out, cap);
  return out;
}

namespace {

/// One round of color refinement; returns the number of classes.
int refine(const Graph& g, std::vector<int>& color) {
  const int n = g.size();
  for (;;) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> nc;
      nc.reserve(g.degree(v));
      for (int w : g.neighbors(v)) nc.push_back(color[w]);
      std::sort(nc.begin(), nc.end());
      sig[v] = {color[v], std::move(nc)};
    }
    std::map<std::pair<int, std::vector<int>>, int> order;
    for (int v = 0; v < n; ++v) order.emplace(sig[v], 0);
    int next = 0;
    for (auto& kv : order) kv.second = next++;
    bool changed = false;
    for (int v = 0; v < n; ++v) {
      int c = order.at(sig[v]);
      if (c != color[v]) changed = true;
      color[v] = c;
    }
    if (!changed) return next;
  }
}

std::string adjacency_string(const Graph& g, const std::vector<int>& color) {
  // color is a bijection vertex -> position
  const int n = g.size();
  std::vector<int> pos(n);
  for (int v = 0; v < n; ++v) pos[color[v]] = v;
  std::string s;
  s.reserve(std::size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s.push_back(g.adjacent(pos[i], pos[j]) ? '1' : '0');
  return s;
}

void canon_search(const Graph& g, std::vector<int> color, int classes, std::string& best) {
  const int n = g.size();
  if (classes == n) {
    std::string s = adjacency_string(g, color);
    if (best.empty() || s < best) best = s;
    return;
  }
  // smallest non-singleton class
  std::vector<int> count(classes, 0);
  for (int v = 0; v < n; ++v) ++count[color[v]];
  int target = -1;
  for (int c = 0; c < classes; ++c)
    if (count[c] > 1 && (target < 0 || count[c] < count[target])) target = c;
  // individualize each member, skipping vertices with identical rows (twins)
  std::vector<int> cell;
  for (int v = 0; v < n; ++v)
    if (color[v] == target) cell.push_back(v);
  std::vector<int> tried;
  for (int v : cell) {
    // swapping twins is an automorphism, so one representative suffices
    bool twin = false;
    for (int u : tried) {
      bool same = true;
      for (int w = 0; w < n && same; ++w) {
        if (w == u || w == v) continue;
        if (g.adjacent(u, w) != g.adjacent(v, w)) same = false;
      }
      if (same) {
        twin = true;
        break;
      }
    }
    if (twin) continue;
    tried.push_back(v);
    std::vector<int> c2(n);
    for (int w = 0; w < n; ++w) c2[w] = 2 * color[w] + 1;
    c2[v] = 2 * color[v];
    int k = refine(g, c2);
    canon_search(g, std::move(c2), k, best);
  }
}

}  // namespace

std::string canonical_form(const Graph& g) {
  const int n = g.size();
  std::vector<int> color(n, 0);
  int classes = n == 0 ? 0 : refine(g, color);
  std::string best;
  if (n == 0) return best;
  canon_search(g, std::move(color), classes, best);
  return std::to_string(n) + ":" + best;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace apollo
