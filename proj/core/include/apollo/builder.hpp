#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "apollo/descartes.hpp"
#include "apollo/ktree.hpp"

namespace apollo {

/// A validated ball collection: every pair is tangent or disjoint, and the
/// graph records exactly the tangent pairs.
template <typename S>
struct Packing {
  int dim = 0;
  double tolerance = 1e-9;
  std::vector<Ball<S>> balls;
  Graph graph;

  int size() const { return int(balls.size()); }
};

struct NotAPacking : std::runtime_error {
  NotAPacking(int i_, int j_, ContactClass cls_)
      : std::runtime_error("balls " + std::to_string(i_) + "," + std::to_string(j_) + " are " +
                           to_string(cls_)),
        i(i_),
        j(j_),
        cls(cls_) {}
  int i, j;
  ContactClass cls;
};

/// Tangency graph of a ball list; throws NotAPacking on an overlapping,
/// nested or boundary-sharing pair.
template <typename S>
Graph tangency_graph(const std::vector<Ball<S>>& balls, double eps = default_tolerance()) {
  Graph g(int(balls.size()));
  for (int i = 0; i < int(balls.size()); ++i)
    for (int j = i + 1; j < int(balls.size()); ++j) {
      auto c = contact(balls[i], balls[j], eps);
      if (c.tangent())
        g.add_edge(i, j);
      else if (c.cls != ContactClass::disjoint)
        throw NotAPacking(i, j, c.cls);
    }
  return g;
}

template <typename S>
Packing<S> make_packing(int dim, std::vector<Ball<S>> balls, double eps = default_tolerance()) {
  Packing<S> p;
  p.dim = dim;
  p.tolerance = eps;
  p.graph = tangency_graph(balls, eps);
  p.balls = std::move(balls);
  return p;
}

struct BuildFailure {
  int vertex = -1;  // vertex being placed when the violation appeared
  int other = -1;   // earlier vertex it clashes with
  ContactClass found = ContactClass::overlapping;
  bool expected_edge = false;
  std::string what;
};

template <typename S>
struct BuildStep {
  int vertex;
  std::vector<int> attach;  // the (d+1)-clique the vertex was stacked onto
  int completed_by;         // earlier vertex completing the Descartes configuration
  Ball<S> ball;
};

template <typename S>
struct BuildResult {
  std::optional<Packing<S>> packing;
  std::vector<BuildStep<S>> trace;
  std::optional<BuildFailure> failure;
  bool closed_chain = false;  // tangency graph gained an edge over the request

  bool ok() const { return packing.has_value(); }
};

namespace detail {

inline BuildFailure mismatch_failure(int v, int u, ContactClass found, bool expected_edge) {
  BuildFailure f;
  f.vertex = v;
  f.other = u;
  f.found = found;
  f.expected_edge = expected_edge;
  f.what = "balls of vertices " + std::to_string(u) + " and " + std::to_string(v) + " are " +
           std::string(to_string(found)) + (expected_edge ? ", expected tangent" : ", expected disjoint");
  return f;
}

}  // namespace detail

/// Realizes a stacked (d+1)-polytopal graph as an Apollonian d-ball packing
/// following a k-tree construction order: the base (d+2)-clique takes the
/// canonical configuration in index order, and every further vertex gets the
/// ball replacing, in the configuration of its attachment clique plus the
/// unique completing vertex, the completing vertex's ball.
///
/// The first contact violation in construction order is returned as the
/// failure witness; this is the geometric "not packable" signal.
template <typename S>
BuildResult<S> build_with_order(const Graph& g, int d, const KTreeOrder& order,
                                double eps = default_tolerance()) {
  BuildResult<S> res;
  const auto cfg0 = canonical_configuration<S>(d);
  std::vector<Ball<S>> ball_of(g.size());
  std::vector<int> placed;  // in placement order

  for (std::size_t i = 0; i < order.base.size(); ++i) {
    ball_of[order.base[i]] = cfg0.balls[i];
    placed.push_back(order.base[i]);
  }

  for (std::size_t step = 0; step < order.added.size(); ++step) {
    const int v = order.added[step];
    std::vector<int> attach = order.attach[step];
    std::sort(attach.begin(), attach.end());

    // the unique already-placed vertex adjacent to the whole attachment clique
    int completing = -1;
    for (int u : placed) {
      if (std::find(attach.begin(), attach.end(), u) != attach.end()) continue;
      bool all = true;
      for (int a : attach)
        if (!g.adjacent(u, a)) {
          all = false;
          break;
        }
      if (all) {
        if (completing >= 0)
          throw std::logic_error("build: attachment clique completed by two prior vertices");
        completing = u;
      }
    }
    if (completing < 0)
      throw std::logic_error("build: attachment clique not part of a prior configuration");

    DescartesConfig<S> cfg;
    cfg.dim = d;
    for (int a : attach) cfg.balls.push_back(ball_of[a]);
    cfg.balls.push_back(ball_of[completing]);
    auto [unused, fresh] = replace(cfg, d + 1, eps);
    (void)unused;

    BuildStep<S> tr{v, attach, completing, fresh};
    res.trace.push_back(tr);

    for (int u : placed) {
      auto c = contact(ball_of[u], fresh, eps);
      const bool expect_edge = g.adjacent(u, v);
      if (expect_edge != c.tangent()) {
        res.failure = detail::mismatch_failure(v, u, c.cls, expect_edge);
        return res;
      }
      if (!expect_edge && c.cls != ContactClass::disjoint) {
        res.failure = detail::mismatch_failure(v, u, c.cls, false);
        return res;
      }
    }
    ball_of[v] = fresh;
    placed.push_back(v);
  }

  Packing<S> p;
  p.dim = d;
  p.tolerance = eps;
  p.balls = std::move(ball_of);
  p.graph = g;
  res.packing = std::move(p);
  return res;
}

template <typename S>
BuildResult<S> build_from_graph(const Graph& g, int d, double eps = default_tolerance()) {
  auto sc = is_stacked_polytopal(g, d + 1);
  if (!sc.stacked)
    throw std::invalid_argument("build_from_graph: input is not stacked " + std::to_string(d + 1) +
                                "-polytopal (" + sc.reason + ")");
  auto order = ktree_order(g, d + 1);
  return build_with_order<S>(g, d, order, eps);
}

/// The axis construction for K_d * P_m: two half-spaces, d unit balls, and
/// path balls added alternately toward the middle.  The path in ball order
/// is ... t3 t1 A B t2 t4 ...; construction stops at the first violation.
/// For d = 3, m = 6 the chain closes exactly into Soddy's hexlet and the
/// result carries closed_chain = true with tangency graph K_3 * C_6.
template <typename S>
BuildResult<S> canonical_kd_pm(int d, int m, double eps = default_tolerance()) {
  if (d < 3) throw std::invalid_argument("canonical_kd_pm: d must be >= 3");
  if (m < 0) throw std::invalid_argument("canonical_kd_pm: m must be >= 0");
  BuildResult<S> res;
  const auto cfg0 = canonical_configuration<S>(d);

  // Vertex ids: 0..d-1 the unit balls (K_d part), d+pos the path vertex at
  // position pos.  Creation order along the axis is A, B, t1, t2, ...; the
  // path reads ... t3 t1 A B t2 t4 ...
  const int la = m >= 1 ? (m - 1) / 2 : 0;  // path position of A
  auto position_of = [&](int creation) {
    if (creation == 0) return la;
    if (creation == 1) return la + 1;
    int k = creation - 1;  // t_k
    return (k % 2) ? la - (k + 1) / 2 : la + 1 + k / 2;
  };

  const Graph expected = join(complete(d), path(m));
  std::vector<Ball<S>> balls(cfg0.balls.begin() + 2, cfg0.balls.end());
  std::vector<int> ids(d);
  for (int i = 0; i < d; ++i) ids[i] = i;

  auto place = [&](const Ball<S>& fresh, int creation) -> bool {
    const int v = d + position_of(creation);
    for (std::size_t u = 0; u < balls.size(); ++u) {
      auto c = contact(balls[u], fresh, eps);
      const bool expect = expected.adjacent(ids[u], v);
      if (expect && !c.tangent()) {
        res.failure = detail::mismatch_failure(v, ids[u], c.cls, true);
        return false;
      }
      if (!expect && !c.tangent() && c.cls != ContactClass::disjoint) {
        res.failure = detail::mismatch_failure(v, ids[u], c.cls, false);
        return false;
      }
      if (!expect && c.tangent()) {
        // an extra tangency closes the chain: Soddy's hexlet when the last
        // ball of K_3 * P_6 meets its opposite number exactly
        if (creation + 1 == m && d == 3 && m == 6) {
          res.closed_chain = true;
        } else {
          res.failure = detail::mismatch_failure(v, ids[u], c.cls, false);
          return false;
        }
      }
    }
    balls.push_back(fresh);
    ids.push_back(v);
    return true;
  };

  if (m >= 1 && !place(cfg0.balls[0], 0)) return res;
  if (m >= 2 && !place(cfg0.balls[1], 1)) return res;

  // Each side alternates the replaced slot: on the A side, replacing B
  // yields t1 (tangent to A), then replacing A yields t3 (tangent to t1),
  // and so on; symmetrically on the B side.
  DescartesConfig<S> side_a = cfg0, side_b = cfg0;
  int slot_a = 1, slot_b = 0;
  for (int k = 1; k + 2 <= m; ++k) {
    if (k % 2) {
      auto [next, fresh] = replace(side_a, slot_a, eps);
      side_a = std::move(next);
      slot_a ^= 1;
      if (!place(fresh, k + 1)) return res;
    } else {
      auto [next, fresh] = replace(side_b, slot_b, eps);
      side_b = std::move(next);
      slot_b ^= 1;
      if (!place(fresh, k + 1)) return res;
    }
  }

  // reorder into vertex-id order before publishing
  std::vector<Ball<S>> ordered(balls.size());
  for (std::size_t u = 0; u < balls.size(); ++u) ordered[ids[u]] = balls[u];
  Packing<S> p;
  p.dim = d;
  p.tolerance = eps;
  p.graph = tangency_graph(ordered, eps);
  p.balls = std::move(ordered);
  res.packing = std::move(p);
  return res;
}

/// Soddy's hexlet: nine balls, tangency graph K_3 * C_6, built exactly.
template <typename S = QSqrt3>
Packing<S> soddy_hexlet() {
  auto res = canonical_kd_pm<S>(3, 6);
  if (!res.ok() || !res.closed_chain) throw std::logic_error("hexlet construction failed");
  return *res.packing;
}

/// Ball packing of the (d+1)-orthoplex skeleton: half-spaces, 2(d-1) unit
/// balls on the vertices of an orthoplex of edge 2 at height 1, and two
/// radius-1/2 balls on the axis.
Packing<double> orthoplex_join_packing(int d, double eps = default_tolerance());

/// The attempt to realize orthoplex(d-1) * P_4 instead: the two axis balls
/// come out tangent, so the path closes into C_4; returned as a failure
/// with the offending pair.
BuildResult<double> orthoplex_path4_attempt(int d, double eps = default_tolerance());

struct HexletInstance {
  std::vector<int> triangle;  // the three mutually tangent balls
  std::vector<int> cycle;     // six balls in cyclic order
};

/// Finds every induced K_3 * C_6 configuration in a 3-dimensional packing.
template <typename S>
std::vector<HexletInstance> detect_hexlet(const Packing<S>& p) {
  if (p.dim != 3) throw std::invalid_argument("detect_hexlet: packing must be 3-dimensional");
  std::vector<HexletInstance> out;
  std::set<std::vector<int>> seen;
  for (auto& tri : cliques_of_size(p.graph, 3)) {
    auto linkv = common_neighbors(p.graph, tri);
    if (int(linkv.size()) < 6) continue;
    Graph lg = induced_subgraph(p.graph, linkv);
    const int L = int(linkv.size());
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int from) {
      if (int(pick.size()) == 6) {
        std::vector<int> sub;
        for (int i : pick) sub.push_back(i);
        if (!is_cycle_graph(induced_subgraph(lg, sub))) return;
        std::vector<int> key = tri;
        for (int i : pick) key.push_back(linkv[i]);
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) return;
        HexletInstance h;
        h.triangle = tri;
        // walk the 6-cycle in order
        std::vector<int> ids;
        for (int i : pick) ids.push_back(linkv[i]);
        Graph cg = induced_subgraph(p.graph, ids);
        int prev = -1, cur = 0;
        for (int s = 0; s < 6; ++s) {
          h.cycle.push_back(ids[cur]);
          int next = cg.neighbors(cur)[0] == prev ? cg.neighbors(cur)[1] : cg.neighbors(cur)[0];
          prev = cur;
          cur = next;
        }
        out.push_back(std::move(h));
        return;
      }
      for (int i = from; i < L; ++i) {
        pick.push_back(i);
        rec(i + 1);
        pick.pop_back();
      }
    };
    rec(0);
  }
  return out;
}

/// Lower bound (d-2)/(d + sqrt(2 d^2 - 2 d)) on the radius of any ball
/// tangent to the d unit balls of the canonical configuration.
template <typename S>
S min_tangent_radius(int d) {
  if (d < 3) throw std::invalid_argument("min_tangent_radius: d must be >= 3");
  const S root = ScalarTraits<S>::sqrt(S(2 * d * d - 2 * d));
  return S(d - 2) / (S(d) + root);
}

/// Entrywise conversion of balls/packings between scalar backends.
template <typename To, typename From>
Ball<To> ball_cast(const Ball<From>& b) {
  Ball<To> out;
  out.kind = b.kind;
  out.curvature = To(to_double(b.curvature));
  out.point.reserve(b.point.size());
  for (const auto& x : b.point) out.point.push_back(To(to_double(x)));
  out.offset = To(to_double(b.offset));
  return out;
}

template <typename To, typename From>
Packing<To> packing_cast(const Packing<From>& p) {
  Packing<To> out;
  out.dim = p.dim;
  out.tolerance = p.tolerance;
  out.graph = p.graph;
  out.balls.reserve(p.balls.size());
  for (const auto& b : p.balls) out.balls.push_back(ball_cast<To, From>(b));
  return out;
}

}  // namespace apollo
