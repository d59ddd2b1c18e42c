#include "apollo/json_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace apollo {

using nlohmann::json;

namespace {

void dump_sorted(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {  // std::map order: sorted keys
        if (!first) out += ',';
        first = false;
        out += json(it.key()).dump();
        out += ':';
        dump_sorted(it.value(), out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        dump_sorted(j[i], out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
      out += buf;
      break;
    }
    default:
      out += j.dump();
  }
}

std::string dump_sorted(const json& j) {
  std::string out;
  dump_sorted(j, out);
  return out;
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

json rational_to_json(const Rational& r) {
  auto p = to_int64_pair(r);
  if (p) return json::array({p->first, p->second});
  return json::array({numerator(r).str(), denominator(r).str()});
}

Rational rational_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("rational must be [num, den]");
  auto part = [&](const json& v) -> BigInt {
    if (v.is_string()) return BigInt(v.get<std::string>());
    if (v.is_number_integer()) return BigInt(v.get<std::int64_t>());
    if (v.is_number_unsigned()) return BigInt(v.get<std::uint64_t>());
    throw ParseError("rational entries must be integers");
  };
  BigInt den = part(j[1]);
  if (den == 0) throw ParseError("rational with zero denominator");
  return Rational(part(j[0]), den);
}

json scalar_to_json(double v) { return v; }
json scalar_to_json(const QSqrt3& v) {
  return json{{"a", rational_to_json(v.rational_part())}, {"b", rational_to_json(v.sqrt3_part())}};
}

template <typename S>
S scalar_from_json(const json& j);

template <>
double scalar_from_json<double>(const json& j) {
  if (!j.is_number()) throw ParseError("expected a number");
  return j.get<double>();
}

template <>
QSqrt3 scalar_from_json<QSqrt3>(const json& j) {
  if (j.is_number_integer()) return QSqrt3(Rational(j.get<std::int64_t>()));
  if (!j.is_object() || !j.contains("a") || !j.contains("b"))
    throw ParseError("exact scalar must be {\"a\":[p,q],\"b\":[p,q]}");
  return QSqrt3(rational_from_json(j["a"]), rational_from_json(j["b"]));
}

template <typename S>
json ball_to_json(const Ball<S>& b) {
  json j;
  if (b.finite()) {
    j["kind"] = "finite";
    j["curvature"] = scalar_to_json(b.curvature);
    json c = json::array();
    for (const auto& x : b.point) c.push_back(scalar_to_json(x));
    j["center"] = c;
  } else {
    j["kind"] = "halfspace";
    json n = json::array();
    for (const auto& x : b.point) n.push_back(scalar_to_json(x));
    j["normal"] = n;
    j["offset"] = scalar_to_json(b.offset);
  }
  return j;
}

template <typename S>
Ball<S> ball_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ParseError("ball must have a kind");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "finite") {
    VecS<S> c;
    for (const auto& x : j.at("center")) c.push_back(scalar_from_json<S>(x));
    S k = scalar_from_json<S>(j.at("curvature"));
    if (sign(k) == 0) throw ParseError("finite ball with zero curvature");
    return Ball<S>{BallKind::finite, k, std::move(c), S{}};
  }
  if (kind == "halfspace") {
    VecS<S> n;
    for (const auto& x : j.at("normal")) n.push_back(scalar_from_json<S>(x));
    return Ball<S>{BallKind::halfspace, S{}, std::move(n), scalar_from_json<S>(j.at("offset"))};
  }
  throw ParseError("unknown ball kind '" + kind + "'");
}

json graph_to_json_obj(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  return json{{"n", g.size()}, {"edges", edges}};
}

Graph graph_from_json_obj(const json& j) {
  if (!j.is_object() || !j.contains("n")) throw ParseError("graph must have vertex count n");
  Graph g(j["n"].get<int>());
  for (const auto& e : j.value("edges", json::array())) {
    if (!e.is_array() || e.size() != 2) throw ParseError("edge must be [i, j]");
    g.add_edge(e[0].get<int>(), e[1].get<int>());
  }
  return g;
}

template <typename S>
json packing_to_json_obj(const Packing<S>& p) {
  json balls = json::array();
  for (const auto& b : p.balls) balls.push_back(ball_to_json(b));
  return json{{"d", p.dim},
              {"tolerance", p.tolerance},
              {"balls", balls},
              {"graph", graph_to_json_obj(p.graph)}};
}

template <typename S>
Packing<S> packing_from_json_obj(const json& j) {
  Packing<S> p;
  p.dim = j.at("d").get<int>();
  p.tolerance = j.value("tolerance", default_tolerance());
  std::vector<Ball<S>> balls;
  for (const auto& b : j.at("balls")) {
    balls.push_back(ball_from_json<S>(b));
    if (balls.back().dim() != p.dim) throw ParseError("ball dimension mismatch");
  }
  p.balls = std::move(balls);
  if (j.contains("graph"))
    p.graph = graph_from_json_obj(j["graph"]);
  else
    p.graph = tangency_graph(p.balls, p.tolerance);
  if (p.graph.size() != int(p.balls.size())) throw ParseError("graph size mismatch");
  return p;
}

/// True when the packing uses exact scalars ({"a":..,"b":..} objects).
bool looks_exact(const json& j) {
  for (const auto& b : j.at("balls")) {
    if (b.contains("curvature")) return b["curvature"].is_object();
    if (b.contains("offset")) return b["offset"].is_object();
  }
  return false;
}

}  // namespace

std::string graph_to_json(const Graph& g) { return dump_sorted(graph_to_json_obj(g)); }

Graph parse_graph_json(const std::string& text) { return graph_from_json_obj(parse(text)); }

Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<int, int>> edges;
  int maxv = -1;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    int u, v;
    if (!(ls >> u)) continue;  // blank line
    if (!(ls >> v)) throw ParseError("edge line needs two vertex ids: '" + line + "'");
    if (u < 0 || v < 0) throw ParseError("negative vertex id");
    edges.emplace_back(u, v);
    maxv = std::max({maxv, u, v});
  }
  Graph g(maxv + 1);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph parse_graph_any(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_graph_json(text) : parse_graph_text(text);
  }
  throw ParseError("empty graph input");
}

std::string stack_program_to_json(const StackProgram& sp) {
  json stacks = json::array();
  for (const auto& s : sp.stacks) stacks.push_back(s);
  return dump_sorted(json{{"p", sp.p}, {"stacks", stacks}});
}

StackProgram parse_stack_program(const std::string& text) {
  json j = parse(text);
  StackProgram sp;
  sp.p = j.at("p").get<int>();
  for (const auto& s : j.value("stacks", json::array()))
    sp.stacks.push_back(s.get<std::vector<int>>());
  return sp;
}

std::string packing_to_json(const Packing<double>& p) { return dump_sorted(packing_to_json_obj(p)); }
std::string packing_to_json(const Packing<QSqrt3>& p) { return dump_sorted(packing_to_json_obj(p)); }

AnyPacking parse_packing(const std::string& text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("balls") || j["balls"].empty())
    throw ParseError("packing needs a non-empty ball list");
  if (looks_exact(j)) return packing_from_json_obj<QSqrt3>(j);
  return packing_from_json_obj<double>(j);
}

std::string verdict_to_json(const Verdict& v) {
  json j{{"decision", to_string(v.decision)}};
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (v.witness) j["witness"] = *v.witness;
  return dump_sorted(j);
}

std::string ball_sequence_to_json(const BallSequence<QSqrt3>& seq) {
  json balls = json::array();
  for (const auto& b : seq.all_balls()) balls.push_back(ball_to_json(b));
  json steps = json::array();
  for (const auto& s : seq.steps) steps.push_back(s.letter);
  return dump_sorted(json{{"balls", balls}, {"letters", steps}});
}

std::string lift_to_json(const LiftJson& l) {
  json verts = json::array();
  for (const auto& v : l.vertices) verts.push_back(v);
  json edges = json::array();
  for (auto [u, w] : l.edges) edges.push_back(json::array({u, w}));
  return dump_sorted(json{{"vertices", verts}, {"edges", edges}, {"stress_dim", l.stress_dim}});
}

}  // namespace apollo
