#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "apollo/builder.hpp"
#include "apollo/ktree.hpp"
#include "apollo/lift.hpp"
#include "apollo/words.hpp"

namespace apollo {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Serialization notes:
//  - objects are emitted with sorted keys, arrays in order, no whitespace;
//  - floats are printed with 17 significant digits, so equal inputs give
//    byte-identical output;
//  - exact scalars serialize as {"a":[p,q],"b":[p,q]} meaning a + b*sqrt(3).

std::string graph_to_json(const Graph& g);
Graph parse_graph_json(const std::string& text);
/// Plain-text edge list: one "i j" pair per line; blank lines are skipped.
Graph parse_graph_text(const std::string& text);
/// Accepts either format, keying on the leading '{'.
Graph parse_graph_any(const std::string& text);

std::string stack_program_to_json(const StackProgram& sp);
StackProgram parse_stack_program(const std::string& text);

std::string packing_to_json(const Packing<double>& p);
std::string packing_to_json(const Packing<QSqrt3>& p);
using AnyPacking = std::variant<Packing<double>, Packing<QSqrt3>>;
/// Detects the scalar backend from the first numeric field.
AnyPacking parse_packing(const std::string& text);

std::string verdict_to_json(const Verdict& v);

std::string ball_sequence_to_json(const BallSequence<QSqrt3>& seq);

struct LiftJson {
  std::vector<std::vector<double>> vertices;
  std::vector<std::pair<int, int>> edges;
  int stress_dim = 0;
};
std::string lift_to_json(const LiftJson& l);

}  // namespace apollo
