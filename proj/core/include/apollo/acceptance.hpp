#pragma once

#include <string>
#include <vector>

#include "apollo/builder.hpp"
#include "apollo/ktree.hpp"

namespace apollo {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double ms = 0.0;
  double limit_ms = 0.0;  // 0: no stated budget
  std::string detail;

  bool ok() const { return pass && (limit_ms <= 0 || ms < limit_ms); }
};

struct AcceptanceOptions {
  unsigned seed = 0;
  int max_vertices = 9;
};

/// Decision/construction coherence scan: every stacked 4-polytopal graph up
/// to max_vertices (one per isomorphism class), its verdict and its exact
/// geometric build.
struct CoherenceScan {
  std::vector<Graph> graphs;
  std::vector<Verdict> verdicts;
  std::vector<BuildResult<QSqrt3>> builds;
  std::vector<std::string> mismatches;

  int total() const { return int(graphs.size()); }
  int agreed() const { return total() - int(mismatches.size()); }
};
CoherenceScan coherence_scan(int max_vertices);

/// Runs the whole acceptance suite; one result per criterion, in order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {});

std::string format_table(const std::vector<CriterionResult>& results);

}  // namespace apollo
