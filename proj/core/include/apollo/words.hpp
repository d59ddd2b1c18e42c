#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "apollo/descartes.hpp"
#include "apollo/rational.hpp"

namespace apollo {

/// A word over the Apollonian group generators R_1..R_{d+2}.
///
/// Letters are stored in product order, matching the written form
/// U = U_n ... U_2 U_1: letters.front() is the leftmost factor and
/// letters.back() is applied first to a configuration.
struct Word {
  int dim = 3;
  std::vector<int> letters;  // 1-based generator indices

  int length() const { return int(letters.size()); }
  bool empty() const { return letters.empty(); }
};

/// Parses whitespace-separated 1-based indices; the rightmost token is the
/// first letter applied.
Word parse_word(std::string_view text, int dim = 3);
std::string to_string(const Word& u);

/// Exact product R_{U_n} ... R_{U_1} of generator matrices.
Mat<Rational> matrix_of(const Word& u);

struct ReducedCheck {
  bool reduced = true;
  int violation = -1;  // 0-based position in product order, -1 when reduced
};

/// Word problem for the 3-dimensional Apollonian group, which is the
/// Coxeter group with relations r_i^2 and (r_i r_j)^3.  A word is reduced
/// iff every prefix keeps the next letter's root positive.
ReducedCheck is_reduced(const Word& u);

/// Shortens a word to a reduced one with the same exact matrix product by
/// repeatedly deleting exchange pairs.
Word simplify(Word u);

struct WeightedSums {
  std::vector<Rational> sigma;  // row sums of U weighted by w
  Rational mass;                // their total
};
WeightedSums weighted_sums(const Word& u, const std::vector<Rational>& w);

/// Verifies the weighted-mass recurrences of the 3-dimensional group for a
/// given word, weight vector and generator index j (1-based):
///   sigma_i(R_j U) = sigma_i(U)                (i != j)
///   sigma_j(R_j U) = Sigma(U) - 2 sigma_j(U)
///   Sigma(R_j U)   = 2 Sigma(U) - 3 sigma_j(U)
///   delta_i(R_j U) = delta_i(U) + delta_j(U)   (i != j)
///   delta_i(R_i U) = -delta_i(U)
struct RecurrenceReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
RecurrenceReport check_recurrences(const Word& u, const std::vector<Rational>& w, int j);

/// Generalized Coxeter sequence: applies the word's letters right-to-left
/// to a starting configuration, recording each freshly created ball.
template <typename S>
struct BallSequence {
  DescartesConfig<S> initial;
  struct Step {
    int letter;  // 1-based
    Ball<S> ball;
  };
  std::vector<Step> steps;
  double max_residual = 0.0;  // float backend: worst validation residual seen

  std::vector<Ball<S>> all_balls() const {
    std::vector<Ball<S>> out = initial.balls;
    for (const auto& s : steps) out.push_back(s.ball);
    return out;
  }
};

template <typename S>
BallSequence<S> coxeter_sequence(const Word& u, const DescartesConfig<S>& start,
                                 double eps = default_tolerance()) {
  for (int a : u.letters)
    if (a < 1 || a > start.dim + 2) throw std::out_of_range("word letter out of range");
  BallSequence<S> seq;
  seq.initial = start;
  DescartesConfig<S> cfg = start;
  for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it) {
    auto [next, ball] = replace(cfg, *it - 1, eps);
    auto rep = validate(next, eps);
    if constexpr (ScalarTraits<S>::exact) {
      if (!rep.valid(0.0))
        throw std::logic_error("coxeter_sequence: exact intermediate configuration invalid");
    } else {
      double r = std::max(to_double(rep.eq1_residual), to_double(rep.eq2_residual));
      if (!rep.bad_pairs.empty()) r = std::max(r, 1.0);
      seq.max_residual = std::max(seq.max_residual, r);
    }
    seq.steps.push_back({*it, ball});
    cfg = std::move(next);
  }
  return seq;
}

/// Executable form of the path-tree lemma: for a reduced word applied after
/// R_1 to the canonical frame, every ball beyond the first five must have
/// integer curvature >= 1, integer height coordinate m2 > 1, and stay
/// disjoint from the lower half-space.
struct PathTreeReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
PathTreeReport pathtree_check(const Word& u);

}  // namespace apollo
