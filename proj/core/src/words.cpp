#include "apollo/words.hpp"

#include <sstream>
#include <stdexcept>

#include "apollo/qsqrt3.hpp"

namespace apollo {

namespace {

void check_letters(const Word& u) {
  for (int a : u.letters)
    if (a < 1 || a > u.dim + 2)
      throw std::out_of_range("word letter " + std::to_string(a) + " out of range for d=" +
                              std::to_string(u.dim));
}

void require_dim3(const Word& u, const char* op) {
  if (u.dim != 3)
    throw std::invalid_argument(std::string(op) + " is defined for dimension 3 only");
}

/// Product of the generator matrices for letters [from, to).
Mat<Rational> partial_product(const Word& u, int from, int to) {
  Mat<Rational> m = Mat<Rational>::identity(u.dim + 2);
  for (int i = from; i < to; ++i) m = m * generator_matrix<Rational>(u.dim, u.letters[i]);
  return m;
}

/// Sign pattern of a root vector in the reflection representation: every
/// root is all-nonnegative or all-nonpositive.
int root_sign(const Mat<Rational>& prefix, int letter) {
  bool nonneg = true, nonpos = true;
  for (int r = 0; r < prefix.rows(); ++r) {
    const Rational& v = prefix(r, letter - 1);
    if (v > 0) nonpos = false;
    if (v < 0) nonneg = false;
  }
  if (nonneg) return 1;
  if (nonpos) return -1;
  throw std::logic_error("root with mixed signs; representation corrupted");
}

}  // namespace

Word parse_word(std::string_view text, int dim) {
  Word u;
  u.dim = dim;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad word token '" + tok + "'");
    u.letters.push_back(v);
  }
  check_letters(u);
  return u;
}

std::string to_string(const Word& u) {
  std::string s;
  for (std::size_t i = 0; i < u.letters.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(u.letters[i]);
  }
  return s;
}

Mat<Rational> matrix_of(const Word& u) {
  check_letters(u);
  return partial_product(u, 0, u.length());
}

ReducedCheck is_reduced(const Word& u) {
  require_dim3(u, "is_reduced");
  check_letters(u);
  // For d = 3 the Apollonian matrices coincide with the reflection
  // representation of the Coxeter group, so prefix * e_letter is the root
  // moved by the next letter; a negative root means the length drops.
  Mat<Rational> prefix = Mat<Rational>::identity(u.dim + 2);
  for (int i = 0; i < u.length(); ++i) {
    if (root_sign(prefix, u.letters[i]) < 0) return {false, i};
    prefix = prefix * generator_matrix<Rational>(u.dim, u.letters[i]);
  }
  return {true, -1};
}

Word simplify(Word u) {
  require_dim3(u, "simplify");
  check_letters(u);
  for (;;) {
    auto rc = is_reduced(u);
    if (rc.reduced) return u;
    const int j = rc.violation;
    // The exchange condition: some earlier letter i can be deleted together
    // with letter j without changing the group element.
    Mat<Rational> whole = partial_product(u, 0, u.length());
    bool done = false;
    for (int i = 0; i < j && !done; ++i) {
      Word cand = u;
      cand.letters.erase(cand.letters.begin() + j);
      cand.letters.erase(cand.letters.begin() + i);
      if (partial_product(cand, 0, cand.length()) == whole) {
        u = std::move(cand);
        done = true;
      }
    }
    if (!done) throw std::logic_error("simplify: exchange pair not found");
  }
}

WeightedSums weighted_sums(const Word& u, const std::vector<Rational>& w) {
  if (int(w.size()) != u.dim + 2)
    throw std::invalid_argument("weight vector must have length d+2");
  Mat<Rational> m = matrix_of(u);
  WeightedSums out;
  out.sigma = m * w;
  for (const auto& s : out.sigma) out.mass += s;
  return out;
}

RecurrenceReport check_recurrences(const Word& u, const std::vector<Rational>& w, int j) {
  require_dim3(u, "check_recurrences");
  if (j < 1 || j > u.dim + 2) throw std::out_of_range("generator index");
  if (int(w.size()) != u.dim + 2)
    throw std::invalid_argument("weight vector must have length d+2");

  auto prepend = [](const Word& v, int letter) {
    Word r = v;
    r.letters.insert(r.letters.begin(), letter);
    return r;
  };
  auto sums = [&](const Word& v) { return weighted_sums(v, w); };

  RecurrenceReport rep;
  auto flag = [&](const std::string& msg) { rep.violations.push_back(msg); };

  const auto base = sums(u);
  const Word ju = prepend(u, j);
  const auto after = sums(ju);

  const int n = u.dim + 2;
  for (int i = 1; i <= n; ++i) {
    if (i != j) {
      if (after.sigma[i - 1] != base.sigma[i - 1])
        flag("sigma_" + std::to_string(i) + "(R_j U) != sigma_" + std::to_string(i) + "(U)");
    } else {
      if (after.sigma[i - 1] != base.mass - 2 * base.sigma[i - 1])
        flag("sigma_j(R_j U) != Sigma(U) - 2 sigma_j(U)");
    }
  }
  if (after.mass != 2 * base.mass - 3 * base.sigma[j - 1])
    flag("Sigma(R_j U) != 2 Sigma(U) - 3 sigma_j(U)");

  // delta_i(V) = Sigma(R_i V) - Sigma(V)
  auto delta = [&](int i, const Word& v, const Rational& mass_v) {
    return sums(prepend(v, i)).mass - mass_v;
  };
  for (int i = 1; i <= n; ++i) {
    Rational lhs = delta(i, ju, after.mass);
    if (i != j) {
      if (lhs != delta(i, u, base.mass) + delta(j, u, base.mass))
        flag("delta_" + std::to_string(i) + "(R_j U) != delta_i(U) + delta_j(U)");
    } else {
      if (lhs != -delta(i, u, base.mass)) flag("delta_j(R_j U) != -delta_j(U)");
    }
  }
  return rep;
}

PathTreeReport pathtree_check(const Word& u) {
  require_dim3(u, "pathtree_check");
  PathTreeReport rep;
  if (u.empty() || u.letters.back() != 1)
    throw std::invalid_argument("pathtree_check: word must end with R_1");
  if (!is_reduced(u).reduced) throw std::invalid_argument("pathtree_check: word must be reduced");

  auto cfg = canonical_configuration<QSqrt3>(3);
  const Ball<QSqrt3> lower = cfg.balls[0];  // the half-space x1 <= 0
  auto seq = coxeter_sequence(u, cfg);
  for (std::size_t k = 0; k < seq.steps.size(); ++k) {
    const auto& ball = seq.steps[k].ball;
    const std::string tag = "S_" + std::to_string(6 + k);
    auto m = curvature_center(ball);
    if (!m[0].is_integer() || m[0] < QSqrt3(1))
      rep.violations.push_back(tag + ": curvature " + m[0].str() + " not an integer >= 1");
    if (!m[1].is_integer() || !(m[1] > QSqrt3(1)))
      rep.violations.push_back(tag + ": m2 " + m[1].str() + " not an integer > 1");
    if (contact(lower, ball).cls != ContactClass::disjoint)
      rep.violations.push_back(tag + ": not disjoint from S_1");
  }
  return rep;
}

}  // namespace apollo
