#pragma once

#include "negacantor/codec.hpp"
#include "negacantor/evaluator.hpp"
#include "negacantor/params.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace negacantor {

enum class DerivativeTag { Zero, One, FinitePositive, Infinite, Undetermined };

std::string to_string(DerivativeTag tag);

// Classification of lim_n prod_{j<=n} d_j p~_{eps_j,j} along a digit path.
// One only when every factor is exactly 1; FinitePositive when all factors
// beyond the eventual cycle are 1; otherwise the per-cycle product decides
// (|Q| < 1 -> Zero, |Q| > 1 -> Infinite, |Q| = 1 -> Undetermined).
struct DerivativeClass {
  DerivativeTag tag = DerivativeTag::Undetermined;
  double log_rate = 0.0;  // per-position geometric log-mean of the factors
};

struct QuotientPair {
  long k = 0;
  Rat b_prime;
  Rat b_doubleprime;
};

struct NowhereDiffReport {
  bool qualifies = false;
  bool alternating_ok = false;  // p_{e,n} p_{e-1,n} < 0 in every column
  bool growth_ok = false;       // not both per-period |prod d p| < 1
  Rat period_prod_low;          // prod over one period of d_k p_{0,k}
  Rat period_prod_high;         // prod over one period of d_k p_{d_k-1,k}
  int divergence_case = 0;      // 1..5 when qualifying, by the |prod| vs 1 split
  std::vector<std::string> reasons;

  std::string to_json_string() const;
};

struct MonotonicityReport {
  SignClass sign_class = SignClass::AllPositive;
  bool strict = false;  // strict increase demanded (all-positive matrices)
  long pairs_checked = 0;
  long violations = 0;  // ordered pairs with a decrease (or tie when strict)
  bool inversion_found = false;
  std::vector<int> inversion_prefix_low, inversion_prefix_high;
  Rat increment_low, increment_high;

  std::string to_json_string() const;
};

// Partial sums of sum_n (beta_{0,n}+...+beta_{d_n-1,n}) / (d_1...d_n) with
// the periodic tail closed exactly; stops once the tail drops below tol.
EvalResult integral_closed_form(const Params& ps, const Rat& tol);

// Guaranteed enclosure of the integral from the depth-n cylinder partition:
// each cylinder contributes F~(left) plus the exact range of its completions
// (prod * [0,1] for non-negative matrices, prod * [-M,M] otherwise). Guarded
// to at most 10^6 cylinders.
Interval integral_quadrature(const Params& ps, int depth);

// F~(right endpoint) - F~(left endpoint), both via canonical-tail
// evaluation. Equals prod_j p~_{c_j,j} exactly.
Rat cylinder_increment(const Params& ps, const CylinderId& c);

// prod_{j<=n} d_j p~_{eps_j,j}; digits past the prefix come from the
// canonical tail pattern.
Rat derivative_partial_product(const Params& ps, const NegaDigits& x, long n);

// For canonical tails the factor sequence is eventually periodic and the
// classification is exact; for truncated germs the observed factors decide.
// depth caps the explicit head (0 = whole prefix).
DerivativeClass derivative_limit(const Params& ps, const NegaDigits& x, long depth = 0);

NowhereDiffReport nowhere_diff_condition(const Params& ps);

// One-sided difference quotients at a point with two representations,
//   B'_k over x'_k = x0 + 1/(d_1...d_{n+k}),
//   B''_k over x''_k = x0 - 1/(d_1...d_{n+k}),
// via the parity-split closed forms; every pair is cross-checked against the
// direct quotient evaluated on the explicitly constructed digit strings
// (throws std::logic_error on any mismatch). x0 must be nega-rational.
std::vector<QuotientPair> quotient_sequences(const Params& ps, const NegaDigits& x0, int k_max);

// Samples exact rational pairs x1 < x2 and compares F~ values; for
// mixed-sign matrices additionally locates sibling cylinders with
// opposite-sign increments (an explicit non-monotonicity witness).
MonotonicityReport monotonicity_probe(const Params& ps, long n_pairs, std::uint64_t seed);

// CSV columns: k, decimal (30 significant digits) and exact num/den for both
// quotient sequences.
std::string quotients_csv(const std::vector<QuotientPair>& rows);
std::string quotients_json(const std::vector<QuotientPair>& rows);

}  // namespace negacantor
