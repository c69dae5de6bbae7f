#pragma once

#include "negacantor/params.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace negacantor {

// Built-in reference parameter sets used across the verification suite.
Params reference_uniform2();  // d=2, columns (1/2, 1/2): F~(x) = x
Params reference_salem();     // d=2, columns (7/10, 3/10): strictly increasing singular
Params reference_mixed3();    // d=3, columns (3/5, -1/5, 3/5): nowhere monotone
Params reference_alt23();     // d alternating 2,3 with distinct columns

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

// The end-to-end verification suite: codec round-trips, well-definedness,
// the identity case, endpoint values, the integral against its quadrature
// enclosure, cylinder measures, derivative classification, the
// nowhere-differentiability quotients, the sampled distribution function,
// self-affinity, the functional-equation residuals, and monotonicity.
std::vector<CheckResult> run_selftest();

// One PASS/FAIL line per check; returns the number of failures.
int print_selftest(std::ostream& out);

}  // namespace negacantor
