#pragma once

#include "negacantor/codec.hpp"
#include "negacantor/params.hpp"

namespace negacantor {

// Value with a guaranteed absolute error bound: |true - value| <= error_bound,
// and error_bound is 0 exactly when the evaluated tail was canonical.
struct EvalResult {
  Rat value;
  Rat error_bound;

  bool exact() const { return error_bound == 0; }
};

// Series evaluation against columns offset+1, offset+2, ...:
//   sum_m beta_{z_m,offset+m} prod_{j<m} p_{z_j,offset+j}.
// The all-max tail closes to exactly prod_j p_{z_j} via the row-sum identity
// beta_{d-1,n} + p_{d-1,n} = 1; the all-zero tail contributes nothing. For a
// truncated tail the bound is |prod| * tail_sup(offset+N).
EvalResult eval_positive(const Params& ps, const PositiveDigits& z, long offset = 0);

// F~ of an alternating digit string (evaluated through its positive image).
EvalResult eval_digits(const Params& ps, const NegaDigits& x);

// F~ at a rational argument: encodes deep enough that the truncation bound
// drops below tol; exact (error 0) whenever the encoding terminates
// canonically. Throws std::domain_error outside [0,1], std::invalid_argument
// for tol <= 0.
EvalResult eval(const Params& ps, const Rat& x, const Rat& tol);

// eval_digits(r) - eval_digits(dual(r)); 0 exactly for every admissible
// matrix. Throws when r has no sibling representation.
Rat welldefined_residual(const Params& ps, const NegaDigits& r);

// Residual of the defining self-similarity relation at position k:
//   f((i~ + shifted)/d_k) = beta~_{i,k} + p~_{i,k} f(shifted)
// with i~ the parity-adjusted digit and both sides evaluated exactly on the
// canonical digits of y. Contract: 0.
Rat functional_eq_residual(const Params& ps, int digit, long k, const PositiveDigits& y);

}  // namespace negacantor
