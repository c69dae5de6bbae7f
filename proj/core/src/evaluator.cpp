#include "negacantor/evaluator.hpp"

#include <stdexcept>

namespace negacantor {

EvalResult eval_positive(const Params& ps, const PositiveDigits& z, long offset) {
  check_digits(ps, z.digits, offset);
  Rat sum = 0;
  Rat prod = 1;
  for (std::size_t m = 0; m < z.digits.size(); ++m) {
    const long n = offset + static_cast<long>(m) + 1;
    sum += ps.beta(z.digits[m], n) * prod;
    prod *= ps.p(z.digits[m], n);
  }
  switch (z.tail) {
    case PosTail::AllZero:
      return {sum, 0};
    case PosTail::AllMax:
      return {sum + prod, 0};
    case PosTail::Truncated:
      return {sum, abs_rat(prod) * ps.tail_sup(offset + static_cast<long>(z.digits.size()))};
  }
  throw std::logic_error("unreachable");
}

EvalResult eval_digits(const Params& ps, const NegaDigits& x) {
  return eval_positive(ps, to_positive(ps, x), 0);
}

EvalResult eval(const Params& ps, const Rat& x, const Rat& tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  if (x < 0 || x > 1) throw std::domain_error("argument " + fraction_string(x) + " outside [0,1]");
  for (long depth = 16;; depth *= 2) {
    const EvalResult r = eval_digits(ps, encode(ps, x, depth));
    if (r.error_bound <= tol) return r;
    if (depth > (1L << 24))
      throw std::runtime_error("tolerance unreachable");  // cannot happen while rho < 1
  }
}

Rat welldefined_residual(const Params& ps, const NegaDigits& r) {
  const NegaDigits sibling = dual_representation(ps, r);
  return eval_digits(ps, r).value - eval_digits(ps, sibling).value;
}

Rat functional_eq_residual(const Params& ps, int digit, long k, const PositiveDigits& y) {
  if (k < 1) throw std::invalid_argument("position must be >= 1");
  if (!y.canonical()) throw std::invalid_argument("functional equation check needs a canonical tail");
  if (digit < 0 || digit >= ps.d(k))
    throw std::out_of_range("digit " + std::to_string(digit) + " outside alphabet at k=" +
                            std::to_string(k));

  const PositiveDigits shifted = shift(y, k);
  const int adjusted = ps.reflect(digit, k);

  PositiveDigits prepended;
  prepended.digits.push_back(adjusted);
  prepended.digits.insert(prepended.digits.end(), shifted.digits.begin(), shifted.digits.end());
  prepended.tail = shifted.tail;

  const Rat lhs = eval_positive(ps, prepended, k - 1).value;
  const auto [tb, tp] = ps.tilde(digit, k);
  const Rat rhs = tb + tp * eval_positive(ps, shifted, k).value;
  return lhs - rhs;
}

}  // namespace negacantor
