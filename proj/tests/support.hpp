#pragma once

// Shared test fixtures: an independent alternating-series value oracle and a
// generator of random admissible matrices.

#include "negacantor/codec.hpp"
#include "negacantor/params.hpp"
#include "negacantor/rng.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace negacantor::testing {

// Value of an alternating digit string summed directly as
//   sum_n (1+eps_n) (-1)^(n+1) / (d_1...d_n),
// with the canonical tail closed by solving the periodic remainder
// recurrence H(o) = ((1+eps_{o+1}) - H(o+1)) / d_{o+1}. Deliberately avoids
// the positive-image path used by decode().
inline Rat nega_series_value(const Params& ps, const NegaDigits& x) {
  if (!x.canonical()) throw std::invalid_argument("oracle needs a canonical tail");
  check_digits(ps, x.digits);
  const long N = static_cast<long>(x.digits.size());
  const long M = std::max(N, ps.preperiod_length());
  const long C = std::lcm(2L, ps.period_length());

  auto digit = [&](long t) {
    return t <= N ? x.digits[t - 1] : tail_digit(ps, x.tail, t);
  };

  // H(M) = A + B*H(M+C) with the tail periodic past M, so H(M) = A/(1-B).
  Rat A = 0, B = 1;
  for (long k = 0; k < C; ++k) {
    const long t = M + k + 1;
    A += B * Rat(1 + digit(t), ps.d(t));
    B = -B / ps.d(t);
  }
  Rat H = A / (1 - B);
  for (long o = M - 1; o >= N; --o) {
    const long t = o + 1;
    H = (Rat(1 + digit(t)) - H) / ps.d(t);
  }

  Rat value = 0;
  Int radix = 1;
  for (long n = 1; n <= N; ++n) {
    radix *= ps.d(n);
    const Rat term(Int(1 + x.digits[n - 1]), radix);
    value += n % 2 == 1 ? term : -term;
  }
  const Rat tail = H / Rat(radix);
  return value + (N % 2 == 0 ? tail : -tail);
}

// Any beta vector inside (0,1)^(d-1) yields an admissible column; mixed
// signs appear whenever the betas are not increasing.
inline Params random_params(std::uint64_t seed) {
  BaseSequence base;
  const long pre = uniform_below(3, rng_stream(seed, 1));
  const long per = 1 + uniform_below(3, rng_stream(seed, 2));
  for (long i = 0; i < pre; ++i)
    base.preperiod.push_back(2 + static_cast<int>(uniform_below(3, rng_stream(seed, 3, i))));
  for (long i = 0; i < per; ++i)
    base.period.push_back(2 + static_cast<int>(uniform_below(3, rng_stream(seed, 4, i))));

  auto column = [&](int d, std::uint64_t stream) {
    std::vector<Rat> beta;
    for (int i = 1; i < d; ++i)
      beta.push_back(Rat(1 + Int(uniform_below(19, rng_absorb(stream, i))), 20));
    ColumnSpec c;
    Rat prev = 0;
    for (int i = 0; i < d - 1; ++i) {
      c.probabilities.push_back(beta[i] - prev);
      prev = beta[i];
    }
    c.probabilities.push_back(1 - prev);
    return c;
  };
  MatrixP m;
  for (long i = 0; i < pre; ++i)
    m.preperiod.push_back(column(base.preperiod[i], rng_stream(seed, 5, i)));
  for (long i = 0; i < per; ++i)
    m.period.push_back(column(base.period[i], rng_stream(seed, 6, i)));
  return Params::make(base, m);
}

inline NegaDigits random_germ(const Params& ps, long len, std::uint64_t stream) {
  NegaDigits g;
  for (long j = 1; j <= len; ++j)
    g.digits.push_back(static_cast<int>(uniform_below(ps.d(j), rng_absorb(stream, j))));
  return g;
}

}  // namespace negacantor::testing
