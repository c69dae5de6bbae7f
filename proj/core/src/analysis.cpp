#include "negacantor/analysis.hpp"

#include "negacantor/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace negacantor {

using nlohmann::json;

std::string to_string(DerivativeTag tag) {
  switch (tag) {
    case DerivativeTag::Zero: return "Zero";
    case DerivativeTag::One: return "One";
    case DerivativeTag::FinitePositive: return "FinitePositive";
    case DerivativeTag::Infinite: return "Infinite";
    case DerivativeTag::Undetermined: return "Undetermined";
  }
  return "?";
}

EvalResult integral_closed_form(const Params& ps, const Rat& tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  const long A = ps.preperiod_length();
  const long L = ps.period_length();

  // G(o) = sum_{m>=1} colsum(o+m) / (d_{o+1}...d_{o+m}), periodic in o past
  // the preperiod: G(o) = partial + G(o)/Q with Q the per-period radix product.
  std::vector<Rat> G(L);
  for (long r = 0; r < L; ++r) {
    const long o = A + r;
    Rat partial = 0;
    Int den = 1;
    for (long t = 1; t <= L; ++t) {
      den *= ps.d(o + t);
      partial += ps.column_beta_sum(o + t) / Rat(den);
    }
    G[r] = partial * Rat(den, den - 1);
  }

  Rat value = 0;
  Int radix = 1;
  for (long n = 1; n <= A; ++n) {
    radix *= ps.d(n);
    value += ps.column_beta_sum(n) / Rat(radix);
  }
  long N = A;
  Rat tail = G[0] / Rat(radix);
  while (tail > tol) {
    for (long t = 1; t <= L; ++t) {
      radix *= ps.d(N + t);
      value += ps.column_beta_sum(N + t) / Rat(radix);
    }
    N += L;
    tail = G[(N - A) % L] / Rat(radix);
  }
  return {value, tail};
}

Interval integral_quadrature(const Params& ps, int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  if (ps.radix_product(depth) > 1000000)
    throw std::domain_error("cylinder count at depth " + std::to_string(depth) +
                            " exceeds the 10^6 guard");

  const bool nonneg = ps.nonnegative();
  const Rat sup = ps.tail_sup(depth);
  Rat lo_sum = 0, hi_sum = 0;

  // Depth-first over alternating prefixes; S carries F~ of the running left
  // endpoint, prod the running column product.
  auto sweep = [&](auto&& self, long n, const Rat& S, const Rat& prod) -> void {
    if (n > depth) {
      if (nonneg) {
        lo_sum += S;
        hi_sum += S + prod;
      } else {
        const Rat e = abs_rat(prod) * sup;
        lo_sum += S - e;
        hi_sum += S + e;
      }
      return;
    }
    for (int c = 0; c < ps.d(n); ++c) {
      const int delta = ps.reflect(c, n);
      self(self, n + 1, S + ps.beta(delta, n) * prod, prod * ps.p(delta, n));
    }
  };
  sweep(sweep, 1, Rat(0), Rat(1));

  const Rat w = ps.cylinder_width(depth);
  return {lo_sum * w, hi_sum * w};
}

Rat cylinder_increment(const Params& ps, const CylinderId& c) {
  const Rat right = eval_digits(ps, NegaDigits{c.digits, NegaTail::HighLow}).value;
  const Rat left = eval_digits(ps, NegaDigits{c.digits, NegaTail::LowHigh}).value;
  return right - left;
}

namespace {

int digit_at(const Params& ps, const NegaDigits& x, long j) {
  if (j <= static_cast<long>(x.digits.size())) return x.digits[j - 1];
  return tail_digit(ps, x.tail, j);
}

}  // namespace

Rat derivative_partial_product(const Params& ps, const NegaDigits& x, long n) {
  check_digits(ps, x.digits);
  if (!x.canonical() && n > static_cast<long>(x.digits.size()))
    throw std::out_of_range("truncated digits end before position " + std::to_string(n));
  Rat prod = 1;
  for (long j = 1; j <= n; ++j) prod *= Rat(ps.d(j)) * ps.tilde_p(digit_at(ps, x, j), j);
  return prod;
}

DerivativeClass derivative_limit(const Params& ps, const NegaDigits& x, long depth) {
  check_digits(ps, x.digits);
  const long N = static_cast<long>(x.digits.size());
  auto factor = [&](long j) { return Rat(ps.d(j)) * ps.tilde_p(digit_at(ps, x, j), j); };

  if (!x.canonical()) {
    const long J = depth > 0 ? std::min(depth, N) : N;
    if (J == 0) throw std::invalid_argument("no digits to classify");
    bool all_one = true;
    Rat prod_abs = 1;
    double log_sum = 0;
    for (long j = 1; j <= J; ++j) {
      const Rat f = factor(j);
      if (f == 0) return {DerivativeTag::Zero, -HUGE_VAL};
      if (f != 1) all_one = false;
      prod_abs *= abs_rat(f);
      log_sum += std::log(std::abs(to_double(f)));
    }
    if (all_one) return {DerivativeTag::One, 0.0};
    const double rate = log_sum / static_cast<double>(J);
    if (prod_abs < 1) return {DerivativeTag::Zero, rate};
    if (prod_abs > 1) return {DerivativeTag::Infinite, rate};
    return {DerivativeTag::Undetermined, rate};
  }

  const long head = std::max({N, ps.preperiod_length(), depth});
  const long cycle = std::lcm(2L, ps.period_length());
  bool all_one = true;
  for (long j = 1; j <= head; ++j) {
    const Rat f = factor(j);
    if (f == 0) return {DerivativeTag::Zero, -HUGE_VAL};
    if (f != 1) all_one = false;
  }
  bool cycle_one = true;
  Rat Q = 1;
  double log_sum = 0;
  for (long j = head + 1; j <= head + cycle; ++j) {
    const Rat f = factor(j);
    if (f == 0) return {DerivativeTag::Zero, -HUGE_VAL};
    if (f != 1) cycle_one = false;
    Q *= f;
    log_sum += std::log(std::abs(to_double(f)));
  }
  if (all_one && cycle_one) return {DerivativeTag::One, 0.0};
  if (cycle_one) return {DerivativeTag::FinitePositive, 0.0};
  const double rate = log_sum / static_cast<double>(cycle);
  const Rat qa = abs_rat(Q);
  if (qa < 1) return {DerivativeTag::Zero, rate};
  if (qa > 1) return {DerivativeTag::Infinite, rate};
  return {DerivativeTag::Undetermined, rate};
}

NowhereDiffReport nowhere_diff_condition(const Params& ps) {
  NowhereDiffReport rep;
  const long A = ps.preperiod_length();
  const long L = ps.period_length();

  rep.alternating_ok = true;
  for (long n = 1; n <= A + L; ++n) {
    const auto& col = ps.column(n);
    for (std::size_t e = 1; e < col.size(); ++e) {
      if (col[e] * col[e - 1] >= 0) {
        rep.alternating_ok = false;
        rep.reasons.push_back("p_{" + std::to_string(e) + "," + std::to_string(n) + "} p_{" +
                              std::to_string(e - 1) + "," + std::to_string(n) +
                              "} = " + fraction_string(col[e] * col[e - 1]) + " not < 0");
      }
    }
  }

  rep.period_prod_low = 1;
  rep.period_prod_high = 1;
  for (long t = 1; t <= L; ++t) {
    const long n = A + t;
    rep.period_prod_low *= Rat(ps.d(n)) * ps.p(0, n);
    rep.period_prod_high *= Rat(ps.d(n)) * ps.p(ps.d(n) - 1, n);
  }
  const Rat alow = abs_rat(rep.period_prod_low);
  const Rat ahigh = abs_rat(rep.period_prod_high);
  rep.growth_ok = !(alow < 1 && ahigh < 1);
  if (!rep.growth_ok)
    rep.reasons.push_back("both per-period products decay: |" +
                          fraction_string(rep.period_prod_low) + "|, |" +
                          fraction_string(rep.period_prod_high) + "| < 1");

  rep.qualifies = rep.alternating_ok && rep.growth_ok;
  if (rep.growth_ok) {
    auto side = [](const Rat& a) { return a > 1 ? 2 : a == 1 ? 1 : 0; };
    const int s = side(alow), t = side(ahigh);
    if (s == 2 && t == 2) rep.divergence_case = 1;
    else if ((s == 2 && t == 0) || (s == 0 && t == 2)) rep.divergence_case = 2;
    else if ((s == 2 && t == 1) || (s == 1 && t == 2)) rep.divergence_case = 3;
    else if ((s == 0 && t == 1) || (s == 1 && t == 0)) rep.divergence_case = 4;
    else rep.divergence_case = 5;
  }
  return rep;
}

std::string NowhereDiffReport::to_json_string() const {
  json j;
  j["qualifies"] = qualifies;
  j["alternating_ok"] = alternating_ok;
  j["growth_ok"] = growth_ok;
  j["period_prod_low"] = fraction_string(period_prod_low);
  j["period_prod_high"] = fraction_string(period_prod_high);
  j["divergence_case"] = divergence_case;
  j["reasons"] = reasons;
  return j.dump(2);
}

std::vector<QuotientPair> quotient_sequences(const Params& ps, const NegaDigits& x0, int k_max) {
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  if (!x0.canonical()) throw std::invalid_argument("x0 is not nega-rational (truncated tail)");

  // Minimal all-zero-image form: positive digits delta_1..delta_n, last >= 1.
  PositiveDigits pos = normalize_positive(ps, to_positive(ps, x0));
  if (pos.tail == PosTail::AllMax) {
    if (pos.digits.empty()) throw std::domain_error("x0 = 1 is not nega-rational");
    pos.digits.back() += 1;
    pos.tail = PosTail::AllZero;
  } else if (pos.digits.empty()) {
    throw std::domain_error("x0 = 0 is not nega-rational");
  }
  const long n = static_cast<long>(pos.digits.size());
  const int dn = ps.d(n);

  // Alternating digits of the two representations around the switch digit.
  const NegaDigits rep1 = from_positive(ps, pos);  // ...eps_n  + low tail image
  PositiveDigits pos2 = pos;
  pos2.digits.back() -= 1;
  pos2.tail = PosTail::AllMax;
  const NegaDigits rep2 = from_positive(ps, pos2);  // ...eps_n-1 + high tail image
  const int eps_n = n % 2 == 1 ? rep1.digits.back() : rep1.digits.back() + 1;

  Rat mid = 1;
  for (long j = 1; j < n; ++j) mid *= Rat(ps.d(j)) * ps.tilde_p(rep1.digits[j - 1], j);

  const Rat lead_prime = n % 2 == 1 ? Rat(dn) * ps.p(eps_n, n) : Rat(dn) * ps.p(dn - eps_n, n);
  const Rat lead_dprime =
      n % 2 == 1 ? Rat(dn) * ps.p(eps_n - 1, n) : Rat(dn) * ps.p(dn - 1 - eps_n, n);

  const Rat f0 = eval_digits(ps, rep1).value;
  const Rat x0_value = decode(ps, rep1).lo;

  std::vector<QuotientPair> out;
  Rat growth_low = 1, growth_high = 1;
  Int radix = ps.radix_product(n);
  for (long k = 1; k <= k_max; ++k) {
    const long m = n + k;
    growth_low *= Rat(ps.d(m)) * ps.p(0, m);
    growth_high *= Rat(ps.d(m)) * ps.p(ps.d(m) - 1, m);
    radix *= ps.d(m);

    QuotientPair q;
    q.k = k;
    q.b_prime = lead_prime * mid * growth_low;
    q.b_doubleprime = lead_dprime * mid * growth_high;

    // Digit strings of x'_k and x''_k from the proof construction: continue
    // the canonical pattern of the matching representation and plant the
    // single off-pattern digit.
    NegaDigits xp{rep1.digits, NegaTail::LowHigh};
    for (long t = n + 1; t < m; ++t) xp.digits.push_back(tail_digit(ps, NegaTail::LowHigh, t));
    xp.digits.push_back(m % 2 == 1 ? 1 : ps.d(m) - 2);

    NegaDigits xpp{rep2.digits, NegaTail::LowHigh};
    for (long t = n + 1; t <= m; ++t) xpp.digits.push_back(tail_digit(ps, NegaTail::HighLow, t));
    xpp.digits.push_back(tail_digit(ps, NegaTail::LowHigh, m + 1));

    const Rat h = Rat(1, radix);
    if (decode(ps, xp).lo - x0_value != h)
      throw std::logic_error("x'_k digit construction misses x0 + 1/(d_1...d_{n+k}) at k=" +
                             std::to_string(k));
    if (x0_value - decode(ps, xpp).lo != h)
      throw std::logic_error("x''_k digit construction misses x0 - 1/(d_1...d_{n+k}) at k=" +
                             std::to_string(k));

    const Rat direct_prime = (eval_digits(ps, xp).value - f0) / h;
    const Rat direct_dprime = (f0 - eval_digits(ps, xpp).value) / h;
    if (direct_prime != q.b_prime)
      throw std::logic_error("B'_" + std::to_string(k) + " closed form " +
                             fraction_string(q.b_prime) + " != direct quotient " +
                             fraction_string(direct_prime));
    if (direct_dprime != q.b_doubleprime)
      throw std::logic_error("B''_" + std::to_string(k) + " closed form " +
                             fraction_string(q.b_doubleprime) + " != direct quotient " +
                             fraction_string(direct_dprime));
    out.push_back(std::move(q));
  }
  return out;
}

MonotonicityReport monotonicity_probe(const Params& ps, long n_pairs, std::uint64_t seed) {
  if (n_pairs < 1) throw std::invalid_argument("need at least one pair");
  MonotonicityReport rep;
  rep.sign_class = ps.sign_class();
  rep.strict = rep.sign_class == SignClass::AllPositive;

  // Sample grid: the finest depth whose cylinder count still fits 2^40.
  long K = 1;
  while (K < 40 && ps.radix_product(K + 1) <= (Int(1) << 40)) ++K;
  const std::uint64_t D = ps.radix_product(K).convert_to<std::uint64_t>();

  for (long t = 0; t < n_pairs; ++t) {
    std::uint64_t m1 = uniform_below(D + 1, rng_stream(seed, 2 * t));
    std::uint64_t m2 = uniform_below(D + 1, rng_stream(seed, 2 * t + 1));
    if (m1 == m2) m2 = m1 == D ? m1 - 1 : m1 + 1;
    if (m1 > m2) std::swap(m1, m2);
    const Rat f1 = eval_digits(ps, encode(ps, Rat(m1, D), K + 2)).value;
    const Rat f2 = eval_digits(ps, encode(ps, Rat(m2, D), K + 2)).value;
    if (rep.strict ? f2 <= f1 : f2 < f1) ++rep.violations;
  }
  rep.pairs_checked = n_pairs;

  if (rep.sign_class == SignClass::MixedSigns) {
    // Walk to the first column with a negative entry, keeping the running
    // product nonzero, then compare the two sibling increments there.
    const long A = ps.preperiod_length(), L = ps.period_length();
    long star = 0;
    for (long m = 1; m <= A + L && star == 0; ++m)
      for (const Rat& v : ps.column(m))
        if (v < 0) { star = m; break; }
    std::vector<int> prefix;
    for (long j = 1; j < star; ++j) {
      int best = 0;
      for (int c = 1; c < ps.d(j); ++c)
        if (abs_rat(ps.tilde_p(c, j)) > abs_rat(ps.tilde_p(best, j))) best = c;
      prefix.push_back(best);
    }
    int pos_digit = -1, neg_digit = -1;
    for (int c = 0; c < ps.d(star); ++c) {
      if (ps.tilde_p(c, star) > 0 && pos_digit < 0) pos_digit = c;
      if (ps.tilde_p(c, star) < 0 && neg_digit < 0) neg_digit = c;
    }
    std::vector<int> low = prefix, high = prefix;
    low.push_back(pos_digit);
    high.push_back(neg_digit);
    rep.increment_low = cylinder_increment(ps, CylinderId{low});
    rep.increment_high = cylinder_increment(ps, CylinderId{high});
    rep.inversion_found = rep.increment_low * rep.increment_high < 0;
    rep.inversion_prefix_low = std::move(low);
    rep.inversion_prefix_high = std::move(high);
  }
  return rep;
}

std::string MonotonicityReport::to_json_string() const {
  json j;
  j["sign_class"] = to_string(sign_class);
  j["strict"] = strict;
  j["pairs_checked"] = pairs_checked;
  j["violations"] = violations;
  j["inversion_found"] = inversion_found;
  if (inversion_found) {
    j["inversion"]["prefix_a"] = inversion_prefix_low;
    j["inversion"]["increment_a"] = fraction_string(increment_low);
    j["inversion"]["prefix_b"] = inversion_prefix_high;
    j["inversion"]["increment_b"] = fraction_string(increment_high);
  }
  return j.dump(2);
}

std::string quotients_csv(const std::vector<QuotientPair>& rows) {
  std::ostringstream out;
  out << "k,b_prime,b_prime_exact,b_doubleprime,b_doubleprime_exact\n";
  for (const auto& q : rows) {
    out << q.k << "," << decimal_string(q.b_prime, 30) << "," << fraction_string(q.b_prime)
        << "," << decimal_string(q.b_doubleprime, 30) << "," << fraction_string(q.b_doubleprime)
        << "\n";
  }
  return out.str();
}

std::string quotients_json(const std::vector<QuotientPair>& rows) {
  json arr = json::array();
  for (const auto& q : rows) {
    json e;
    e["k"] = q.k;
    e["b_prime"] = fraction_string(q.b_prime);
    e["b_doubleprime"] = fraction_string(q.b_doubleprime);
    arr.push_back(e);
  }
  return arr.dump(2);
}

}  // namespace negacantor
