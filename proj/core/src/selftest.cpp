#include "negacantor/selftest.hpp"

#include "negacantor/analysis.hpp"
#include "negacantor/codec.hpp"
#include "negacantor/evaluator.hpp"
#include "negacantor/probability.hpp"
#include "negacantor/rng.hpp"
#include "negacantor/selfaffine.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

namespace negacantor {

namespace {

constexpr std::uint64_t kSeed = 0x5eed00a2026ULL;

MatrixP constant_matrix(std::vector<Rat> column) {
  MatrixP m;
  m.period.push_back(ColumnSpec{std::move(column)});
  return m;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << s << " s";
  return out.str();
}

}  // namespace

Params reference_uniform2() {
  BaseSequence base{{}, {2}};
  return Params::make(base, constant_matrix({Rat(1, 2), Rat(1, 2)}));
}

Params reference_salem() {
  BaseSequence base{{}, {2}};
  return Params::make(base, constant_matrix({Rat(7, 10), Rat(3, 10)}));
}

Params reference_mixed3() {
  BaseSequence base{{}, {3}};
  return Params::make(base, constant_matrix({Rat(3, 5), Rat(-1, 5), Rat(3, 5)}));
}

Params reference_alt23() {
  BaseSequence base{{}, {2, 3}};
  MatrixP m;
  m.period.push_back(ColumnSpec{{Rat(3, 5), Rat(2, 5)}});
  m.period.push_back(ColumnSpec{{Rat(1, 2), Rat(1, 4), Rat(1, 4)}});
  return Params::make(base, m);
}

namespace {

CheckResult check_roundtrip() {
  CheckResult r{1, "codec round-trip (10^4 rationals, d=2 and d=3 schedules)", false, ""};
  const auto t0 = std::chrono::steady_clock::now();
  const Params sets[] = {reference_uniform2(), reference_mixed3()};
  long total = 0, good = 0;
  for (int s = 0; s < 2; ++s) {
    const Params& ps = sets[s];
    const std::uint64_t D = ps.radix_product(20).convert_to<std::uint64_t>();
    for (long t = 0; t < 10000; ++t) {
      const Rat x(Int(uniform_below(D + 1, rng_stream(kSeed, 1, s, t))), Int(D));
      const NegaDigits enc = encode(ps, x, 64);
      const Interval dec = decode(ps, enc);
      ++total;
      if (enc.canonical() && dec.lo == x && dec.hi == x) ++good;
    }
  }
  const double dt = seconds_since(t0);
  r.passed = good == total && dt < 10.0;
  r.detail = std::to_string(good) + "/" + std::to_string(total) + " exact, " + fmt_seconds(dt) +
             " (limit 10 s)";
  return r;
}

NegaDigits random_nega_rational(const Params& ps, long len, std::uint64_t stream) {
  PositiveDigits pos;
  for (long j = 1; j < len; ++j)
    pos.digits.push_back(static_cast<int>(uniform_below(ps.d(j), rng_absorb(stream, j))));
  pos.digits.push_back(1 + static_cast<int>(uniform_below(ps.d(len) - 1, rng_absorb(stream, len))));
  pos.tail = PosTail::AllZero;
  return from_positive(ps, pos);
}

CheckResult check_welldefined() {
  CheckResult r{2, "well-definedness residual at dual representations", false, ""};
  const Params sets[] = {reference_uniform2(), reference_salem(), reference_mixed3()};
  long total = 0, zero = 0;
  for (int s = 0; s < 3; ++s) {
    for (long t = 0; t < 1000; ++t) {
      const long len = 1 + t % 24;  // switch position sweeps both parities
      const NegaDigits x = random_nega_rational(sets[s], len, rng_stream(kSeed, 2, s, t));
      ++total;
      if (welldefined_residual(sets[s], x) == 0) ++zero;
    }
  }
  r.passed = zero == total;
  r.detail = std::to_string(zero) + "/" + std::to_string(total) + " residuals exactly 0";
  return r;
}

CheckResult check_identity() {
  CheckResult r{3, "identity case: uniform matrix evaluates to x", false, ""};
  const Params ps = reference_uniform2();
  long good = 0;
  for (long t = 0; t < 1000; ++t) {
    const long k = 1 + t % 20;
    const std::uint64_t D = 1ULL << k;
    const Rat x(Int(uniform_below(D + 1, rng_stream(kSeed, 3, t))), Int(D));
    const EvalResult v = eval_digits(ps, encode(ps, x, 64));
    if (v.exact() && v.value == x) ++good;
  }
  r.passed = good == 1000;
  r.detail = std::to_string(good) + "/1000 exact identities";
  return r;
}

CheckResult check_endpoints() {
  CheckResult r{4, "endpoint values F~(0)=0, F~(1)=1 on the whole corpus", false, ""};
  const Params sets[] = {reference_uniform2(), reference_salem(), reference_mixed3(),
                         reference_alt23()};
  bool ok = true;
  for (const Params& ps : sets) {
    const EvalResult f0 = eval_digits(ps, encode(ps, Rat(0), 4));
    const EvalResult f1 = eval_digits(ps, encode(ps, Rat(1), 4));
    ok = ok && f0.exact() && f0.value == 0 && f1.exact() && f1.value == 1;
  }
  r.passed = ok;
  r.detail = ok ? "all four matrices exact" : "endpoint mismatch";
  return r;
}

CheckResult check_integral() {
  CheckResult r{5, "integral: closed form vs quadrature enclosure", false, ""};
  const auto t0 = std::chrono::steady_clock::now();
  const Rat tol(1, 1000000);
  std::ostringstream detail;
  bool ok = true;

  struct Case {
    const char* name;
    Params ps;
    int depth;
    const Rat* expected;
  };
  const Rat half(1, 2), seven(7, 10);
  Case cases[] = {{"uniform", reference_uniform2(), 14, &half},
                  {"salem", reference_salem(), 14, &seven},
                  {"mixed", reference_mixed3(), 9, nullptr}};
  for (auto& c : cases) {
    const EvalResult closed = integral_closed_form(c.ps, Rat(1, Int(1000000000000)));
    const Interval quad = integral_quadrature(c.ps, c.depth);
    const bool inside = quad.contains(closed.value);
    bool near = true;
    if (c.expected) {
      const EvalResult at_tol = integral_closed_form(c.ps, tol);
      near = abs_rat(at_tol.value - *c.expected) <= tol;
    }
    ok = ok && inside && near;
    detail << c.name << (inside && near ? " ok " : " FAIL ");
  }
  const double dt = seconds_since(t0);
  ok = ok && dt < 30.0;
  r.passed = ok;
  r.detail = detail.str() + fmt_seconds(dt) + " (limit 30 s)";
  return r;
}

CheckResult check_cylinders() {
  CheckResult r{6, "cylinder measure equals column product, all prefixes to depth 6", false, ""};
  const Params sets[] = {reference_uniform2(), reference_salem(), reference_mixed3()};
  long total = 0, good = 0;
  for (const Params& ps : sets) {
    std::vector<int> prefix;
    auto walk = [&](auto&& self, long n, const Rat& prod) -> void {
      if (n > 6) return;
      for (int c = 0; c < ps.d(n); ++c) {
        prefix.push_back(c);
        const Rat sub = prod * ps.tilde_p(c, n);
        ++total;
        if (cylinder_increment(ps, CylinderId{prefix}) == sub) ++good;
        self(self, n + 1, sub);
        prefix.pop_back();
      }
    };
    walk(walk, 1, Rat(1));
  }
  r.passed = good == total;
  r.detail = std::to_string(good) + "/" + std::to_string(total) + " prefixes exact";
  return r;
}

CheckResult check_derivative() {
  CheckResult r{7, "derivative classification and singularity partial products", false, ""};
  const Params uni = reference_uniform2();
  bool uniform_ok = true;
  for (long t = 0; t < 20; ++t) {
    NegaDigits germ;
    for (long j = 1; j <= 30; ++j)
      germ.digits.push_back(static_cast<int>(uniform_below(2, rng_stream(kSeed, 7, t, j))));
    uniform_ok = uniform_ok && derivative_limit(uni, germ).tag == DerivativeTag::One;
  }
  uniform_ok =
      uniform_ok && derivative_limit(uni, encode(uni, Rat(1, 3), 64)).tag == DerivativeTag::One;

  const Params salem = reference_salem();
  const Rat threshold(1, 1000);
  long small = 0;
  const long trials = 1000;
  for (long t = 0; t < trials; ++t) {
    NegaDigits germ;
    for (long j = 1; j <= 50; ++j)
      germ.digits.push_back(static_cast<int>(uniform_below(2, rng_stream(kSeed, 8, t, j))));
    if (abs_rat(derivative_partial_product(salem, germ, 50)) < threshold) ++small;
  }
  const bool salem_ok = small >= 950;
  r.passed = uniform_ok && salem_ok;
  r.detail = std::string("uniform class One: ") + (uniform_ok ? "yes" : "NO") +
             "; salem depth-50 products < 1e-3: " + std::to_string(small) + "/" +
             std::to_string(trials) + " (need >= 950)";
  return r;
}

CheckResult check_nowhere_diff() {
  CheckResult r{8, "nowhere-differentiability quotients on the mixed matrix", false, ""};
  const Params ps = reference_mixed3();
  const NowhereDiffReport cond = nowhere_diff_condition(ps);
  bool ok = cond.qualifies && cond.divergence_case == 1;
  const Rat bound(1000);
  long points = 0;
  std::string error;
  for (long t = 0; t < 10 && ok; ++t) {
    const long n = 2 + t % 4;
    PositiveDigits pos;
    for (long j = 1; j < n; ++j) pos.digits.push_back(j % 2 == 1 ? 0 : 2);
    pos.digits.push_back(1 + static_cast<int>(t % 2));
    pos.tail = PosTail::AllZero;
    const NegaDigits x0 = from_positive(ps, pos);
    try {
      const auto rows = quotient_sequences(ps, x0, 12);  // cross-checks internally
      const QuotientPair& last = rows.back();
      const bool diverged = abs_rat(last.b_prime) > bound && abs_rat(last.b_doubleprime) > bound;
      const bool opposite = last.b_prime * last.b_doubleprime < 0;
      if (diverged && opposite) ++points;
      else { ok = false; error = "divergence/sign failure at point " + std::to_string(t); }
    } catch (const std::logic_error& e) {
      ok = false;
      error = e.what();
    }
  }
  r.passed = ok && points == 10;
  r.detail = ok ? "qualifies (case 1); " + std::to_string(points) +
                      "/10 points: closed = direct, |B_12| > 10^3, opposite signs"
                : error;
  return r;
}

CheckResult check_distribution() {
  CheckResult r{9, "distribution function of the digit-sampled point vs F~", false, ""};
  const Params ps = reference_salem();
  const CdfReport a = cdf_distance(ps, 100000, 512, kSeed, 30);
  const CdfReport b = cdf_distance(ps, 100000, 512, kSeed, 30);
  const bool close = a.distance <= Rat(1, 100);
  const bool deterministic = a.distance == b.distance;
  r.passed = close && deterministic;
  r.detail = "sup distance " + decimal_string(a.distance, 4) + " (bound 0.01, KS reference " +
             decimal_string(Rat(43, 10000), 2) + "); deterministic: " +
             (deterministic ? "yes" : "NO");
  return r;
}

CheckResult check_selfaffine() {
  CheckResult r{10, "self-affine graph points equal direct evaluation", false, ""};
  struct Case {
    Params ps;
    int max_depth;
  };
  Case cases[] = {{reference_uniform2(), 12}, {reference_salem(), 12}, {reference_mixed3(), 7}};
  long total = 0, good = 0;
  for (const auto& c : cases) {
    for (int depth = 1; depth <= c.max_depth; ++depth) {
      const auto pts = graph_points(c.ps, depth);
      const Int D = c.ps.radix_product(depth);
      total += D.convert_to<long>();
      if (Int(pts.size()) != D) continue;  // the whole level counts as failed
      for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].x != Rat(Int(i), D)) continue;
        const EvalResult y = eval_digits(c.ps, encode(c.ps, pts[i].x, depth + 2));
        if (y.exact() && y.value == pts[i].y) ++good;
      }
    }
  }
  r.passed = total > 0 && good == total;
  r.detail = std::to_string(good) + "/" + std::to_string(total) +
             " points match (left endpoint, F~) exactly";
  return r;
}

CheckResult check_functional_equations() {
  CheckResult r{11, "functional-equation residuals on 200 random triples per matrix", false, ""};
  const Params sets[] = {reference_uniform2(), reference_salem(), reference_mixed3()};
  long total = 0, zero = 0;
  for (int s = 0; s < 3; ++s) {
    const Params& ps = sets[s];
    for (long t = 0; t < 200; ++t) {
      const std::uint64_t stream = rng_stream(kSeed, 11, s, t);
      const long k = 1 + static_cast<long>(uniform_below(5, rng_absorb(stream, 1)));
      const int digit = static_cast<int>(uniform_below(ps.d(k), rng_absorb(stream, 2)));
      PositiveDigits y;
      const long len = static_cast<long>(uniform_below(11, rng_absorb(stream, 3)));
      for (long j = 1; j <= len; ++j)
        y.digits.push_back(static_cast<int>(uniform_below(ps.d(j), rng_absorb(stream, 3 + j))));
      y.tail = uniform_below(2, rng_absorb(stream, 99)) ? PosTail::AllZero : PosTail::AllMax;
      ++total;
      if (functional_eq_residual(ps, digit, k, y) == 0) ++zero;
    }
  }
  r.passed = zero == total;
  r.detail = std::to_string(zero) + "/" + std::to_string(total) + " residuals exactly 0";
  return r;
}

CheckResult check_monotonicity() {
  CheckResult r{12, "monotonicity: salem strictly increasing, mixed has inversions", false, ""};
  const MonotonicityReport salem = monotonicity_probe(reference_salem(), 10000, kSeed);
  const MonotonicityReport mixed = monotonicity_probe(reference_mixed3(), 100, kSeed);
  const bool salem_ok = salem.strict && salem.violations == 0 && salem.pairs_checked == 10000;
  const bool mixed_ok = mixed.inversion_found && mixed.inversion_prefix_low.size() == 1 &&
                        mixed.increment_low * mixed.increment_high < 0;
  r.passed = salem_ok && mixed_ok;
  r.detail = "salem: " + std::to_string(salem.violations) + " violations in " +
             std::to_string(salem.pairs_checked) + " strict pairs; mixed: depth-1 sibling " +
             "increments " + fraction_string(mixed.increment_low) + " / " +
             fraction_string(mixed.increment_high);
  return r;
}

}  // namespace

std::vector<CheckResult> run_selftest() {
  std::vector<CheckResult> out;
  out.push_back(check_roundtrip());
  out.push_back(check_welldefined());
  out.push_back(check_identity());
  out.push_back(check_endpoints());
  out.push_back(check_integral());
  out.push_back(check_cylinders());
  out.push_back(check_derivative());
  out.push_back(check_nowhere_diff());
  out.push_back(check_distribution());
  out.push_back(check_selfaffine());
  out.push_back(check_functional_equations());
  out.push_back(check_monotonicity());
  return out;
}

int print_selftest(std::ostream& out) {
  int failures = 0;
  for (const CheckResult& c : run_selftest()) {
    out << (c.passed ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << ": " << c.detail
        << "\n";
    if (!c.passed) ++failures;
  }
  return failures;
}

}  // namespace negacantor
