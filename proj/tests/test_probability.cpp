#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "negacantor/analysis.hpp"
#include "negacantor/probability.hpp"
#include "negacantor/selftest.hpp"
#include "support.hpp"

#include <cmath>

using namespace negacantor;

TEST_CASE("sampler basics") {
  SUBCASE("uniform samples live on the depth grid") {
    const Params ps = reference_uniform2();
    const EtaSampler s(ps, 30, 42);
    for (const Rat& x : s.sample(200)) {
      CHECK(x >= 0);
      CHECK(x < 1);
      CHECK((Int(1) << 30) % denominator(x) == 0);
    }
  }
  SUBCASE("fixed seed reproduces the list; other seeds differ") {
    const Params ps = reference_salem();
    const EtaSampler a(ps, 25, 9001), b(ps, 25, 9001), c(ps, 25, 9002);
    const auto va = a.sample(64), vb = b.sample(64), vc = c.sample(64);
    CHECK(va == vb);
    CHECK(va != vc);
    CHECK(a.sample_at(17) == va[17]);
  }
  SUBCASE("mixed-sign matrices are rejected") {
    CHECK_THROWS_AS(EtaSampler(reference_mixed3(), 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(EtaSampler(reference_salem(), 0, 1), std::invalid_argument);
  }
  SUBCASE("digit frequencies track the column weights") {
    const Params ps = reference_salem();
    const EtaSampler s(ps, 1, 7);
    long zeros = 0;
    const long n = 20000;
    for (long i = 0; i < n; ++i)
      if (s.sample_at(i) == 0) ++zeros;
    CHECK(static_cast<double>(zeros) / n == doctest::Approx(0.7).epsilon(0.02));
  }
}

TEST_CASE("salem sample mean matches 1 - integral") {
  const Params ps = reference_salem();
  const long n = 100000;
  const EtaSampler s(ps, 30, 31337);
  Rat sum = 0;
  double sq = 0;
  for (long i = 0; i < n; ++i) {
    const Rat x = s.sample_at(i);
    sum += x;
    const double xd = to_double(x);
    sq += xd * xd;
  }
  const Rat mean = sum / n;
  const double md = to_double(mean);
  const double sd = std::sqrt(sq / n - md * md);
  // E[eta] = 1 - integral of the distribution function = 3/10
  CHECK(std::abs(md - 0.3) <= 3 * sd / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("empirical distribution function against the evaluator") {
  SUBCASE("uniform") {
    const CdfReport rep = cdf_distance(reference_uniform2(), 100000, 256, 777);
    CHECK(rep.distance <= Rat(1, 100));
  }
  SUBCASE("salem at full scale") {
    const CdfReport rep = cdf_distance(reference_salem(), 100000, 512, 777, 30);
    CHECK(rep.distance <= Rat(1, 100));
    CHECK(rep.ks_reference == doctest::Approx(0.0043).epsilon(0.01));
    CHECK(rep.rows.size() == 511);
  }
  SUBCASE("empirical column is non-decreasing and model column exact on the grid") {
    const CdfReport rep = cdf_distance(reference_salem(), 2000, 64, 5);
    for (std::size_t i = 0; i + 1 < rep.rows.size(); ++i)
      CHECK(rep.rows[i].empirical <= rep.rows[i + 1].empirical);
    // dyadic grid points encode canonically, so the model column is exact
    const Rat direct = eval_digits(reference_salem(),
                                   encode(reference_salem(), rep.rows[31].x, 40))
                           .value;
    CHECK(rep.rows[31].model == direct);
  }
  SUBCASE("truncation depth keeps bias below the grid resolution") {
    const CdfReport rep = cdf_distance(reference_uniform2(), 100, 512, 1);
    CHECK(reference_uniform2().radix_product(rep.depth) > 10 * 512);
  }
  SUBCASE("empty sample is an error") {
    CHECK_THROWS_AS(cdf_distance(reference_salem(), 0, 64, 1), std::invalid_argument);
  }
}

TEST_CASE("csv exports are deterministic and well-formed") {
  const CdfReport rep = cdf_distance(reference_salem(), 500, 16, 99);
  const std::string csv = rep.csv();
  CHECK(csv.find("x,empirical,model\n") == 0);
  CHECK(csv == cdf_distance(reference_salem(), 500, 16, 99).csv());

  const EtaSampler s(reference_salem(), 10, 3);
  const std::string samples = samples_csv(s.sample(5));
  CHECK(samples.find("index,value,value_exact\n") == 0);
  CHECK(std::count(samples.begin(), samples.end(), '\n') == 6);
}
