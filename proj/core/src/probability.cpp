#include "negacantor/probability.hpp"

#include "negacantor/evaluator.hpp"
#include "negacantor/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace negacantor {

using nlohmann::json;

EtaSampler::EtaSampler(const Params& ps, long depth, std::uint64_t seed)
    : params_(&ps), depth_(depth), seed_(seed) {
  if (!ps.nonnegative())
    throw std::invalid_argument("mixed-sign matrix is not a probability model");
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");

  auto build = [&](long n) {
    ColumnTable t;
    const auto& col = ps.column(n);
    Int denom = 1;
    for (const Rat& p : col) denom = lcm(denom, denominator(p));
    if (denom <= (Int(1) << 62)) {
      t.exact = true;
      t.denom = denom.convert_to<std::uint64_t>();
      Int run = 0;
      t.thresholds.push_back(0);
      for (const Rat& p : col) {
        run += numerator(p) * (denom / denominator(p));
        t.thresholds.push_back(run.convert_to<std::uint64_t>());
      }
    } else {
      Rat run = 0;
      t.cumulative.push_back(0);
      for (const Rat& p : col) {
        run += p;
        t.cumulative.push_back(run);
      }
    }
    return t;
  };
  const long A = ps.preperiod_length(), L = ps.period_length();
  for (long n = 1; n <= A; ++n) pre_.push_back(build(n));
  for (long n = A + 1; n <= A + L; ++n) per_.push_back(build(n));
}

const EtaSampler::ColumnTable& EtaSampler::table(long position) const {
  const long A = static_cast<long>(pre_.size());
  if (position <= A) return pre_[position - 1];
  return per_[(position - 1 - A) % per_.size()];
}

int EtaSampler::draw_digit(long position, long index) const {
  const ColumnTable& t = table(position);
  const std::uint64_t stream =
      rng_stream(seed_, static_cast<std::uint64_t>(index), static_cast<std::uint64_t>(position));
  if (t.exact) {
    const std::uint64_t v = uniform_below(t.denom, stream);
    int digit = 0;
    while (t.thresholds[digit + 1] <= v) ++digit;
    return digit;
  }
  const std::uint64_t u = rng_absorb(stream, 0);
  const Rat uval(Int(u), Int(1) << 64);
  int digit = 0;
  while (digit + 2 < static_cast<int>(t.cumulative.size()) && t.cumulative[digit + 1] <= uval)
    ++digit;
  return digit;
}

Rat EtaSampler::sample_at(long index) const {
  Int num = 0, den = 1;
  for (long k = 1; k <= depth_; ++k) {
    const int dk = params_->d(k);
    num = num * dk + draw_digit(k, index);
    den *= dk;
  }
  return Rat(num, den);
}

std::vector<Rat> EtaSampler::sample(long count) const {
  std::vector<Rat> out;
  out.reserve(count);
  for (long i = 0; i < count; ++i) out.push_back(sample_at(i));
  return out;
}

CdfReport cdf_distance(const Params& ps, long n_samples, int grid_size, std::uint64_t seed,
                       long depth) {
  if (n_samples < 1) throw std::invalid_argument("empty sample");
  if (grid_size < 2) throw std::invalid_argument("grid size must be >= 2");
  if (depth == 0) {
    depth = 1;
    while (ps.radix_product(depth) <= 10 * grid_size) ++depth;
  }

  const EtaSampler sampler(ps, depth, seed);
  std::vector<Rat> samples = sampler.sample(n_samples);
  std::sort(samples.begin(), samples.end());

  CdfReport rep;
  rep.n_samples = n_samples;
  rep.grid_size = grid_size;
  rep.depth = depth;
  rep.seed = seed;
  rep.distance = 0;
  rep.ks_reference = 1.36 / std::sqrt(static_cast<double>(n_samples));
  for (int g = 1; g < grid_size; ++g) {
    const Rat x(g, grid_size);
    const auto below = std::lower_bound(samples.begin(), samples.end(), x) - samples.begin();
    CdfRow row;
    row.x = x;
    row.empirical = Rat(static_cast<long>(below), n_samples);
    row.model = eval(ps, x, Rat(1, Int(1000000000000))).value;
    const Rat gap = abs_rat(row.empirical - row.model);
    if (gap > rep.distance) rep.distance = gap;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

std::string CdfReport::csv() const {
  std::ostringstream out;
  out << "x,empirical,model\n";
  for (const auto& r : rows) {
    out << decimal_string(r.x, 17) << "," << decimal_string(r.empirical, 17) << ","
        << decimal_string(r.model, 17) << "\n";
  }
  return out.str();
}

std::string CdfReport::to_json_string() const {
  json j;
  j["n_samples"] = n_samples;
  j["grid_size"] = grid_size;
  j["depth"] = depth;
  j["seed"] = seed;
  j["distance"] = fraction_string(distance);
  j["distance_decimal"] = decimal_string(distance, 6);
  j["ks_reference"] = ks_reference;
  return j.dump(2);
}

std::string samples_csv(const std::vector<Rat>& samples) {
  std::ostringstream out;
  out << "index,value,value_exact\n";
  for (std::size_t i = 0; i < samples.size(); ++i) {
    out << i << "," << decimal_string(samples[i], 17) << "," << fraction_string(samples[i])
        << "\n";
  }
  return out.str();
}

}  // namespace negacantor
