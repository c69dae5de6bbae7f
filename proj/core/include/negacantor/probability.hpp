#pragma once

#include "negacantor/params.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace negacantor {

// Draws the random point with independent positive-Cantor digits xi_k,
// P{xi_k = i} = p_{i,k}, truncated to `depth` digits, so each sample is the
// exact rational sum_{k<=depth} xi_k/(d_1...d_k). Truncation undershoots the
// full expansion by less than one depth-level cylinder width.
//
// Draws go through counter-based streams keyed on (seed, index, position):
// a fixed seed reproduces the identical sample list on any platform and
// under any partitioning of the index range. Digit probabilities are exact
// whenever the column's common denominator fits 63 bits (draw modulo the
// denominator with rejection); otherwise they are correct to within 2^-64.
//
// Rejects mixed-sign matrices: columns must be probability vectors.
class EtaSampler {
 public:
  EtaSampler(const Params& ps, long depth, std::uint64_t seed);

  Rat sample_at(long index) const;
  std::vector<Rat> sample(long count) const;

  long depth() const { return depth_; }
  std::uint64_t seed() const { return seed_; }

 private:
  struct ColumnTable {
    bool exact = false;
    std::uint64_t denom = 0;                 // common denominator, exact mode
    std::vector<std::uint64_t> thresholds;   // cumulative numerators, size d+1
    std::vector<Rat> cumulative;             // fallback mode, size d+1
  };

  int draw_digit(long position, long index) const;
  const ColumnTable& table(long position) const;

  const Params* params_;
  long depth_;
  std::uint64_t seed_;
  std::vector<ColumnTable> pre_, per_;
};

struct CdfRow {
  Rat x;
  Rat empirical;
  Rat model;
};

struct CdfReport {
  long n_samples = 0;
  int grid_size = 0;
  long depth = 0;
  std::uint64_t seed = 0;
  Rat distance;         // sup over the grid of |empirical - F~|
  double ks_reference;  // 1.36 / sqrt(n)
  std::vector<CdfRow> rows;

  std::string csv() const;  // columns x,empirical,model
  std::string to_json_string() const;
};

// Empirical CDF of n samples against F~ on the grid x = g/grid_size,
// g = 1..grid_size-1, with the strict-inequality convention P{eta < x}.
// F~ is continuous, so grid values are left limits as well. depth 0 picks
// the smallest depth whose cylinder width is below 1/(10 grid_size).
CdfReport cdf_distance(const Params& ps, long n_samples, int grid_size, std::uint64_t seed,
                       long depth = 0);

std::string samples_csv(const std::vector<Rat>& samples);

}  // namespace negacantor
