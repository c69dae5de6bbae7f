#pragma once

#include "negacantor/params.hpp"

#include <string>
#include <utility>
#include <vector>

namespace negacantor {

// Plane contraction attached to digit i at position n:
//   x' = (x + omega_{i,n}) / d_n,   omega = i at odd n, d_n-1-i at even n
//   y' = beta~_{i,n} + p~_{i,n} y
struct AffineMap {
  long n = 0;
  int digit = 0;
  Rat x_scale, x_offset, y_scale, y_offset;
};

struct GraphPoint {
  Rat x, y;
};

AffineMap component_map(const Params& ps, int digit, long n);

GraphPoint apply(const AffineMap& m, const GraphPoint& pt);

// One point per depth-n digit string: the maps for positions n, n-1, ..., 1
// applied to the seed (0,0) in that order (position 1 outermost), which
// lands on (cylinder left endpoint, F~ thereof) exactly. Sorted by x.
// Guarded to at most 10^6 digit strings.
std::vector<GraphPoint> graph_points(const Params& ps, int depth);

std::string graph_csv(const std::vector<GraphPoint>& pts);   // 17 significant digits
std::string graph_json(const std::vector<GraphPoint>& pts);

}  // namespace negacantor
