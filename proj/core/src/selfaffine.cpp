#include "negacantor/selfaffine.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace negacantor {

using nlohmann::json;

AffineMap component_map(const Params& ps, int digit, long n) {
  const int dn = ps.d(n);
  if (digit < 0 || digit >= dn)
    throw std::out_of_range("digit " + std::to_string(digit) + " outside alphabet at n=" +
                            std::to_string(n));
  AffineMap m;
  m.n = n;
  m.digit = digit;
  const int omega = n % 2 == 1 ? digit : dn - 1 - digit;
  m.x_scale = Rat(1, dn);
  m.x_offset = Rat(omega, dn);
  const auto [tb, tp] = ps.tilde(digit, n);
  m.y_scale = tp;
  m.y_offset = tb;
  return m;
}

GraphPoint apply(const AffineMap& m, const GraphPoint& pt) {
  return {m.x_scale * pt.x + m.x_offset, m.y_scale * pt.y + m.y_offset};
}

std::vector<GraphPoint> graph_points(const Params& ps, int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  if (ps.radix_product(depth) > 1000000)
    throw std::domain_error("digit string count at depth " + std::to_string(depth) +
                            " exceeds the 10^6 guard");

  std::vector<GraphPoint> out;
  std::vector<AffineMap> chain;
  chain.reserve(depth);
  // Enumerate digit strings; at a leaf apply the chain inner-to-outer, the
  // deepest position first.
  auto walk = [&](auto&& self, long n) -> void {
    if (n > depth) {
      GraphPoint pt{Rat(0), Rat(0)};
      for (long j = depth - 1; j >= 0; --j) pt = apply(chain[j], pt);
      out.push_back(std::move(pt));
      return;
    }
    for (int c = 0; c < ps.d(n); ++c) {
      chain.push_back(component_map(ps, c, n));
      self(self, n + 1);
      chain.pop_back();
    }
  };
  walk(walk, 1);

  std::sort(out.begin(), out.end(),
            [](const GraphPoint& a, const GraphPoint& b) { return a.x < b.x; });
  return out;
}

std::string graph_csv(const std::vector<GraphPoint>& pts) {
  std::ostringstream out;
  out << "x,y\n";
  for (const auto& p : pts)
    out << decimal_string(p.x, 17) << "," << decimal_string(p.y, 17) << "\n";
  return out.str();
}

std::string graph_json(const std::vector<GraphPoint>& pts) {
  json arr = json::array();
  for (const auto& p : pts) {
    json e;
    e["x"] = fraction_string(p.x);
    e["y"] = fraction_string(p.y);
    arr.push_back(e);
  }
  return arr.dump();
}

}  // namespace negacantor
