#include "galperin/curve.hpp"

namespace galperin {

std::vector<std::size_t> interior_extrema(const CurveSeries& curve) {
  std::vector<std::size_t> out;
  const auto& pts = curve.points;
  int last_dir = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double d = pts[i].ordinate - pts[i - 1].ordinate;
    const int dir = (d > 0) - (d < 0);
    if (dir == 0) continue;
    if (last_dir != 0 && dir != last_dir) out.push_back(i - 1);
    last_dir = dir;
  }
  return out;
}

}  // namespace galperin
