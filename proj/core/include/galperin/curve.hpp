#pragma once

#include <map>
#include <string>
#include <vector>

namespace galperin {

struct CurvePoint {
  double abscissa = 0.0;
  double ordinate = 0.0;
};

/// Ordered samples of one figure curve. `metadata` holds the model tag and
/// quantum numbers as strings so they serialize verbatim.
struct CurveSeries {
  std::string model;
  std::string abscissa_name;
  std::string ordinate_name;
  std::map<std::string, std::string> metadata;
  std::vector<CurvePoint> points;
};

/// Indices of strict interior local extrema of the ordinate sequence.
/// Runs of equal values count once.
std::vector<std::size_t> interior_extrema(const CurveSeries& curve);

}  // namespace galperin
