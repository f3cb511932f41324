#include "qbound/fitting.hpp"

#include <cmath>

#include "qbound/errors.hpp"

namespace qbound {

CountField parse_count_field(const std::string& name) {
  if (name == "distinct") return CountField::kDistinct;
  if (name == "irreducible") return CountField::kIrreducible;
  if (name == "irreducible_nonstabilizer" || name == "nonstabilizer") return CountField::kIrreducibleNonstabilizer;
  if (name == "paths") return CountField::kPaths;
  throw ValidationError("unknown count field '" + name + "'");
}

std::string to_string(CountField f) {
  switch (f) {
    case CountField::kDistinct:
      return "distinct";
    case CountField::kIrreducible:
      return "irreducible";
    case CountField::kIrreducibleNonstabilizer:
      return "irreducible_nonstabilizer";
    case CountField::kPaths:
      return "paths";
  }
  return "?";
}

std::uint64_t census_count(const CensusRow& row, CountField field) {
  switch (field) {
    case CountField::kDistinct:
      return row.distinct;
    case CountField::kIrreducible:
      return row.irreducible;
    case CountField::kIrreducibleNonstabilizer:
      return row.irreducible_nonstabilizer;
    case CountField::kPaths:
      return row.paths;
  }
  return 0;
}

FitResult fit_log_linear(const std::vector<std::pair<std::size_t, double>>& points) {
  FitResult out;
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& [m, count] : points) {
    if (!(count > 0)) continue;
    xs.push_back(static_cast<double>(m));
    ys.push_back(std::log(count));
    out.weights_used.push_back(m);
  }
  if (xs.size() < 3) throw ValidationError("fit needs at least three weights with nonzero counts");

  const auto n = static_cast<double>(xs.size());
  double mean_x = 0;
  double mean_y = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= n;
  mean_y /= n;
  double sxx = 0;
  double sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
    sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
  }
  out.slope = sxy / sxx;
  out.intercept = mean_y - out.slope * mean_x;
  out.growth_base = std::exp(out.slope);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (out.intercept + out.slope * xs[i]);
    out.residual_sum_squares += r * r;
  }
  out.m_min = out.weights_used.front();
  out.m_max = out.weights_used.back();
  return out;
}

FitResult fit_zeta(const ClusterCensus& census, CountField field, std::size_t m_min, std::size_t m_max) {
  if (m_min > m_max) throw ValidationError("fit range is empty");
  std::vector<std::pair<std::size_t, double>> points;
  for (const auto& row : census.rows) {
    if (row.m < m_min || row.m > m_max) continue;
    points.emplace_back(row.m, static_cast<double>(census_count(row, field)));
  }
  return fit_log_linear(points);
}

}  // namespace qbound
