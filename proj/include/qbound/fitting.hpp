#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qbound/clusters.hpp"

namespace qbound {

/// Least-squares fit ln N = intercept + slope * m.
struct FitResult {
  double intercept = 0;
  double slope = 0;
  /// e^slope: the per-unit-weight growth factor.
  double growth_base = 0;
  double residual_sum_squares = 0;
  std::size_t m_min = 0;
  std::size_t m_max = 0;
  /// Weights that entered the fit (nonzero counts only).
  std::vector<std::size_t> weights_used;
};

enum class CountField { kDistinct, kIrreducible, kIrreducibleNonstabilizer, kPaths };

CountField parse_count_field(const std::string& name);
std::string to_string(CountField f);
std::uint64_t census_count(const CensusRow& row, CountField field);

/// Fits (m, count) pairs with count > 0; zero counts are skipped. Needs at
/// least three usable points.
FitResult fit_log_linear(const std::vector<std::pair<std::size_t, double>>& points);

/// Fit over census rows with m in [m_min, m_max].
FitResult fit_zeta(const ClusterCensus& census, CountField field, std::size_t m_min, std::size_t m_max);

}  // namespace qbound
