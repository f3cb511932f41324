#include <bit>
#include <cmath>

#include "qbound/clusters.hpp"
#include "qbound/errors.hpp"

namespace qbound {

namespace {

/// Number of ways the selection rule can order these terms into a
/// recursion path of full length: every proper prefix must leave a nonzero
/// syndrome, and each new term must flip the lowest unsatisfied check.
std::uint64_t count_orderings(const std::vector<std::uint64_t>& masks, std::uint32_t used, std::uint64_t syndrome,
                              std::size_t depth) {
  if (depth == masks.size()) return 1;
  if (syndrome == 0) return 0;
  const int lowest = std::countr_zero(syndrome);
  std::uint64_t total = 0;
  for (std::size_t t = 0; t < masks.size(); ++t) {
    if ((used >> t) & 1U) continue;
    if (((masks[t] >> lowest) & 1U) == 0) continue;
    total += count_orderings(masks, used | (1U << t), syndrome ^ masks[t], depth + 1);
  }
  return total;
}

bool subset_scan_irreducible(const std::vector<std::uint64_t>& masks) {
  const std::size_t m = masks.size();
  const std::uint32_t full = (1U << m) - 1;
  for (std::uint32_t s = 1; s < full; ++s) {
    std::uint64_t syn = 0;
    for (std::size_t t = 0; t < m; ++t) {
      if ((s >> t) & 1U) syn ^= masks[t];
    }
    if (syn == 0) return false;
  }
  return true;
}

double binomial(double n, double k) {
  return std::exp(std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1));
}

}  // namespace

ClusterCensus brute_force_census(const ClusterModel& model, const BruteForceOptions& options) {
  const std::size_t n = model.num_positions();
  const std::size_t m_max = options.m_max;
  if (m_max < 1) throw ValidationError("m_max must be at least 1");
  if (m_max > 20) throw ValidationError("brute force census supports m_max <= 20");
  if (model.num_checks() > 64) throw ValidationError("brute force census supports at most 64 checks");

  double volume = 0;
  const auto letters = static_cast<double>(model.letters_per_position());
  for (std::size_t m = 1; m <= std::min(m_max, n); ++m) {
    volume += binomial(static_cast<double>(n), static_cast<double>(m)) * std::pow(letters, static_cast<double>(m));
  }
  if (volume > options.max_operators) {
    throw ResourceLimitError("brute force census would visit " + std::to_string(volume) + " operators");
  }

  // Syndrome masks straight from the check matrix, bit s = sorted check s.
  const BitMatrix& checks = model.check_matrix();
  const auto& order = model.check_order();
  const std::size_t dim = model.is_pauli() ? 2 * n : n;
  std::vector<std::uint64_t> term_mask(n * 4, 0);
  for (std::size_t j = 0; j < n; ++j) {
    for (Pauli letter : model.letters()) {
      BitVector e(dim);
      const auto bits = static_cast<unsigned>(letter);
      if (bits & 1U) e.set(j);
      if (bits & 2U) e.set(n + j);
      std::uint64_t mask = 0;
      for (std::size_t s = 0; s < order.size(); ++s) {
        if (checks.row(order[s]).dot(e)) mask |= std::uint64_t{1} << s;
      }
      term_mask[j * 4 + bits] = mask;
    }
  }

  const BitMatrix& degeneracy = model.degeneracy_matrix();
  const std::size_t base_rank = degeneracy.rank();
  auto in_stabilizer = [&](const std::vector<ClusterEntry>& terms) {
    BitVector x(dim);
    for (const auto& t : terms) {
      const auto bits = static_cast<unsigned>(t.letter);
      if (bits & 1U) x.set(t.position);
      if (bits & 2U) x.set(n + t.position);
    }
    return degeneracy.vstack(BitMatrix::from_rows({x}, dim)).rank() == base_rank;
  };

  ClusterCensus census;
  census.kind = model.kind();
  census.m_max = m_max;
  census.rows.resize(m_max);
  for (std::size_t m = 1; m <= m_max; ++m) census.rows[m - 1].m = m;

  const bool has_split = model.qubit_columns() < n;
  if (has_split) {
    for (std::size_t m = 1; m <= m_max; ++m) {
      for (std::size_t mq = 0; mq <= m; ++mq) census.split.push_back(SplitRow{m, mq, 0, 0});
    }
  }

  std::vector<ClusterEntry> terms;
  std::vector<std::uint64_t> masks;

  auto visit_leaf = [&](std::uint64_t syndrome) {
    const std::size_t m = terms.size();
    CensusRow& row = census.rows[m - 1];
    std::uint64_t orderings = 0;
    for (std::size_t t = 0; t < m; ++t) orderings += count_orderings(masks, 1U << t, masks[t], 1);
    row.paths += orderings;
    if (syndrome != 0) return;
    if (orderings > 0) ++row.distinct;
    if (!subset_scan_irreducible(masks)) return;
    ++row.irreducible;
    const bool stabilizer = in_stabilizer(terms);
    if (!stabilizer) ++row.irreducible_nonstabilizer;
    if (has_split) {
      std::size_t mq = 0;
      for (const auto& t : terms) mq += t.position < model.qubit_columns() ? 1 : 0;
      SplitRow& s = census.split[(m - 1) * (m + 2) / 2 + mq];
      ++s.irreducible;
      if (!stabilizer) ++s.irreducible_nonstabilizer;
    }
  };

  // All operators of weight exactly `target`, positions ascending.
  auto extend = [&](auto&& self, std::size_t start, std::size_t target, std::uint64_t syndrome) -> void {
    if (terms.size() == target) {
      visit_leaf(syndrome);
      return;
    }
    for (std::size_t j = start; j + (target - terms.size()) <= n; ++j) {
      for (Pauli letter : model.letters()) {
        const std::uint64_t mask = term_mask[j * 4 + static_cast<std::size_t>(letter)];
        terms.push_back(ClusterEntry{static_cast<std::uint32_t>(j), letter});
        masks.push_back(mask);
        self(self, j + 1, target, syndrome ^ mask);
        masks.pop_back();
        terms.pop_back();
      }
    }
  };

  for (std::size_t m = 1; m <= std::min(m_max, n); ++m) extend(extend, 0, m, 0);
  return census;
}

}  // namespace qbound
