#include "qbound/ft_code.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "qbound/errors.hpp"

namespace qbound {

CodeSector css_sector(const CssCode& code, CssSector sector) {
  if (sector == CssSector::kXErrors) return CodeSector{code.gz(), code.gx(), code.k(), code.distance()};
  return CodeSector{code.gx(), code.gz(), code.k(), code.distance()};
}

CodeSector stabilizer_sector(const StabilizerCode& code) {
  return CodeSector{code.check_matrix(), code.generator_matrix(), code.k(), code.distance()};
}

FtCode ft_extend(const CodeSector& sector, std::size_t m) {
  if (m < 1) throw ValidationError("ft_extend needs at least one round");
  const BitMatrix& h = sector.checks;
  const BitMatrix& g = sector.degeneracy;
  if (h.cols() != g.cols()) throw ValidationError("ft_extend: check and degeneracy matrices differ in width");
  const std::size_t n = h.cols();
  const std::size_t r = h.rows();

  FtCode out;
  out.m_ = m;
  out.qubit_cols_ = m * n;
  out.k_ = sector.k;
  // m = 1 is the bare code; otherwise the closed form min(d, m), which
  // exhaustive search shows is a lower bound (e.g. toric L=3, m=2 has 3).
  if (sector.distance) out.d_ = m == 1 ? *sector.distance : std::min(*sector.distance, m);

  const BitMatrix qubit_block = kron(BitMatrix::identity(m), h);
  const BitMatrix degeneracy_block = kron(BitMatrix::identity(m), g);
  if (m == 1) {
    out.p_ = qubit_block;
    out.q_ = degeneracy_block;
    return out;
  }

  const BitMatrix rep = repetition_transpose(m);
  out.p_ = qubit_block.hstack(kron(rep, BitMatrix::identity(r)));

  const BitMatrix self_corrected =
      kron(rep.transpose(), BitMatrix::identity(n)).hstack(kron(BitMatrix::identity(m - 1), h.transpose()));
  const BitMatrix trivial = degeneracy_block.hstack(BitMatrix(degeneracy_block.rows(), (m - 1) * r));
  out.q_ = self_corrected.vstack(trivial);
  return out;
}

std::optional<std::size_t> brute_force_distance(const BitMatrix& checks, const BitMatrix& degeneracy,
                                                std::size_t max_weight, double max_candidates) {
  const std::size_t n = checks.cols();
  if (degeneracy.rows() != 0 && degeneracy.cols() != n) {
    throw ValidationError("brute_force_distance: matrices differ in width");
  }
  double total = 0;
  for (std::size_t w = 1; w <= std::min(max_weight, n); ++w) {
    total += std::exp(std::lgamma(n + 1.0) - std::lgamma(w + 1.0) - std::lgamma(n - w + 1.0));
  }
  if (total > max_candidates) throw ResourceLimitError("brute_force_distance: search space too large");

  std::vector<BitVector> columns;
  columns.reserve(n);
  for (std::size_t c = 0; c < n; ++c) columns.push_back(checks.column(c));
  const RowSpaceBasis trivial(degeneracy.rows() != 0 ? degeneracy : BitMatrix(0, n));

  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t, std::size_t, const BitVector&)> search =
      [&](std::size_t start, std::size_t remaining, const BitVector& syndrome) -> bool {
    if (remaining == 0) {
      if (!syndrome.is_zero()) return false;
      BitVector x(n);
      for (std::size_t c : chosen) x.set(c);
      return !trivial.contains(x);
    }
    for (std::size_t c = start; c + remaining <= n; ++c) {
      chosen.push_back(c);
      const bool found = search(c + 1, remaining - 1, syndrome ^ columns[c]);
      chosen.pop_back();
      if (found) return true;
    }
    return false;
  };

  for (std::size_t w = 1; w <= std::min(max_weight, n); ++w) {
    if (search(0, w, BitVector(checks.rows()))) return w;
  }
  return std::nullopt;
}

}  // namespace qbound
