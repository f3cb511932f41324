#pragma once

#include <cstddef>
#include <optional>

#include "qbound/bitmatrix.hpp"
#include "qbound/codes.hpp"

namespace qbound {

/// One error sector of a code: binary check matrix H (r x n) and the
/// degeneracy generator matrix G (r' x n) with H G^T = 0. For a CSS code
/// the X-error sector is (G_Z, G_X); for a general stabilizer code it is
/// (H, G) over 2n binary columns.
struct CodeSector {
  BitMatrix checks;
  BitMatrix degeneracy;
  std::size_t k = 0;
  std::optional<std::size_t> distance;
};

enum class CssSector {
  kXErrors,  ///< X errors against Z checks (checks = G_Z).
  kZErrors,  ///< Z errors against X checks (checks = G_X).
};

CodeSector css_sector(const CssCode& code, CssSector sector);
CodeSector stabilizer_sector(const StabilizerCode& code);

/// Space-time combined code for m rounds of noisy syndrome measurement
/// with repetition-code combining:
///   P = ( I_m (x) H | R (x) I_r ),
///   Q = ( R^T (x) I_n | I_{m-1} (x) H^T ;  I_m (x) G | 0 ).
/// The first m*n columns are qubit-error positions, the remaining
/// (m-1)*r are syndrome-error positions (the last round's syndrome error
/// is folded into the next cycle).
class FtCode {
 public:
  std::size_t rounds() const { return m_; }
  std::size_t length() const { return p_.cols(); }
  /// Number of leading qubit-error columns (m * n).
  std::size_t qubit_columns() const { return qubit_cols_; }
  std::size_t k() const { return k_; }
  /// min(d, m) when the base distance is known; d itself for m = 1.
  std::optional<std::size_t> distance() const { return d_; }

  const BitMatrix& checks() const { return p_; }
  const BitMatrix& degeneracy() const { return q_; }
  bool is_qubit_column(std::size_t c) const { return c < qubit_cols_; }

  friend FtCode ft_extend(const CodeSector& sector, std::size_t m);

 private:
  std::size_t m_ = 0;
  std::size_t qubit_cols_ = 0;
  std::size_t k_ = 0;
  std::optional<std::size_t> d_;
  BitMatrix p_;
  BitMatrix q_;
};

/// m >= 1; m = 1 returns the bare sector with an empty syndrome block.
FtCode ft_extend(const CodeSector& sector, std::size_t m);

/// Minimum weight of x with checks*x = 0 and x outside rowspace(degeneracy),
/// scanning weights 1..max_weight exhaustively; nullopt if none found.
/// Guarded at `max_candidates` subsets.
std::optional<std::size_t> brute_force_distance(const BitMatrix& checks, const BitMatrix& degeneracy,
                                                std::size_t max_weight, double max_candidates = 1e8);

}  // namespace qbound
