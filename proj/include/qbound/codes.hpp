#pragma once

#include <cstddef>
#include <optional>

#include "qbound/bitmatrix.hpp"
#include "qbound/pauli.hpp"

namespace qbound {

/// Stabilizer code given by a binary generator matrix G = (A_X | A_Z) with
/// 2n columns. G may carry linearly dependent rows; k is always derived
/// from rank(G). The check matrix H = (A_Z | A_X) gives syndromes s = H e.
class StabilizerCode {
 public:
  /// Validates commutativity (H G^T = 0) and rejects zero rows.
  /// Throws ValidationError naming the offending rows.
  StabilizerCode(BitMatrix generators, std::size_t n, std::optional<std::size_t> distance = std::nullopt);

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  /// Number of independent generators, n - k.
  std::size_t r() const { return n_ - k_; }
  std::size_t num_generators() const { return g_.rows(); }
  /// Largest Pauli weight of any generator row.
  std::size_t w() const { return w_; }
  std::optional<std::size_t> distance() const { return d_; }

  const BitMatrix& generator_matrix() const { return g_; }
  const BitMatrix& check_matrix() const { return h_; }
  PauliOp generator(std::size_t i) const { return PauliOp::from_symplectic(g_.row(i)); }

  /// One bit per generator row; zero iff e is undetectable.
  BitVector syndrome(const PauliOp& e) const;
  /// Requires a zero syndrome; throws ValidationError otherwise.
  bool is_stabilizer_element(const PauliOp& e) const;

 private:
  std::size_t n_;
  std::size_t k_;
  std::size_t w_;
  std::optional<std::size_t> d_;
  BitMatrix g_;
  BitMatrix h_;
};

/// CSS code with X-type generators G_X and Z-type generators G_Z acting on
/// the same n qubits.
class CssCode {
 public:
  CssCode(BitMatrix gx, BitMatrix gz, std::optional<std::size_t> distance = std::nullopt);

  std::size_t n() const { return gx_.cols(); }
  std::size_t k() const { return k_; }
  std::size_t w_x() const { return gx_.max_row_weight(); }
  std::size_t w_z() const { return gz_.max_row_weight(); }
  std::optional<std::size_t> distance() const { return d_; }

  const BitMatrix& gx() const { return gx_; }
  const BitMatrix& gz() const { return gz_; }

  /// Block-diagonal stabilizer view, X-type rows first.
  StabilizerCode stabilizer() const;

 private:
  BitMatrix gx_;
  BitMatrix gz_;
  std::size_t k_;
  std::optional<std::size_t> d_;
};

/// Kitaev toric code on an L x L periodic square lattice.
///
/// Qubit indexing: horizontal bond from vertex (x, y) to (x+1, y) is
/// y*L + x; vertical bond from (x, y) to (x, y+1) is L*L + y*L + x.
/// Row y*L + x of G_X is the plaquette with lower-left corner (x, y);
/// row y*L + x of G_Z is the vertex (x, y).
CssCode toric_code(std::size_t L);

/// Tillich-Zemor hypergraph product:
/// G_X = (H1 (x) I_n2 | I_r1 (x) H2^T), G_Z = (I_n1 (x) H2 | H1^T (x) I_r2).
CssCode hypergraph_product(const BitMatrix& h1, const BitMatrix& h2);

/// Cyclic check matrix of the length-m repetition code (m x m circulant
/// with two ones per row).
BitMatrix repetition_cycle(std::size_t m);

/// m x (m-1) bidiagonal matrix: the transposed check matrix of the
/// length-m repetition code.
BitMatrix repetition_transpose(std::size_t m);

}  // namespace qbound
