#include "qbound/codes.hpp"

#include <algorithm>
#include <string>

#include "qbound/errors.hpp"

namespace qbound {

StabilizerCode::StabilizerCode(BitMatrix generators, std::size_t n, std::optional<std::size_t> distance)
    : n_(n), d_(distance), g_(std::move(generators)) {
  if (g_.cols() != 2 * n_) {
    throw ValidationError("generator matrix must have 2n = " + std::to_string(2 * n_) + " columns, got " +
                          std::to_string(g_.cols()));
  }
  for (std::size_t i = 0; i < g_.rows(); ++i) {
    if (g_.row(i).is_zero()) throw ValidationError("generator row " + std::to_string(i) + " is zero");
  }

  const BitMatrix ax = g_.column_block(0, n_);
  const BitMatrix az = g_.column_block(n_, 2 * n_);
  h_ = az.hstack(ax);

  const BitMatrix hg = h_.multiply_transpose(g_);
  for (std::size_t i = 0; i < hg.rows(); ++i) {
    if (!hg.row(i).is_zero()) {
      throw ValidationError("generators " + std::to_string(i) + " and " + std::to_string(hg.row(i).first_set()) +
                            " anticommute");
    }
  }

  k_ = n_ - g_.rank();
  w_ = 0;
  for (std::size_t i = 0; i < g_.rows(); ++i) w_ = std::max(w_, generator(i).weight());
}

BitVector StabilizerCode::syndrome(const PauliOp& e) const {
  if (e.num_qubits() != n_) throw ValidationError("syndrome: error acts on the wrong number of qubits");
  return h_.multiply(e.symplectic());
}

bool StabilizerCode::is_stabilizer_element(const PauliOp& e) const {
  if (!syndrome(e).is_zero()) throw ValidationError("is_stabilizer_element: error is detectable");
  return g_.row_space_contains(e.symplectic());
}

CssCode::CssCode(BitMatrix gx, BitMatrix gz, std::optional<std::size_t> distance)
    : gx_(std::move(gx)), gz_(std::move(gz)), d_(distance) {
  if (gx_.cols() != gz_.cols()) throw ValidationError("G_X and G_Z must have the same number of columns");
  const BitMatrix prod = gx_.multiply_transpose(gz_);
  for (std::size_t i = 0; i < prod.rows(); ++i) {
    if (!prod.row(i).is_zero()) {
      throw ValidationError("X generator " + std::to_string(i) + " and Z generator " +
                            std::to_string(prod.row(i).first_set()) + " anticommute");
    }
  }
  k_ = gx_.cols() - gx_.rank() - gz_.rank();
}

StabilizerCode CssCode::stabilizer() const {
  const BitMatrix top = gx_.hstack(BitMatrix(gx_.rows(), n()));
  const BitMatrix bottom = BitMatrix(gz_.rows(), n()).hstack(gz_);
  return StabilizerCode(top.vstack(bottom), n(), d_);
}

CssCode toric_code(std::size_t L) {
  if (L < 2) throw ValidationError("toric code needs L >= 2");
  const std::size_t n = 2 * L * L;
  auto h = [L](std::size_t x, std::size_t y) { return (y % L) * L + (x % L); };
  auto v = [L](std::size_t x, std::size_t y) { return L * L + (y % L) * L + (x % L); };

  BitMatrix gx(L * L, n);
  BitMatrix gz(L * L, n);
  for (std::size_t y = 0; y < L; ++y) {
    for (std::size_t x = 0; x < L; ++x) {
      const std::size_t row = y * L + x;
      gx.set(row, h(x, y));
      gx.set(row, h(x, y + 1));
      gx.set(row, v(x, y));
      gx.set(row, v(x + 1, y));

      gz.set(row, h(x, y));
      gz.set(row, h(x + L - 1, y));
      gz.set(row, v(x, y));
      gz.set(row, v(x, y + L - 1));
    }
  }
  return CssCode(std::move(gx), std::move(gz), L);
}

CssCode hypergraph_product(const BitMatrix& h1, const BitMatrix& h2) {
  if (h1.rows() == 0 || h1.cols() == 0 || h2.rows() == 0 || h2.cols() == 0) {
    throw ValidationError("hypergraph_product: empty constituent matrix");
  }
  const std::size_t r1 = h1.rows();
  const std::size_t n1 = h1.cols();
  const std::size_t r2 = h2.rows();
  const std::size_t n2 = h2.cols();
  BitMatrix gx = kron(h1, BitMatrix::identity(n2)).hstack(kron(BitMatrix::identity(r1), h2.transpose()));
  BitMatrix gz = kron(BitMatrix::identity(n1), h2).hstack(kron(h1.transpose(), BitMatrix::identity(r2)));
  return CssCode(std::move(gx), std::move(gz));
}

BitMatrix repetition_cycle(std::size_t m) {
  if (m < 2) throw ValidationError("repetition_cycle needs m >= 2");
  BitMatrix out(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    out.set(i, i);
    out.set(i, (i + 1) % m);
  }
  return out;
}

BitMatrix repetition_transpose(std::size_t m) {
  if (m < 2) throw ValidationError("repetition_transpose needs m >= 2");
  BitMatrix out(m, m - 1);
  for (std::size_t j = 0; j + 1 < m; ++j) {
    out.set(j, j);
    out.set(j + 1, j);
  }
  return out;
}

}  // namespace qbound
