#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qbound {

/// Dense bit vector over GF(2), packed into 64-bit words. Bits past len()
/// in the last word are always zero so word-wise comparison and hashing
/// are well defined.
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t len);
  /// Builds from explicit 0/1 entries.
  static BitVector from_bits(std::initializer_list<int> bits);
  /// Builds from a string of '0'/'1' characters.
  static BitVector from_string(const std::string& bits);
  static BitVector unit(std::size_t len, std::size_t index);

  std::size_t size() const { return len_; }
  bool empty() const { return len_ == 0; }

  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  std::size_t weight() const;
  bool is_zero() const;
  /// Index of the lowest set bit, or size() if none.
  std::size_t first_set() const;
  /// Parity of the bitwise AND.
  bool dot(const BitVector& other) const;
  std::vector<std::size_t> support() const;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend bool operator==(const BitVector& a, const BitVector& b) = default;

  /// Concatenation (this | tail).
  BitVector concat(const BitVector& tail) const;
  BitVector slice(std::size_t begin, std::size_t end) const;

  std::span<const Word> words() const { return words_; }
  std::size_t hash() const;
  std::string to_string() const;

 private:
  std::size_t len_ = 0;
  std::vector<Word> words_;
};

struct BitVectorHash {
  std::size_t operator()(const BitVector& v) const { return v.hash(); }
};

/// Dense row-major GF(2) matrix. Each row is a BitVector of length cols().
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);
  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(std::vector<BitVector> rows, std::size_t cols);
  /// Rows given as '0'/'1' strings of equal length.
  static BitMatrix from_strings(std::initializer_list<std::string> rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }
  const BitVector& row(std::size_t r) const { return rows_[r]; }
  BitVector column(std::size_t c) const;
  std::size_t row_weight(std::size_t r) const { return rows_[r].weight(); }
  std::size_t max_row_weight() const;
  std::size_t column_weight(std::size_t c) const;
  bool is_zero() const;

  BitMatrix transpose() const;
  /// Matrix product this * other.
  BitMatrix multiply(const BitMatrix& other) const;
  /// this * other^T, cheap with row-major storage.
  BitMatrix multiply_transpose(const BitMatrix& other) const;
  /// this * x for a column vector x of length cols().
  BitVector multiply(const BitVector& x) const;

  BitMatrix hstack(const BitMatrix& right) const;
  BitMatrix vstack(const BitMatrix& below) const;
  BitMatrix column_block(std::size_t begin, std::size_t end) const;

  std::size_t rank() const;
  std::size_t kernel_dimension() const { return cols_ - rank(); }
  /// Basis of {x : M x = 0}; one vector per free column, lowest pivot
  /// column first, so the basis is reproducible.
  std::vector<BitVector> kernel_basis() const;
  /// True iff x is a GF(2) combination of the rows.
  bool row_space_contains(const BitVector& x) const;
  /// Reduced row echelon form with zero rows dropped.
  BitMatrix row_reduced() const;

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

/// Kronecker product over GF(2); dimensions (rA*rB) x (cA*cB).
BitMatrix kron(const BitMatrix& a, const BitMatrix& b);

/// Reduced echelon basis that supports repeated membership queries
/// without re-eliminating the generating matrix.
class RowSpaceBasis {
 public:
  explicit RowSpaceBasis(const BitMatrix& m);
  std::size_t dimension() const { return basis_.size(); }
  std::size_t ambient() const { return cols_; }
  bool contains(BitVector x) const;

 private:
  std::size_t cols_;
  std::vector<BitVector> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace qbound
