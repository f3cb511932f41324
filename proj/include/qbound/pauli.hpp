#pragma once

#include <cstddef>
#include <string>

#include "qbound/bitmatrix.hpp"

namespace qbound {

enum class Pauli : unsigned char { I = 0, X = 1, Z = 2, Y = 3 };

char pauli_char(Pauli p);

/// n-qubit Pauli operator X^v Z^u with the phase dropped. Products are
/// componentwise XOR of the (v, u) pairs.
class PauliOp {
 public:
  PauliOp() = default;
  explicit PauliOp(std::size_t n) : x_(n), z_(n) {}
  PauliOp(BitVector x, BitVector z);
  /// Parses "IXYZ..." strings; one letter per qubit.
  static PauliOp from_string(const std::string& letters);
  /// Reads the binary form (v | u) of length 2n.
  static PauliOp from_symplectic(const BitVector& vu);

  std::size_t num_qubits() const { return x_.size(); }
  const BitVector& x_part() const { return x_; }
  const BitVector& z_part() const { return z_; }

  Pauli at(std::size_t q) const;
  void set(std::size_t q, Pauli p);

  std::size_t weight() const;
  bool is_identity() const { return x_.is_zero() && z_.is_zero(); }
  /// Binary form (v | u) of length 2n.
  BitVector symplectic() const { return x_.concat(z_); }

  PauliOp& operator*=(const PauliOp& other);
  friend PauliOp operator*(PauliOp a, const PauliOp& b) { return a *= b; }
  friend bool operator==(const PauliOp& a, const PauliOp& b) = default;

  std::string to_string() const;

 private:
  BitVector x_;
  BitVector z_;
};

/// v1.u2 + u1.v2 mod 2; false iff the operators commute.
bool symplectic_product(const PauliOp& a, const PauliOp& b);

}  // namespace qbound
