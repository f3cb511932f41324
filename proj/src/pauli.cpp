#include "qbound/pauli.hpp"

#include <bit>

#include "qbound/errors.hpp"

namespace qbound {

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I:
      return 'I';
    case Pauli::X:
      return 'X';
    case Pauli::Z:
      return 'Z';
    case Pauli::Y:
      return 'Y';
  }
  return '?';
}

PauliOp::PauliOp(BitVector x, BitVector z) : x_(std::move(x)), z_(std::move(z)) {
  if (x_.size() != z_.size()) throw ValidationError("PauliOp: X and Z parts differ in length");
}

PauliOp PauliOp::from_string(const std::string& letters) {
  PauliOp op(letters.size());
  for (std::size_t q = 0; q < letters.size(); ++q) {
    switch (letters[q]) {
      case 'I':
      case '_':
        break;
      case 'X':
        op.set(q, Pauli::X);
        break;
      case 'Y':
        op.set(q, Pauli::Y);
        break;
      case 'Z':
        op.set(q, Pauli::Z);
        break;
      default:
        throw ValidationError(std::string("unknown Pauli letter '") + letters[q] + "'");
    }
  }
  return op;
}

PauliOp PauliOp::from_symplectic(const BitVector& vu) {
  if (vu.size() % 2 != 0) throw ValidationError("symplectic vector must have even length");
  const std::size_t n = vu.size() / 2;
  return PauliOp(vu.slice(0, n), vu.slice(n, 2 * n));
}

Pauli PauliOp::at(std::size_t q) const {
  return static_cast<Pauli>((x_.get(q) ? 1 : 0) | (z_.get(q) ? 2 : 0));
}

void PauliOp::set(std::size_t q, Pauli p) {
  const auto bits = static_cast<unsigned>(p);
  x_.set(q, (bits & 1U) != 0);
  z_.set(q, (bits & 2U) != 0);
}

std::size_t PauliOp::weight() const {
  std::size_t w = 0;
  for (std::size_t k = 0; k < x_.words().size(); ++k) {
    w += static_cast<std::size_t>(std::popcount(x_.words()[k] | z_.words()[k]));
  }
  return w;
}

PauliOp& PauliOp::operator*=(const PauliOp& other) {
  if (other.num_qubits() != num_qubits()) throw ValidationError("Pauli product: qubit counts differ");
  x_ ^= other.x_;
  z_ ^= other.z_;
  return *this;
}

std::string PauliOp::to_string() const {
  std::string s(num_qubits(), 'I');
  for (std::size_t q = 0; q < num_qubits(); ++q) s[q] = pauli_char(at(q));
  return s;
}

bool symplectic_product(const PauliOp& a, const PauliOp& b) {
  if (a.num_qubits() != b.num_qubits()) throw ValidationError("symplectic_product: qubit counts differ");
  return a.x_part().dot(b.z_part()) != a.z_part().dot(b.x_part());
}

}  // namespace qbound
