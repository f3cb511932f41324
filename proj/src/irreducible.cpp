#include <bit>

#include "qbound/clusters.hpp"
#include "qbound/errors.hpp"

namespace qbound {

bool is_irreducible(const ClusterModel& model, const Cluster& cluster) {
  if (cluster.weight() == 0) throw ValidationError("is_irreducible: empty cluster");
  std::vector<BitVector> columns;
  columns.reserve(cluster.weight());
  BitVector total(model.num_checks());
  for (const auto& e : cluster.entries()) {
    columns.push_back(model.term_syndrome(e.position, e.letter));
    total ^= columns.back();
  }
  if (!total.is_zero()) throw ValidationError("is_irreducible: cluster is detectable");
  const BitMatrix stacked = BitMatrix::from_rows(std::move(columns), model.num_checks());
  return cluster.weight() - stacked.rank() == 1;
}

bool is_irreducible(const StabilizerCode& code, const PauliOp& op) {
  if (op.is_identity()) throw ValidationError("is_irreducible: identity operator");
  if (!code.syndrome(op).is_zero()) throw ValidationError("is_irreducible: operator is detectable");
  std::vector<BitVector> columns;
  for (std::size_t q = 0; q < op.num_qubits(); ++q) {
    const Pauli p = op.at(q);
    if (p == Pauli::I) continue;
    PauliOp single(op.num_qubits());
    single.set(q, p);
    columns.push_back(code.syndrome(single));
  }
  const std::size_t m = columns.size();
  const BitMatrix stacked = BitMatrix::from_rows(std::move(columns), code.check_matrix().rows());
  return m - stacked.rank() == 1;
}

bool is_irreducible_bruteforce(const ClusterModel& model, const Cluster& cluster) {
  const std::size_t m = cluster.weight();
  if (m == 0) throw ValidationError("is_irreducible_bruteforce: empty cluster");
  if (m > 20) throw ValidationError("is_irreducible_bruteforce: weight exceeds the 2^20 subset cap");
  if (!model.syndrome(cluster).is_zero()) throw ValidationError("is_irreducible_bruteforce: cluster is detectable");

  // Gray-code walk over subsets; each step toggles one term.
  const auto& entries = cluster.entries();
  BitVector syndrome(model.num_checks());
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  std::uint64_t prev = 0;
  for (std::uint64_t i = 1; i <= full; ++i) {
    const std::uint64_t gray = i ^ (i >> 1);
    const auto bit = static_cast<std::size_t>(std::countr_zero(gray ^ prev));
    syndrome ^= model.term_syndrome(entries[bit].position, entries[bit].letter);
    prev = gray;
    if (gray != full && syndrome.is_zero()) return false;
  }
  return true;
}

}  // namespace qbound
