#include <algorithm>
#include <numeric>

#include "qbound/clusters.hpp"
#include "qbound/errors.hpp"

namespace qbound {

std::string to_string(SectorKind kind) {
  switch (kind) {
    case SectorKind::kFullPauli:
      return "full";
    case SectorKind::kXType:
      return "x";
    case SectorKind::kZType:
      return "z";
    case SectorKind::kFtBinary:
      return "ft";
  }
  return "?";
}

SectorKind parse_sector_kind(const std::string& name) {
  if (name == "full" || name == "full-pauli") return SectorKind::kFullPauli;
  if (name == "x" || name == "X" || name == "x-type") return SectorKind::kXType;
  if (name == "z" || name == "Z" || name == "z-type") return SectorKind::kZType;
  if (name == "ft" || name == "ft-binary") return SectorKind::kFtBinary;
  throw ValidationError("unknown sector '" + name + "' (expected full, x, z or ft)");
}

Cluster::Cluster(std::vector<ClusterEntry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const ClusterEntry& a, const ClusterEntry& b) { return a.position < b.position; });
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i].position == entries_[i - 1].position) {
      throw ValidationError("cluster has two terms on position " + std::to_string(entries_[i].position));
    }
  }
  for (const auto& e : entries_) {
    if (e.letter == Pauli::I) throw ValidationError("cluster term with identity letter");
  }
}

ClusterModel ClusterModel::full_pauli(const StabilizerCode& code) {
  ClusterModel model;
  model.kind_ = SectorKind::kFullPauli;
  model.pauli_ = true;
  model.positions_ = code.n();
  model.qubit_columns_ = code.n();
  model.checks_ = code.check_matrix();
  model.degeneracy_ = code.generator_matrix();
  model.build();
  return model;
}

ClusterModel ClusterModel::css(const CssCode& code, SectorKind kind) {
  if (kind == SectorKind::kXType) return binary(code.gz(), code.gx(), code.n(), SectorKind::kXType);
  if (kind == SectorKind::kZType) return binary(code.gx(), code.gz(), code.n(), SectorKind::kZType);
  throw ValidationError("ClusterModel::css expects the x or z sector");
}

ClusterModel ClusterModel::ft_binary(const FtCode& code) {
  return binary(code.checks(), code.degeneracy(), code.qubit_columns(), SectorKind::kFtBinary);
}

ClusterModel ClusterModel::binary(BitMatrix checks, BitMatrix degeneracy, std::size_t qubit_columns,
                                  SectorKind kind) {
  if (degeneracy.rows() != 0 && degeneracy.cols() != checks.cols()) {
    throw ValidationError("check and degeneracy matrices differ in width");
  }
  if (qubit_columns > checks.cols()) throw ValidationError("qubit column count exceeds matrix width");
  ClusterModel model;
  model.kind_ = kind;
  model.pauli_ = false;
  model.positions_ = checks.cols();
  model.qubit_columns_ = qubit_columns;
  model.checks_ = std::move(checks);
  model.degeneracy_ = degeneracy.rows() != 0 ? std::move(degeneracy) : BitMatrix(0, model.positions_);
  model.build();
  return model;
}

void ClusterModel::build() {
  const std::size_t r = checks_.rows();
  const std::size_t n = positions_;

  auto check_weight = [&](std::size_t row) -> std::size_t {
    if (!pauli_) return checks_.row_weight(row);
    // H = (A_Z | A_X): the Pauli weight is the size of the combined support.
    return PauliOp::from_symplectic(checks_.row(row)).weight();
  };

  std::vector<std::size_t> weights(r);
  for (std::size_t i = 0; i < r; ++i) weights[i] = check_weight(i);
  order_.resize(r);
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return weights[a] < weights[b]; });
  max_check_weight_ = r == 0 ? 0 : *std::max_element(weights.begin(), weights.end());

  letters_ = pauli_ ? std::vector<Pauli>{Pauli::X, Pauli::Y, Pauli::Z} : std::vector<Pauli>{Pauli::X};

  // Column c of H in the sorted check order.
  std::vector<BitVector> sorted_columns;
  sorted_columns.reserve(checks_.cols());
  for (std::size_t c = 0; c < checks_.cols(); ++c) {
    BitVector col(r);
    for (std::size_t s = 0; s < r; ++s) {
      if (checks_.get(order_[s], c)) col.set(s);
    }
    sorted_columns.push_back(std::move(col));
  }

  term_syndromes_.assign(n * 4, BitVector(r));
  for (std::size_t j = 0; j < n; ++j) {
    if (pauli_) {
      // e = (v | u): X sets v_j, Z sets u_j, Y sets both.
      const BitVector& sx = sorted_columns[j];
      const BitVector& sz = sorted_columns[n + j];
      term_syndromes_[j * 4 + static_cast<std::size_t>(Pauli::X)] = sx;
      term_syndromes_[j * 4 + static_cast<std::size_t>(Pauli::Z)] = sz;
      term_syndromes_[j * 4 + static_cast<std::size_t>(Pauli::Y)] = sx ^ sz;
    } else {
      term_syndromes_[j * 4 + static_cast<std::size_t>(Pauli::X)] = sorted_columns[j];
    }
  }

  branches_.assign(r, {});
  for (std::size_t s = 0; s < r; ++s) {
    for (std::size_t j = 0; j < n; ++j) {
      for (Pauli letter : letters_) {
        if (term_syndromes_[j * 4 + static_cast<std::size_t>(letter)].get(s)) {
          branches_[s].push_back(ClusterEntry{static_cast<std::uint32_t>(j), letter});
        }
      }
    }
  }

  const BitMatrix rref = degeneracy_.row_reduced();
  for (std::size_t i = 0; i < rref.rows(); ++i) {
    degeneracy_basis_rows_.push_back(rref.row(i));
    degeneracy_pivots_.push_back(rref.row(i).first_set());
  }
}

const BitVector& ClusterModel::term_syndrome(std::size_t position, Pauli letter) const {
  return term_syndromes_[position * 4 + static_cast<std::size_t>(letter)];
}

BitVector ClusterModel::to_vector(const Cluster& cluster) const {
  BitVector v(pauli_ ? 2 * positions_ : positions_);
  for (const auto& e : cluster.entries()) {
    if (e.position >= positions_) throw ValidationError("cluster position out of range");
    const auto bits = static_cast<unsigned>(e.letter);
    if (pauli_) {
      if (bits & 1U) v.set(e.position);
      if (bits & 2U) v.set(positions_ + e.position);
    } else {
      if (e.letter != Pauli::X) throw ValidationError("binary sector clusters use a single letter");
      v.set(e.position);
    }
  }
  return v;
}

Cluster ClusterModel::from_vector(const BitVector& v) const {
  std::vector<ClusterEntry> entries;
  if (pauli_) {
    for (std::size_t j = 0; j < positions_; ++j) {
      const unsigned bits = (v.get(j) ? 1U : 0U) | (v.get(positions_ + j) ? 2U : 0U);
      if (bits != 0) entries.push_back(ClusterEntry{static_cast<std::uint32_t>(j), static_cast<Pauli>(bits)});
    }
  } else {
    for (std::size_t j : v.support()) entries.push_back(ClusterEntry{static_cast<std::uint32_t>(j), Pauli::X});
  }
  return Cluster(std::move(entries));
}

BitVector ClusterModel::syndrome(const Cluster& cluster) const {
  BitVector s(num_checks());
  for (const auto& e : cluster.entries()) s ^= term_syndrome(e.position, e.letter);
  return s;
}

bool ClusterModel::is_stabilizer_element(const Cluster& cluster) const {
  BitVector x = to_vector(cluster);
  for (std::size_t i = 0; i < degeneracy_basis_rows_.size(); ++i) {
    if (x.get(degeneracy_pivots_[i])) x ^= degeneracy_basis_rows_[i];
  }
  return x.is_zero();
}

BigCount ClusterModel::path_bound(std::size_t m) const {
  if (pauli_) return bound_Nm(positions_, max_check_weight_, m);
  return bound_Nm_css(positions_, max_check_weight_, m);
}

}  // namespace qbound
