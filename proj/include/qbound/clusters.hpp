#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qbound/bitmatrix.hpp"
#include "qbound/codes.hpp"
#include "qbound/ft_code.hpp"
#include "qbound/pauli.hpp"

namespace qbound {

using BigCount = boost::multiprecision::cpp_int;

enum class SectorKind { kFullPauli, kXType, kZType, kFtBinary };

std::string to_string(SectorKind kind);
SectorKind parse_sector_kind(const std::string& name);

/// One (position, single-qubit Pauli) term of a cluster. Binary sectors
/// use Pauli::X to mean "bit set".
struct ClusterEntry {
  std::uint32_t position = 0;
  Pauli letter = Pauli::X;
  friend bool operator==(const ClusterEntry&, const ClusterEntry&) = default;
};

/// An operator given by its non-identity terms, kept sorted by position.
/// The sorted entry list is the canonical form.
class Cluster {
 public:
  Cluster() = default;
  explicit Cluster(std::vector<ClusterEntry> entries);

  std::size_t weight() const { return entries_.size(); }
  const std::vector<ClusterEntry>& entries() const { return entries_; }

  friend bool operator==(const Cluster&, const Cluster&) = default;
  friend auto operator<=>(const Cluster& a, const Cluster& b) {
    if (a.weight() != b.weight()) return a.weight() <=> b.weight();
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
      if (a.entries_[i].position != b.entries_[i].position) return a.entries_[i].position <=> b.entries_[i].position;
      if (a.entries_[i].letter != b.entries_[i].letter) return a.entries_[i].letter <=> b.entries_[i].letter;
    }
    return std::strong_ordering::equal;
  }

 private:
  std::vector<ClusterEntry> entries_;
};

/// Everything the cluster recursion needs about one error sector: the
/// checks in weight-sorted order (stable on the original row index), the
/// syndrome column of every single-position term, and the degeneracy
/// matrix used to separate stabilizer members from logical operators.
class ClusterModel {
 public:
  static ClusterModel full_pauli(const StabilizerCode& code);
  /// X-type clusters are checked by G_Z and are trivial modulo G_X; Z-type
  /// is the mirror image.
  static ClusterModel css(const CssCode& code, SectorKind kind);
  static ClusterModel ft_binary(const FtCode& code);
  /// Generic binary sector. Columns at index >= qubit_columns are reported
  /// as syndrome-error positions in the census split.
  static ClusterModel binary(BitMatrix checks, BitMatrix degeneracy, std::size_t qubit_columns,
                             SectorKind kind = SectorKind::kXType);

  SectorKind kind() const { return kind_; }
  bool is_pauli() const { return pauli_; }
  std::size_t num_positions() const { return positions_; }
  /// 3 for full-Pauli sectors, 1 for binary sectors.
  std::size_t letters_per_position() const { return pauli_ ? 3 : 1; }
  std::size_t num_checks() const { return order_.size(); }
  std::size_t qubit_columns() const { return qubit_columns_; }
  std::size_t max_check_weight() const { return max_check_weight_; }

  /// Checks in their original row order; columns are (v | u) for Pauli
  /// sectors and plain bits otherwise.
  const BitMatrix& check_matrix() const { return checks_; }
  const BitMatrix& degeneracy_matrix() const { return degeneracy_; }
  /// Sorted position -> original check row.
  const std::vector<std::size_t>& check_order() const { return order_; }

  /// Letters tried at every seed position, in a fixed order.
  const std::vector<Pauli>& letters() const { return letters_; }
  /// Syndrome over the sorted checks of a single term.
  const BitVector& term_syndrome(std::size_t position, Pauli letter) const;
  /// Terms that flip sorted check i: each support position of the check
  /// paired with every letter that anticommutes with the check there.
  const std::vector<ClusterEntry>& branches(std::size_t sorted_check) const { return branches_[sorted_check]; }

  /// Binary form of a cluster in the degeneracy-matrix column space.
  BitVector to_vector(const Cluster& cluster) const;
  Cluster from_vector(const BitVector& v) const;

  /// Syndrome over the sorted checks.
  BitVector syndrome(const Cluster& cluster) const;
  bool is_stabilizer_element(const Cluster& cluster) const;

  /// Upper bound on recursion paths of depth m: 3n[2(w-1)]^(m-1) for
  /// Pauli sectors, N(w-1)^(m-1) for binary ones, w = max check weight.
  BigCount path_bound(std::size_t m) const;

 private:
  ClusterModel() = default;
  void build();

  SectorKind kind_ = SectorKind::kFullPauli;
  bool pauli_ = false;
  std::size_t positions_ = 0;
  std::size_t qubit_columns_ = 0;
  std::size_t max_check_weight_ = 0;
  BitMatrix checks_;
  BitMatrix degeneracy_;
  std::vector<std::size_t> order_;
  std::vector<Pauli> letters_;
  std::vector<BitVector> term_syndromes_;
  std::vector<std::vector<ClusterEntry>> branches_;
  std::vector<BitVector> degeneracy_basis_rows_;
  std::vector<std::size_t> degeneracy_pivots_;
};

struct CensusRow {
  std::size_t m = 0;
  std::uint64_t distinct = 0;
  std::uint64_t irreducible = 0;
  std::uint64_t irreducible_nonstabilizer = 0;
  std::uint64_t paths = 0;
  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

/// Irreducible counts of a space-time sector split by the number of
/// qubit-error positions m_q.
struct SplitRow {
  std::size_t m = 0;
  std::size_t m_q = 0;
  std::uint64_t irreducible = 0;
  std::uint64_t irreducible_nonstabilizer = 0;
  friend bool operator==(const SplitRow&, const SplitRow&) = default;
};

struct ClusterCensus {
  SectorKind kind = SectorKind::kFullPauli;
  std::size_t m_max = 0;
  /// rows[m - 1] describes weight m.
  std::vector<CensusRow> rows;
  /// Only filled for sectors with syndrome-error columns.
  std::vector<SplitRow> split;

  const CensusRow& at(std::size_t m) const { return rows.at(m - 1); }
  friend bool operator==(const ClusterCensus&, const ClusterCensus&) = default;
};

struct EnumerationOptions {
  std::size_t m_max = 1;
  /// Cap on distinct stored clusters; exceeding it throws ResourceLimitError.
  std::size_t max_stored = 10'000'000;
  /// 0 selects the OpenMP default.
  int workers = 0;
};

/// Distinct undetectable clusters found by the recursion plus the number
/// of recursion nodes at each depth.
struct EnumerationResult {
  std::vector<Cluster> clusters;  ///< Sorted by (weight, entries).
  std::vector<std::uint64_t> paths;  ///< paths[m - 1] = nodes at depth m.
};

/// Parallel over seed terms; every worker keeps a private cluster set and
/// path tally, merged after the loop. Output does not depend on `workers`.
EnumerationResult enumerate_undetectable(const ClusterModel& model, const EnumerationOptions& options);

/// Classifies every distinct cluster and tallies the census.
ClusterCensus classify(const ClusterModel& model, const EnumerationResult& found, int workers = 0);

ClusterCensus enumerate_clusters(const ClusterModel& model, const EnumerationOptions& options);

namespace reference {

/// Single-threaded recursion kept as the baseline for the parallel kernel.
EnumerationResult enumerate_undetectable(const ClusterModel& model, std::size_t m_max,
                                         std::size_t max_stored = 10'000'000);
ClusterCensus enumerate_clusters(const ClusterModel& model, std::size_t m_max,
                                 std::size_t max_stored = 10'000'000);

}  // namespace reference

/// Definition-1 test via linear algebra: the per-term syndrome columns of
/// an undetectable cluster always have the all-ones vector in their
/// kernel; the cluster is irreducible iff the kernel has dimension 1.
bool is_irreducible(const ClusterModel& model, const Cluster& cluster);
bool is_irreducible(const StabilizerCode& code, const PauliOp& op);

/// Same predicate by scanning all proper nonempty sub-supports for a
/// zero-syndrome restriction. Weight is capped at 20.
bool is_irreducible_bruteforce(const ClusterModel& model, const Cluster& cluster);

struct BruteForceOptions {
  std::size_t m_max = 1;
  /// Guard on sum_m C(N, m) * letters^m.
  double max_operators = 1e8;
};

/// Exhaustive census over every operator of weight <= m_max. Irreducibility
/// comes from the subset scan, stabilizer membership from a rank test, and
/// recursion reachability and path counts from replaying the selection
/// rule on each operator's own terms. Requires at most 64 checks.
ClusterCensus brute_force_census(const ClusterModel& model, const BruteForceOptions& options);

/// 3n[2(w-1)]^(m-1).
BigCount bound_Nm(std::size_t n, std::size_t w, std::size_t m);
/// n(w_opposite-1)^(m-1).
BigCount bound_Nm_css(std::size_t n, std::size_t w_opposite, std::size_t m);
/// (3n+r) C(m-1, m_q) w^m_q 2^(m-m_q-1); zero when m_q = m.
BigCount bound_Nm_ft(std::size_t n, std::size_t r, std::size_t w, std::size_t m, std::size_t m_q);

}  // namespace qbound
