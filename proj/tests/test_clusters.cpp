#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles/oracles.hpp"
#include "qbound/clusters.hpp"
#include "qbound/errors.hpp"

using namespace qbound;

namespace {

ClusterCensus census_of(const ClusterModel& model, std::size_t m_max, int workers = 0) {
  EnumerationOptions options;
  options.m_max = m_max;
  options.workers = workers;
  return enumerate_clusters(model, options);
}

StabilizerCode five_qubit_code() {
  const std::string base = "XZZXI";
  BitMatrix g(4, 10);
  for (std::size_t s = 0; s < 4; ++s) {
    PauliOp op(5);
    for (std::size_t q = 0; q < 5; ++q) {
      const char ch = base[(q + 5 - s) % 5];
      op.set(q, ch == 'X' ? Pauli::X : ch == 'Z' ? Pauli::Z : Pauli::I);
    }
    const BitVector row = op.symplectic();
    for (std::size_t c = 0; c < 10; ++c) g.set(s, c, row.get(c));
  }
  return StabilizerCode(g, 5, 3);
}

BitMatrix permute_columns(const BitMatrix& m, const std::vector<std::size_t>& perm) {
  BitMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, perm[c], m.get(r, c));
  }
  return out;
}

BitMatrix permute_rows(const BitMatrix& m, const std::vector<std::size_t>& perm) {
  std::vector<BitVector> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows[perm[r]] = m.row(r);
  return BitMatrix::from_rows(rows, m.cols());
}

}  // namespace

TEST(Cluster, CanonicalOrderAndValidation) {
  const Cluster c({{3, Pauli::X}, {1, Pauli::Z}});
  EXPECT_EQ(c.entries().front().position, 1u);
  EXPECT_THROW(Cluster({{1, Pauli::X}, {1, Pauli::Z}}), ValidationError);
  EXPECT_THROW(Cluster({{1, Pauli::I}}), ValidationError);
}

TEST(ClusterModel, ToricLoopsAtWeightThree) {
  const ClusterCensus census = census_of(ClusterModel::css(toric_code(3), SectorKind::kXType), 6);
  EXPECT_EQ(census.at(1).distinct, 0u);
  EXPECT_EQ(census.at(2).distinct, 0u);
  EXPECT_EQ(census.at(3).irreducible_nonstabilizer, 6u);
  EXPECT_EQ(census.at(4).irreducible, 9u);  // plaquettes
  EXPECT_EQ(census.at(4).irreducible_nonstabilizer, 0u);
}

TEST(ClusterModel, ToricTwoByTwo) {
  const ClusterCensus x = census_of(ClusterModel::css(toric_code(2), SectorKind::kXType), 4);
  EXPECT_EQ(x.at(2).irreducible_nonstabilizer, 4u);
  const ClusterCensus full = census_of(ClusterModel::full_pauli(toric_code(2).stabilizer()), 2);
  EXPECT_EQ(full.at(2).irreducible_nonstabilizer, 8u);
}

TEST(ClusterModel, ToricMatchesSimpleCycleOracle) {
  for (std::size_t L : {2u, 3u, 4u}) {
    const std::size_t m_max = L == 4 ? 8 : 6;
    const ClusterCensus census = census_of(ClusterModel::css(toric_code(L), SectorKind::kXType), m_max);
    for (std::size_t m = 1; m <= m_max; ++m) {
      const oracles::CycleCount cycles = oracles::toric_simple_cycles(L, m);
      EXPECT_EQ(census.at(m).irreducible, cycles.all) << "L=" << L << " m=" << m;
      EXPECT_EQ(census.at(m).irreducible_nonstabilizer, cycles.nontrivial) << "L=" << L << " m=" << m;
    }
  }
}

TEST(ClusterModel, ZSectorMirrorsXSectorOnToric) {
  const CssCode code = toric_code(3);
  const ClusterCensus x = census_of(ClusterModel::css(code, SectorKind::kXType), 6);
  const ClusterCensus z = census_of(ClusterModel::css(code, SectorKind::kZType), 6);
  for (std::size_t m = 1; m <= 6; ++m) {
    EXPECT_EQ(x.at(m).irreducible, z.at(m).irreducible);
    EXPECT_EQ(x.at(m).irreducible_nonstabilizer, z.at(m).irreducible_nonstabilizer);
  }
}

TEST(ClusterModel, FiveQubitCodeLogicals) {
  // Weight-3 normalizer elements of the [[5,1,3]] code: 30, none in the
  // stabilizer (its minimum weight is 4).
  const ClusterCensus census = census_of(ClusterModel::full_pauli(five_qubit_code()), 4);
  EXPECT_EQ(census.at(1).irreducible_nonstabilizer, 0u);
  EXPECT_EQ(census.at(2).irreducible_nonstabilizer, 0u);
  EXPECT_EQ(census.at(3).irreducible_nonstabilizer, 30u);
  EXPECT_EQ(census, brute_force_census(ClusterModel::full_pauli(five_qubit_code()), {4, 1e8}));
}

TEST(ClusterModel, MatchesBruteForceOnRandomCss) {
  std::mt19937_64 rng(1234);
  for (int t = 0; t < 6; ++t) {
    const CssCode code = oracles::random_css(8 + rng() % 5, rng);
    for (SectorKind kind : {SectorKind::kXType, SectorKind::kZType}) {
      const ClusterModel model = ClusterModel::css(code, kind);
      EXPECT_EQ(census_of(model, 5), brute_force_census(model, {5, 1e8})) << "trial " << t;
    }
  }
}

TEST(ClusterModel, FullPauliMatchesBruteForce) {
  const ClusterModel model = ClusterModel::full_pauli(toric_code(2).stabilizer());
  EXPECT_EQ(census_of(model, 4), brute_force_census(model, {4, 1e8}));
}

TEST(ClusterModel, FtSectorMatchesBruteForce) {
  const FtCode ft = ft_extend(css_sector(toric_code(2), CssSector::kZErrors), 2);
  const ClusterModel model = ClusterModel::ft_binary(ft);
  const ClusterCensus census = census_of(model, 5);
  EXPECT_EQ(census, brute_force_census(model, {5, 1e8}));
  ASSERT_FALSE(census.split.empty());
  for (std::size_t m = 1; m <= 5; ++m) {
    std::uint64_t total = 0;
    for (const SplitRow& s : census.split) {
      if (s.m == m) total += s.irreducible;
    }
    EXPECT_EQ(total, census.at(m).irreducible);
  }
}

TEST(ClusterModel, ParallelMatchesReference) {
  const std::vector<ClusterModel> models = {
      ClusterModel::css(toric_code(3), SectorKind::kXType),
      ClusterModel::full_pauli(toric_code(2).stabilizer()),
      ClusterModel::ft_binary(ft_extend(css_sector(toric_code(2), CssSector::kXErrors), 3)),
  };
  for (const ClusterModel& model : models) {
    const EnumerationResult ref = reference::enumerate_undetectable(model, 5);
    for (int workers : {1, 2, 3, 8}) {
      const EnumerationResult par = enumerate_undetectable(model, {5, 10'000'000, workers});
      EXPECT_EQ(par.paths, ref.paths);
      EXPECT_EQ(par.clusters, ref.clusters);
    }
    EXPECT_EQ(census_of(model, 5, 4), reference::enumerate_clusters(model, 5));
  }
}

TEST(ClusterModel, CensusInvariantUnderQubitRelabeling) {
  const CssCode code = toric_code(3);
  std::vector<std::size_t> perm(code.n());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(6);
  std::shuffle(perm.begin(), perm.end(), rng);
  const CssCode relabeled(permute_columns(code.gx(), perm), permute_columns(code.gz(), perm));
  EXPECT_EQ(census_of(ClusterModel::css(code, SectorKind::kXType), 6),
            census_of(ClusterModel::css(relabeled, SectorKind::kXType), 6));
}

TEST(ClusterModel, IrreducibleCountsInvariantUnderRowPermutation) {
  // Path counts depend on which check the recursion picks; the set of
  // irreducible clusters does not.
  const CssCode code = toric_code(3);
  std::vector<std::size_t> rx(code.gx().rows()), rz(code.gz().rows());
  std::iota(rx.begin(), rx.end(), 0);
  std::iota(rz.begin(), rz.end(), 0);
  std::mt19937_64 rng(7);
  std::shuffle(rx.begin(), rx.end(), rng);
  std::shuffle(rz.begin(), rz.end(), rng);
  const CssCode shuffled(permute_rows(code.gx(), rx), permute_rows(code.gz(), rz));
  const ClusterCensus a = census_of(ClusterModel::css(code, SectorKind::kXType), 6);
  const ClusterCensus b = census_of(ClusterModel::css(shuffled, SectorKind::kXType), 6);
  for (std::size_t m = 1; m <= 6; ++m) {
    EXPECT_EQ(a.at(m).irreducible, b.at(m).irreducible);
    EXPECT_EQ(a.at(m).irreducible_nonstabilizer, b.at(m).irreducible_nonstabilizer);
  }
}

TEST(ClusterModel, PathsWithinBound) {
  const std::vector<ClusterModel> models = {
      ClusterModel::css(toric_code(4), SectorKind::kXType),
      ClusterModel::full_pauli(five_qubit_code()),
      ClusterModel::full_pauli(toric_code(2).stabilizer()),
  };
  for (const ClusterModel& model : models) {
    const ClusterCensus census = census_of(model, 5);
    for (const CensusRow& row : census.rows) {
      EXPECT_LE(BigCount(row.paths), model.path_bound(row.m));
      EXPECT_LE(BigCount(row.irreducible), model.path_bound(row.m));
    }
  }
}

TEST(ClusterModel, CountsAreNested) {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 4; ++t) {
    const ClusterModel model = ClusterModel::css(oracles::random_css(12, rng), SectorKind::kXType);
    for (const CensusRow& row : census_of(model, 6).rows) {
      EXPECT_LE(row.irreducible_nonstabilizer, row.irreducible);
      EXPECT_LE(row.irreducible, row.distinct);
      EXPECT_LE(row.distinct, row.paths);
    }
  }
}

TEST(ClusterModel, ResourceCapThrows) {
  const ClusterModel model = ClusterModel::css(toric_code(4), SectorKind::kXType);
  EXPECT_THROW(enumerate_undetectable(model, {8, 5, 2}), ResourceLimitError);
  EXPECT_THROW(reference::enumerate_undetectable(model, 8, 5), ResourceLimitError);
}

TEST(Irreducible, KernelTestAgreesWithSubsetScan) {
  const ClusterModel model = ClusterModel::css(toric_code(3), SectorKind::kXType);
  const EnumerationResult found = enumerate_undetectable(model, {7, 10'000'000, 0});
  ASSERT_FALSE(found.clusters.empty());
  for (const Cluster& c : found.clusters) {
    EXPECT_EQ(is_irreducible(model, c), is_irreducible_bruteforce(model, c));
  }
}

TEST(Irreducible, StabilizerCodeOverload) {
  const StabilizerCode code = five_qubit_code();
  const ClusterModel model = ClusterModel::full_pauli(code);
  auto as_cluster = [](const PauliOp& op) {
    std::vector<ClusterEntry> entries;
    for (std::size_t q = 0; q < op.num_qubits(); ++q) {
      if (op.at(q) != Pauli::I) entries.push_back({static_cast<std::uint32_t>(q), op.at(q)});
    }
    return Cluster(entries);
  };
  EXPECT_TRUE(is_irreducible(code, code.generator(0)));
  for (const PauliOp& op : {PauliOp::from_string("XXXXX"), PauliOp::from_string("ZZZZZ"),
                            code.generator(0) * code.generator(2), code.generator(1)}) {
    EXPECT_EQ(is_irreducible(code, op), is_irreducible_bruteforce(model, as_cluster(op))) << op.to_string();
  }
  EXPECT_THROW(is_irreducible(code, PauliOp::from_string("XIIII")), ValidationError);
}

TEST(Bounds, KnownValues) {
  EXPECT_EQ(bound_Nm(18, 4, 1), 54);
  EXPECT_EQ(bound_Nm(18, 4, 3), 54 * 36);
  EXPECT_EQ(bound_Nm_css(18, 4, 4), 18 * 27);
  EXPECT_EQ(bound_Nm_ft(8, 4, 4, 3, 1), (24 + 4) * 2 * 4 * 2);
  EXPECT_EQ(bound_Nm_ft(8, 4, 4, 3, 3), 0);
  EXPECT_EQ(bound_Nm(1000, 10, 20).str(), (BigCount(3000) * boost::multiprecision::pow(BigCount(18), 19)).str());
}
