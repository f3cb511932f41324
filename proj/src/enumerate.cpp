#include <omp.h>

#include <algorithm>
#include <atomic>
#include <unordered_set>

#include "qbound/clusters.hpp"
#include "qbound/errors.hpp"

namespace qbound {

namespace {

using ClusterSet = std::unordered_set<BitVector, BitVectorHash>;

/// Depth-first walk of the recursion tree below one seed term.
class SeedWalker {
 public:
  SeedWalker(const ClusterModel& model, std::size_t m_max, std::size_t max_stored, ClusterSet& sink,
             std::vector<std::uint64_t>& paths)
      : model_(model),
        m_max_(m_max),
        max_stored_(max_stored),
        sink_(sink),
        paths_(paths),
        syndrome_(model.num_checks()),
        used_(model.num_positions(), 0) {
    stack_.reserve(m_max);
  }

  void walk(ClusterEntry seed) {
    push(seed);
    descend();
    pop();
  }

 private:
  void push(ClusterEntry e) {
    stack_.push_back(e);
    used_[e.position] = 1;
    syndrome_ ^= model_.term_syndrome(e.position, e.letter);
  }

  void pop() {
    const ClusterEntry e = stack_.back();
    stack_.pop_back();
    used_[e.position] = 0;
    syndrome_ ^= model_.term_syndrome(e.position, e.letter);
  }

  void descend() {
    const std::size_t depth = stack_.size();
    ++paths_[depth - 1];
    const std::size_t unsatisfied = syndrome_.first_set();
    if (unsatisfied == syndrome_.size()) {
      record();
      return;
    }
    if (depth == m_max_) return;
    for (const ClusterEntry& e : model_.branches(unsatisfied)) {
      if (used_[e.position] != 0) continue;
      push(e);
      descend();
      pop();
    }
  }

  void record() {
    BitVector key(model_.is_pauli() ? 2 * model_.num_positions() : model_.num_positions());
    for (const auto& e : stack_) {
      const auto bits = static_cast<unsigned>(e.letter);
      if (bits & 1U) key.set(e.position);
      if (bits & 2U) key.set(model_.num_positions() + e.position);
    }
    if (sink_.insert(std::move(key)).second && sink_.size() > max_stored_) {
      // A private set is a subset of the merged one, so overflowing here
      // means the merged set overflows too.
      throw ResourceLimitError("cluster store exceeded the cap of " + std::to_string(max_stored_) +
                               " distinct clusters");
    }
  }

  const ClusterModel& model_;
  std::size_t m_max_;
  std::size_t max_stored_;
  ClusterSet& sink_;
  std::vector<std::uint64_t>& paths_;
  BitVector syndrome_;
  std::vector<unsigned char> used_;
  std::vector<ClusterEntry> stack_;
};

void check_options(const ClusterModel& model, std::size_t m_max) {
  if (m_max < 1) throw ValidationError("m_max must be at least 1");
  if (model.num_positions() == 0) throw ValidationError("sector has no positions");
}

}  // namespace

EnumerationResult enumerate_undetectable(const ClusterModel& model, const EnumerationOptions& options) {
  check_options(model, options.m_max);
  const int workers = options.workers > 0 ? options.workers : omp_get_max_threads();

  std::vector<ClusterEntry> seeds;
  for (std::size_t j = 0; j < model.num_positions(); ++j) {
    for (Pauli letter : model.letters()) seeds.push_back(ClusterEntry{static_cast<std::uint32_t>(j), letter});
  }

  std::vector<ClusterSet> sets(static_cast<std::size_t>(workers));
  std::vector<std::vector<std::uint64_t>> paths(static_cast<std::size_t>(workers),
                                                std::vector<std::uint64_t>(options.m_max, 0));
  std::atomic<bool> overflow{false};
  const auto num_seeds = static_cast<std::int64_t>(seeds.size());

#pragma omp parallel num_threads(workers)
  {
    const auto tid = static_cast<std::size_t>(omp_get_thread_num());
    SeedWalker walker(model, options.m_max, options.max_stored, sets[tid], paths[tid]);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t s = 0; s < num_seeds; ++s) {
      if (overflow.load(std::memory_order_relaxed)) continue;
      try {
        walker.walk(seeds[static_cast<std::size_t>(s)]);
      } catch (const ResourceLimitError&) {
        overflow.store(true, std::memory_order_relaxed);
      }
    }
  }
  if (overflow.load()) {
    throw ResourceLimitError("cluster store exceeded the cap of " + std::to_string(options.max_stored) +
                             " distinct clusters");
  }

  ClusterSet merged = std::move(sets[0]);
  for (std::size_t t = 1; t < sets.size(); ++t) {
    merged.merge(sets[t]);
    sets[t].clear();
  }
  if (merged.size() > options.max_stored) {
    throw ResourceLimitError("cluster store exceeded the cap of " + std::to_string(options.max_stored) +
                             " distinct clusters");
  }

  EnumerationResult out;
  out.paths.assign(options.m_max, 0);
  for (const auto& p : paths) {
    for (std::size_t d = 0; d < p.size(); ++d) out.paths[d] += p[d];
  }
  out.clusters.reserve(merged.size());
  for (const auto& key : merged) out.clusters.push_back(model.from_vector(key));
  std::sort(out.clusters.begin(), out.clusters.end());
  return out;
}

ClusterCensus classify(const ClusterModel& model, const EnumerationResult& found, int workers) {
  const std::size_t m_max = found.paths.size();
  const int threads = workers > 0 ? workers : omp_get_max_threads();
  const auto count = static_cast<std::int64_t>(found.clusters.size());
  std::vector<unsigned char> irreducible(found.clusters.size(), 0);
  std::vector<unsigned char> stabilizer(found.clusters.size(), 0);

#pragma omp parallel for num_threads(threads) schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) {
    const Cluster& c = found.clusters[static_cast<std::size_t>(i)];
    irreducible[static_cast<std::size_t>(i)] = is_irreducible(model, c) ? 1 : 0;
    stabilizer[static_cast<std::size_t>(i)] = model.is_stabilizer_element(c) ? 1 : 0;
  }

  ClusterCensus census;
  census.kind = model.kind();
  census.m_max = m_max;
  census.rows.resize(m_max);
  for (std::size_t m = 1; m <= m_max; ++m) {
    census.rows[m - 1].m = m;
    census.rows[m - 1].paths = found.paths[m - 1];
  }

  const bool has_split = model.qubit_columns() < model.num_positions();
  std::vector<SplitRow> split;
  if (has_split) {
    for (std::size_t m = 1; m <= m_max; ++m) {
      for (std::size_t mq = 0; mq <= m; ++mq) split.push_back(SplitRow{m, mq, 0, 0});
    }
  }
  auto split_index = [](std::size_t m, std::size_t mq) { return (m - 1) * (m + 2) / 2 + mq; };

  for (std::size_t i = 0; i < found.clusters.size(); ++i) {
    const Cluster& c = found.clusters[i];
    CensusRow& row = census.rows.at(c.weight() - 1);
    ++row.distinct;
    if (irreducible[i] == 0) continue;
    ++row.irreducible;
    if (stabilizer[i] == 0) ++row.irreducible_nonstabilizer;
    if (has_split) {
      std::size_t mq = 0;
      for (const auto& e : c.entries()) mq += e.position < model.qubit_columns() ? 1 : 0;
      SplitRow& s = split[split_index(c.weight(), mq)];
      ++s.irreducible;
      if (stabilizer[i] == 0) ++s.irreducible_nonstabilizer;
    }
  }
  census.split = std::move(split);
  return census;
}

ClusterCensus enumerate_clusters(const ClusterModel& model, const EnumerationOptions& options) {
  return classify(model, enumerate_undetectable(model, options), options.workers);
}

}  // namespace qbound
