// Straightforward single-threaded cluster recursion. It follows the
// textbook description step by step (unpacked syndrome, linear scan for
// the lowest unsatisfied check, ordered set of canonical clusters) and
// serves as the baseline the OpenMP kernel is tested and benchmarked
// against.

#include <set>

#include "qbound/clusters.hpp"
#include "qbound/errors.hpp"

namespace qbound::reference {

namespace {

struct State {
  const ClusterModel& model;
  std::size_t m_max;
  std::size_t max_stored;
  std::vector<unsigned char> syndrome;
  std::vector<bool> used;
  std::vector<ClusterEntry> terms;
  std::set<Cluster> found;
  std::vector<std::uint64_t> paths;

  void toggle(const ClusterEntry& e) {
    const BitVector& col = model.term_syndrome(e.position, e.letter);
    for (std::size_t i = 0; i < syndrome.size(); ++i) syndrome[i] ^= col.get(i) ? 1 : 0;
  }

  void recurse() {
    ++paths[terms.size() - 1];
    std::size_t lowest = syndrome.size();
    for (std::size_t i = 0; i < syndrome.size(); ++i) {
      if (syndrome[i] != 0) {
        lowest = i;
        break;
      }
    }
    if (lowest == syndrome.size()) {
      found.insert(Cluster(terms));
      if (found.size() > max_stored) throw ResourceLimitError("cluster store exceeded its cap");
      return;
    }
    if (terms.size() == m_max) return;

    // Every unused position in the check's support, with each letter that
    // differs from the check's own letter there.
    for (std::size_t j = 0; j < model.num_positions(); ++j) {
      if (used[j]) continue;
      for (Pauli letter : model.letters()) {
        if (!model.term_syndrome(j, letter).get(lowest)) continue;
        const ClusterEntry e{static_cast<std::uint32_t>(j), letter};
        terms.push_back(e);
        used[j] = true;
        toggle(e);
        recurse();
        toggle(e);
        used[j] = false;
        terms.pop_back();
      }
    }
  }
};

}  // namespace

EnumerationResult enumerate_undetectable(const ClusterModel& model, std::size_t m_max, std::size_t max_stored) {
  if (m_max < 1) throw ValidationError("m_max must be at least 1");
  State st{model, m_max, max_stored, std::vector<unsigned char>(model.num_checks(), 0),
           std::vector<bool>(model.num_positions(), false), {}, {}, std::vector<std::uint64_t>(m_max, 0)};
  for (std::size_t j = 0; j < model.num_positions(); ++j) {
    for (Pauli letter : model.letters()) {
      const ClusterEntry seed{static_cast<std::uint32_t>(j), letter};
      st.terms.push_back(seed);
      st.used[j] = true;
      st.toggle(seed);
      st.recurse();
      st.toggle(seed);
      st.used[j] = false;
      st.terms.pop_back();
    }
  }
  EnumerationResult out;
  out.clusters.assign(st.found.begin(), st.found.end());
  out.paths = std::move(st.paths);
  return out;
}

ClusterCensus enumerate_clusters(const ClusterModel& model, std::size_t m_max, std::size_t max_stored) {
  return classify(model, enumerate_undetectable(model, m_max, max_stored), 1);
}

}  // namespace qbound::reference
