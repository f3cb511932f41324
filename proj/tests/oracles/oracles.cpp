#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace oracles {

namespace {

// Alternative configuration at least as likely as the original. A relative
// slack absorbs rounding when the two products tie mathematically.
bool at_least_as_likely(double alt, double orig) { return alt >= orig * (1.0 - 1e-12); }

}  // namespace

double literal_bad_css(std::size_t m, double y, double p) {
  // per position: 0 erased, 1 clean, 2 X error
  std::vector<int> state(m, 0);
  double total = 0;
  while (true) {
    double prob = 1;
    double orig = 1;
    double alt = 1;
    for (int s : state) {
      if (s == 0) {
        prob *= y;
      } else if (s == 1) {
        prob *= (1 - y) * (1 - p);
        orig *= 1 - p;
        alt *= p;
      } else {
        prob *= (1 - y) * p;
        orig *= p;
        alt *= 1 - p;
      }
    }
    if (at_least_as_likely(alt, orig)) total += prob;
    std::size_t i = 0;
    while (i < m && state[i] == 2) state[i++] = 0;
    if (i == m) break;
    ++state[i];
  }
  return total;
}

double literal_bad_depol(std::size_t m, double y, double p, std::uint64_t letter_seed) {
  // Cluster letters as 2-bit (x, z) codes, drawn at random: the result must
  // not depend on them.
  std::mt19937_64 rng(letter_seed);
  std::vector<int> cluster(m);
  for (auto& c : cluster) c = 1 + static_cast<int>(rng() % 3);

  auto single = [p](int pauli) { return pauli == 0 ? 1 - p : p / 3; };
  // per position: 0..3 error Pauli on a kept qubit, 4 erased
  std::vector<int> state(m, 0);
  double total = 0;
  while (true) {
    double prob = 1;
    double orig = 1;
    double alt = 1;
    for (std::size_t i = 0; i < m; ++i) {
      if (state[i] == 4) {
        prob *= y;
        continue;
      }
      prob *= (1 - y) * single(state[i]);
      orig *= single(state[i]);
      alt *= single(state[i] ^ cluster[i]);
    }
    if (at_least_as_likely(alt, orig)) total += prob;
    std::size_t i = 0;
    while (i < m && state[i] == 4) state[i++] = 0;
    if (i == m) break;
    ++state[i];
  }
  return total;
}

double literal_bad_ft(std::size_t m, std::size_t m_q, double p, double q) {
  if (m > 30) throw std::invalid_argument("literal_bad_ft: m too large");
  double total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    double orig = 1;
    double alt = 1;
    for (std::size_t i = 0; i < m; ++i) {
      const double rate = i < m_q ? p : q;
      const bool flipped = (mask >> i) & 1;
      orig *= flipped ? rate : 1 - rate;
      alt *= flipped ? 1 - rate : rate;
    }
    if (at_least_as_likely(alt, orig)) total += orig;
  }
  return total;
}

CycleCount toric_simple_cycles(std::size_t L, std::size_t m) {
  const std::size_t nv = L * L;
  struct Edge {
    std::size_t a, b;
    bool seam_x, seam_y;
  };
  std::vector<Edge> edges;
  for (std::size_t y = 0; y < L; ++y) {
    for (std::size_t x = 0; x < L; ++x) edges.push_back({y * L + x, y * L + (x + 1) % L, x == L - 1, false});
  }
  for (std::size_t y = 0; y < L; ++y) {
    for (std::size_t x = 0; x < L; ++x) edges.push_back({y * L + x, ((y + 1) % L) * L + x, false, y == L - 1});
  }
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(nv);  // (edge, other end)
  for (std::size_t e = 0; e < edges.size(); ++e) {
    adj[edges[e].a].push_back({e, edges[e].b});
    adj[edges[e].b].push_back({e, edges[e].a});
  }

  std::set<std::vector<std::size_t>> cycles;
  std::vector<std::size_t> path;
  std::vector<bool> on_path(nv, false);
  // Walks from the cycle's smallest vertex s through larger vertices only.
  auto dfs = [&](auto&& self, std::size_t s, std::size_t v) -> void {
    for (const auto& [e, u] : adj[v]) {
      if (std::find(path.begin(), path.end(), e) != path.end()) continue;
      if (u == s && path.size() + 1 == m) {
        std::vector<std::size_t> c = path;
        c.push_back(e);
        std::sort(c.begin(), c.end());
        cycles.insert(std::move(c));
        continue;
      }
      if (u <= s || on_path[u] || path.size() + 1 >= m) continue;
      on_path[u] = true;
      path.push_back(e);
      self(self, s, u);
      path.pop_back();
      on_path[u] = false;
    }
  };
  for (std::size_t s = 0; s < nv; ++s) {
    on_path[s] = true;
    dfs(dfs, s, s);
    on_path[s] = false;
  }

  CycleCount out;
  for (const auto& c : cycles) {
    bool wx = false;
    bool wy = false;
    for (std::size_t e : c) {
      wx ^= edges[e].seam_x;
      wy ^= edges[e].seam_y;
    }
    ++out.all;
    if (wx || wy) ++out.nontrivial;
  }
  return out;
}

qbound::CssCode random_css(std::size_t n, std::mt19937_64& rng) {
  using qbound::BitMatrix;
  using qbound::BitVector;
  auto pick = [&rng](std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
  };
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const std::size_t rx = pick(2, 4);
    BitMatrix gx(rx, n);
    for (std::size_t r = 0; r < rx; ++r) {
      const std::size_t wt = pick(2, 4);
      while (gx.row_weight(r) < wt) gx.set(r, pick(0, n - 1));
    }
    const std::vector<BitVector> kernel = gx.kernel_basis();
    if (kernel.size() < 2) continue;
    const std::size_t rz = pick(2, 4);
    std::vector<BitVector> zrows;
    for (int tries = 0; zrows.size() < rz && tries < 100; ++tries) {
      BitVector v(n);
      const std::size_t parts = pick(1, 2);
      for (std::size_t i = 0; i < parts; ++i) v ^= kernel[pick(0, kernel.size() - 1)];
      if (v.is_zero() || v.weight() > 6) continue;
      zrows.push_back(v);
    }
    if (zrows.size() < 2) continue;
    qbound::CssCode code(gx, BitMatrix::from_rows(zrows, n));
    if (code.k() >= 1) return code;
  }
  throw std::runtime_error("random_css: no code found");
}

std::size_t sector_distance(const qbound::BitMatrix& checks, const qbound::BitMatrix& degeneracy, std::size_t cap) {
  const std::size_t n = checks.cols();
  if (n > 64 || checks.rows() > 64) throw std::invalid_argument("sector_distance: too large");
  std::vector<std::uint64_t> column_masks(n, 0);
  for (std::size_t r = 0; r < checks.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (checks.get(r, c)) column_masks[c] |= std::uint64_t{1} << r;
    }
  }
  // xor basis of the degeneracy row space, one vector per leading bit
  std::array<std::uint64_t, 64> basis{};
  auto reduce = [&basis](std::uint64_t v) {
    for (int b = 63; b >= 0; --b) {
      if (((v >> b) & 1) && basis[static_cast<std::size_t>(b)]) v ^= basis[static_cast<std::size_t>(b)];
    }
    return v;
  };
  for (std::size_t r = 0; r < degeneracy.rows(); ++r) {
    std::uint64_t v = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (degeneracy.get(r, c)) v |= std::uint64_t{1} << c;
    }
    v = reduce(v);
    if (v) basis[static_cast<std::size_t>(63 - __builtin_clzll(v))] = v;
  }

  for (std::size_t w = 1; w <= std::min(cap, n); ++w) {
    std::vector<std::size_t> idx(w);
    for (std::size_t i = 0; i < w; ++i) idx[i] = i;
    while (true) {
      std::uint64_t syndrome = 0;
      std::uint64_t vec = 0;
      for (std::size_t i : idx) {
        syndrome ^= column_masks[i];
        vec |= std::uint64_t{1} << i;
      }
      if (syndrome == 0 && reduce(vec) != 0) return w;
      std::size_t i = w;
      while (i > 0 && idx[i - 1] == n - w + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::numeric_limits<std::size_t>::max();
}

}  // namespace oracles
