#pragma once

// Independent re-derivations used to check the library. None of these call
// the code under test for the quantity they verify.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "qbound/codes.hpp"

namespace oracles {

/// Bad-error probability by listing every error configuration on the
/// cluster support and comparing the configuration's probability with that
/// of its image under the cluster (ties count as bad).
double literal_bad_css(std::size_t m, double y, double p);
double literal_bad_depol(std::size_t m, double y, double p, std::uint64_t letter_seed = 7);
double literal_bad_ft(std::size_t m, std::size_t m_q, double p, double q);

/// Simple cycles of length m on the L x L periodic square lattice, counted
/// as edge sets. These are the irreducible X-type undetectable operators of
/// the toric code; `nontrivial` counts the ones that wind around the torus.
struct CycleCount {
  std::uint64_t all = 0;
  std::uint64_t nontrivial = 0;
};
CycleCount toric_simple_cycles(std::size_t L, std::size_t m);

/// Random CSS code on n qubits: sparse random X checks, Z checks drawn as
/// sparse vectors orthogonal to every X check, k >= 1.
qbound::CssCode random_css(std::size_t n, std::mt19937_64& rng);

/// Minimum weight of a vector in ker(checks) outside rowspace(degeneracy),
/// by weight-ordered subset search with its own elimination routine.
std::size_t sector_distance(const qbound::BitMatrix& checks, const qbound::BitMatrix& degeneracy, std::size_t cap);

}  // namespace oracles
