#pragma once

// Seeded generators for property tests.

#include <cstdint>
#include <random>

#include <Eigen/QR>

#include "gqm/algebra.hpp"
#include "gqm/groupoid.hpp"

namespace gqm::testing {

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng{seed}; }

inline double uniform(Rng& rng, double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline Complex random_complex(Rng& rng) { return {uniform(rng), uniform(rng)}; }

inline AlgebraElement random_element(const GroupoidPtr& g, Rng& rng) {
  AlgebraElement f(g);
  for (auto& c : f.coeffs()) c = random_complex(rng);
  return f;
}

inline AlgebraElement random_observable(const GroupoidPtr& g, Rng& rng) {
  auto f = random_element(g, rng);
  return 0.5 * (f + involution(f));
}

inline Operator random_matrix(Eigen::Index n, Rng& rng) {
  Operator m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = random_complex(rng);
  return m;
}

inline Operator random_hermitian(Eigen::Index n, Rng& rng) {
  const Operator m = random_matrix(n, rng);
  return 0.5 * (m + m.adjoint());
}

inline Operator random_unitary(Eigen::Index n, Rng& rng) {
  Eigen::HouseholderQR<Operator> qr(random_matrix(n, rng));
  return qr.householderQ();
}

/// ρ = A A† / Tr(A A†).
inline Operator random_density(Eigen::Index n, Rng& rng) {
  const Operator a = random_matrix(n, rng);
  const Operator rho = a * a.adjoint();
  return rho / rho.trace().real();
}

/// One of the three constructors with small random parameters.
inline GroupoidPtr random_groupoid(Rng& rng) {
  switch (uniform_index(rng, 0, 2)) {
    case 0:
      return build_pair_groupoid(uniform_index(rng, 1, 5));
    case 1: {
      const auto n = uniform_index(rng, 1, 6);
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      const auto e = uniform_index(rng, 0, n);
      for (std::size_t k = 0; k < e; ++k) edges.emplace_back(uniform_index(rng, 0, n - 1), uniform_index(rng, 0, n - 1));
      return build_from_graph(n, edges);
    }
    default:
      return build_pair_times_group(uniform_index(rng, 1, 3), uniform_index(rng, 1, 4));
  }
}

inline double max_abs(const Operator& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace gqm::testing
