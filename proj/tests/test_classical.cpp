#include <gtest/gtest.h>

#include <cmath>

#include "gqm/classical.hpp"
#include "gqm/models.hpp"
#include "gqm/representation.hpp"
#include "support.hpp"

namespace gqm {
namespace {

using testing::make_rng;

AlgebraElement classical_element(const GroupoidPtr& g, testing::Rng& rng) {
  AlgebraElement f(g);
  for (std::size_t a = 0; a < g->event_count(); ++a) f[g->unit_of(EventId{a})] = testing::random_complex(rng);
  return f;
}

// h1(α) = iγ/2 on both qubit transitions, as in the worked kernel example.
AlgebraElement symmetric_qubit_h1(const GroupoidPtr& q, double gamma) {
  return Complex(0, gamma / 2) * (delta(q, qubit_ids::alpha) + delta(q, qubit_ids::alpha_inv));
}

// The Hermitian first-order part iγ/2 (δ_α − δ_{α⁻¹}).
AlgebraElement hermitian_qubit_h1(const GroupoidPtr& q, double gamma) {
  return Complex(0, gamma / 2) * (delta(q, qubit_ids::alpha) - delta(q, qubit_ids::alpha_inv));
}

RealMatrix qubit_K(double gamma) {
  RealMatrix K(2, 2);
  K << -gamma, gamma, gamma, -gamma;
  return K;
}

TEST(IsClassical, Examples) {
  const auto q = qubit();
  EXPECT_TRUE(is_classical(unit(q), 0.0));
  EXPECT_FALSE(is_classical(delta(q, qubit_ids::alpha), 0.0));
  EXPECT_TRUE(is_classical(1e-13 * delta(q, qubit_ids::alpha), 1e-12));
  EXPECT_THROW(is_classical(unit(q), -1.0), ParameterError);
}

TEST(IsClassical, ConvolutionIsPointwise) {
  auto rng = make_rng(81);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = testing::random_groupoid(rng);
    const auto f = classical_element(g, rng);
    const auto h = classical_element(g, rng);
    const auto fh = convolve(f, h);
    EXPECT_TRUE(is_classical(fh, 1e-14));
    const ComplexVector pointwise = unit_values(f).cwiseProduct(unit_values(h));
    EXPECT_LE((unit_values(fh) - pointwise).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(IsClassical, NormIsSupNorm) {
  auto rng = make_rng(82);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = testing::random_groupoid(rng);
    const auto f = classical_element(g, rng);
    const double sup = unit_values(f).cwiseAbs().maxCoeff();
    EXPECT_NEAR(operator_norm(fundamental_rep(f)), sup, 1e-14 * (1 + sup));
  }
}

TEST(Kernel, QubitExamples) {
  const auto q = qubit();
  const double gamma = 0.7;
  const auto ks = kernel_from_hamiltonian(*q, symmetric_qubit_h1(q, gamma)).k;
  EXPECT_EQ(ks(0, 1), -gamma);
  EXPECT_EQ(ks(1, 0), -gamma);
  EXPECT_EQ(ks(0, 0), 0.0);
  EXPECT_EQ(ks(1, 1), 0.0);
  // The Hermitian reading gives an antisymmetric kernel.
  const auto kh = kernel_from_hamiltonian(*q, hermitian_qubit_h1(q, gamma)).k;
  EXPECT_EQ(kh(0, 1), -gamma);
  EXPECT_EQ(kh(1, 0), gamma);
}

TEST(Kernel, RealH1GivesZero) {
  const auto g = build_pair_groupoid(3);
  AlgebraElement h1(g);
  for (std::size_t i = 0; i < g->transition_count(); ++i)
    if (!g->is_unit(TransitionId{i})) h1[TransitionId{i}] = 0.3 * static_cast<double>(i);
  EXPECT_EQ(kernel_from_hamiltonian(*g, h1).k, RealMatrix::Zero(3, 3));
}

TEST(Kernel, ParallelTransitionsSum) {
  const auto g = build_pair_times_group(2, 2);
  AlgebraElement h1(g);
  std::vector<Complex> values{Complex(0.1, 0.25), Complex(-2.0, 0.5)};
  const auto forward = g->between(EventId{0}, EventId{1});
  ASSERT_EQ(forward.size(), 2u);
  for (std::size_t k = 0; k < 2; ++k) h1[forward[k]] = values[k];
  const auto k = kernel_from_hamiltonian(*g, h1).k;
  EXPECT_EQ(k(0, 1), -2.0 * (0.25 + 0.5));
  EXPECT_EQ(k(1, 0), 0.0);
}

TEST(Kernel, IsotropyLoopsIgnoredAndUnitsRejected) {
  const auto g = build_pair_times_group(1, 3);
  AlgebraElement h1(g);
  for (std::size_t i = 0; i < g->transition_count(); ++i)
    if (!g->is_unit(TransitionId{i})) h1[TransitionId{i}] = Complex(0, 1);
  EXPECT_EQ(kernel_from_hamiltonian(*g, h1).k, RealMatrix::Zero(1, 1));
  EXPECT_THROW(kernel_from_hamiltonian(*g, unit(g)), PreconditionError);
  EXPECT_THROW(kernel_from_hamiltonian(*build_pair_groupoid(1), h1), BindingError);
}

TEST(Kernel, RandomWalkSign) {
  auto rng = make_rng(83);
  const auto g = build_pair_groupoid(4);
  for (int trial = 0; trial < 20; ++trial) {
    const double eps = testing::uniform(rng, 0.01, 0.5);
    AlgebraElement h1(g);
    RealMatrix gamma = RealMatrix::Zero(4, 4);
    for (std::size_t i = 0; i < g->transition_count(); ++i) {
      const TransitionId t{i};
      if (g->is_unit(t)) continue;
      const double gxy = testing::uniform(rng, -2.0, -0.01);
      gamma(static_cast<Eigen::Index>(g->source(t).index), static_cast<Eigen::Index>(g->target(t).index)) = gxy;
      h1[t] = Complex(0, eps * gxy);
    }
    const auto k = kernel_from_hamiltonian(*g, h1).k;
    for (Eigen::Index x = 0; x < 4; ++x)
      for (Eigen::Index y = 0; y < 4; ++y) {
        if (x == y) continue;
        EXPECT_GT(k(x, y), 0.0);
        EXPECT_NEAR(k(x, y), -2.0 * eps * gamma(x, y), 1e-15);
      }
  }
}

TEST(Generator, QubitSymmetricRatesExact) {
  const auto q = qubit();
  for (double gamma : {0.25, 1.0, 3.5}) {
    for (const auto& h1 : {symmetric_qubit_h1(q, gamma), hermitian_qubit_h1(q, gamma)}) {
      const auto K = markov_generator(kernel_from_hamiltonian(*q, h1), GeneratorMode::symmetric_rates);
      EXPECT_EQ(K.K, qubit_K(gamma));
      EXPECT_EQ(K.conservation_defect, 0.0);
      EXPECT_TRUE(K.warning.empty());
    }
  }
}

TEST(Generator, PaperLiteralWarnsOnAntisymmetricKernel) {
  const auto q = qubit();
  const auto K = markov_generator(kernel_from_hamiltonian(*q, hermitian_qubit_h1(q, 1.0)), GeneratorMode::paper_literal);
  RealMatrix expected(2, 2);
  // r = k = [[0, −1], [1, 0]].
  expected << 1.0, -1.0, 1.0, -1.0;
  EXPECT_EQ(K.K, expected);
  EXPECT_EQ(K.conservation_defect, 2.0);
  EXPECT_FALSE(K.warning.empty());
  // Literal mode on the symmetric example keeps the negative sign.
  const auto Ks = markov_generator(kernel_from_hamiltonian(*q, symmetric_qubit_h1(q, 1.0)), GeneratorMode::paper_literal);
  EXPECT_EQ(Ks.K, -qubit_K(1.0));
  EXPECT_TRUE(Ks.warning.empty());
}

TEST(Generator, ZeroKernel) {
  const auto K = markov_generator(Kernel{RealMatrix::Zero(3, 3)});
  EXPECT_EQ(K.K, RealMatrix::Zero(3, 3));
}

TEST(Generator, ThreeEventSymmetric) {
  auto rng = make_rng(84);
  for (int trial = 0; trial < 20; ++trial) {
    RealMatrix k = RealMatrix::Zero(3, 3);
    for (Eigen::Index i = 0; i < 3; ++i)
      for (Eigen::Index j = i + 1; j < 3; ++j) k(i, j) = k(j, i) = testing::uniform(rng, 0, 5);
    for (auto mode : {GeneratorMode::paper_literal, GeneratorMode::symmetric_rates}) {
      const auto K = markov_generator(Kernel{k}, mode);
      EXPECT_LE(K.K.colwise().sum().cwiseAbs().maxCoeff(), 1e-14);
    }
  }
}

TEST(Generator, ModeNames) {
  EXPECT_EQ(parse_generator_mode("paper_literal"), GeneratorMode::paper_literal);
  EXPECT_EQ(parse_generator_mode(to_string(GeneratorMode::symmetric_rates)), GeneratorMode::symmetric_rates);
  EXPECT_THROW(parse_generator_mode("literal"), ParameterError);
}

TEST(ClassicalEvolve, QubitAnalytic) {
  for (double gamma : {0.3, 1.0, 2.0}) {
    MarkovGenerator K{qubit_K(gamma), 0.0, {}};
    std::vector<double> grid;
    for (int k = 0; k <= 100; ++k) grid.push_back(10.0 / gamma * k / 100.0);
    const ClassicalObservable p0 = (ClassicalObservable(2) << 1.0, 0.0).finished();
    const auto series = classical_evolve(K, p0, grid);
    ASSERT_EQ(series.size(), grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const double p1 = 0.5 * (1 + std::exp(-2 * gamma * grid[k]));
      EXPECT_NEAR(series[k][0], p1, 1e-10);
      EXPECT_NEAR(series[k][1], 1 - p1, 1e-10);
      EXPECT_NEAR(series[k].sum(), 1.0, 1e-12);
    }
  }
}

TEST(ClassicalEvolve, RateEquation) {
  const double gamma = 0.9;
  MarkovGenerator K{qubit_K(gamma), 0.0, {}};
  const ClassicalObservable p0 = (ClassicalObservable(2) << 0.8, 0.2).finished();
  const double tau = 0.4;
  const double h = 1e-5;
  const auto s = classical_evolve(K, p0, {tau - h, tau, tau + h});
  const RealVector dp = (s[2] - s[0]) / (2 * h);
  EXPECT_NEAR(dp[0], -gamma * s[1][0] + gamma * s[1][1], 1e-8);
  EXPECT_NEAR(dp[1], gamma * s[1][0] - gamma * s[1][1], 1e-8);
}

TEST(ClassicalEvolve, StationaryAndNonnegative) {
  MarkovGenerator K{qubit_K(1.7), 0.0, {}};
  const ClassicalObservable half = (ClassicalObservable(2) << 0.5, 0.5).finished();
  for (const auto& p : classical_evolve(K, half, {0.0, 0.5, 3.0})) EXPECT_LE((p - half).cwiseAbs().maxCoeff(), 1e-15);

  auto rng = make_rng(85);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = static_cast<Eigen::Index>(testing::uniform_index(rng, 2, 6));
    RealMatrix k = RealMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j) k(i, j) = k(j, i) = testing::uniform(rng, 0, 3);
    const auto gen = markov_generator(Kernel{k});
    ClassicalObservable p0 = ClassicalObservable::Zero(n);
    p0[static_cast<Eigen::Index>(testing::uniform_index(rng, 0, static_cast<std::size_t>(n - 1)))] = 1.0;
    std::vector<double> grid;
    for (int s = 0; s <= 20; ++s) grid.push_back(0.25 * s);
    for (const auto& p : classical_evolve(gen, p0, grid)) {
      EXPECT_GE(p.minCoeff(), -1e-12);
      EXPECT_NEAR(p.sum(), 1.0, 1e-12);
    }
  }
}

TEST(ClassicalEvolve, DimensionMismatch) {
  MarkovGenerator K{qubit_K(1.0), 0.0, {}};
  EXPECT_THROW(classical_evolve(K, ClassicalObservable::Zero(3), {0.0}), PreconditionError);
}

TEST(RescaleTime, Examples) {
  EXPECT_EQ(rescale_time(1.0, 0.1), 0.1);
  EXPECT_EQ(rescale_time(0.0, 0.7), 0.0);
  EXPECT_DOUBLE_EQ(rescale_time(rescale_time(3.0, 0.5), 0.2), rescale_time(3.0, 0.5 * 0.2));
  EXPECT_THROW(rescale_time(1.0, 0.0), ParameterError);
  EXPECT_THROW(rescale_time(1.0, -0.1), ParameterError);
}

}  // namespace
}  // namespace gqm
