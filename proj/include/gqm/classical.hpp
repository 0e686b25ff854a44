#pragma once

#include <string>
#include <vector>

#include "gqm/algebra.hpp"

namespace gqm {

/// Values on events; identified with functions supported on units.
using ClassicalObservable = RealVector;

/// True iff every non-unit coefficient has magnitude ≤ tol.
bool is_classical(const AlgebraElement& f, double tol);

/// Coefficients of a classical element on the units, indexed by EventId.
ComplexVector unit_values(const AlgebraElement& f);

/// First-order kernel k(x, y) = −2 Σ_{α: x→y} Im h1(α), zero diagonal.
struct Kernel {
  RealMatrix k;
};

/// Throws PreconditionError if h1 has a nonzero unit coefficient.
Kernel kernel_from_hamiltonian(const FiniteGroupoid& g, const AlgebraElement& h1);

enum class GeneratorMode { paper_literal, symmetric_rates };

GeneratorMode parse_generator_mode(const std::string& name);
const char* to_string(GeneratorMode mode);

struct MarkovGenerator {
  RealMatrix K;
  double conservation_defect = 0.0;  // max |column sum|
  std::string warning;               // empty when probability is conserved
};

/// K_ij = r_ij − δ_ij Σ_l r_il with r = k (paper_literal) or r = |k|
/// (symmetric_rates). A column-sum defect above 1e−12 is reported in
/// warning.
MarkovGenerator markov_generator(const Kernel& kernel, GeneratorMode mode = GeneratorMode::symmetric_rates);

/// p(τ) = exp(τK) p0 at every grid point.
std::vector<ClassicalObservable> classical_evolve(const MarkovGenerator& K, const ClassicalObservable& p0,
                                                  const std::vector<double>& t_grid);

/// τ = ε t; ε ≤ 0 throws ParameterError.
double rescale_time(double t, double epsilon);

}  // namespace gqm
