#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gqm/algebra.hpp"
#include "gqm/states.hpp"

namespace gqm {

/// An observable element used as the generator of the dynamics.
class Hamiltonian {
 public:
  /// Throws PreconditionError unless h* = h within 1e−12 (scaled by max |h|
  /// when that exceeds 1).
  explicit Hamiltonian(AlgebraElement h);

  [[nodiscard]] const AlgebraElement& element() const { return h_; }
  [[nodiscard]] const GroupoidPtr& groupoid() const { return h_.groupoid(); }

 private:
  AlgebraElement h_;
};

/// D_h f = i(f⋆h − h⋆f).
AlgebraElement derivation(const Hamiltonian& h, const AlgebraElement& f);

/// Matrix of D_h on coefficient space: i(R_h − L_h).
Operator derivation_matrix(const Hamiltonian& h);

/// Φ_t f = exp(t D_h) f, the solution of df/dt = i[f, h] with f(0) = f.
AlgebraElement flow(const Hamiltonian& h, double t, const AlgebraElement& f);

/// Precomputes D_h for repeated flow evaluations with the same generator.
class Flow {
 public:
  explicit Flow(const Hamiltonian& h);
  [[nodiscard]] AlgebraElement operator()(double t, const AlgebraElement& f) const;
  [[nodiscard]] const Operator& generator() const { return d_; }

 private:
  GroupoidPtr groupoid_;
  Operator d_;
};

/// e^{−iHt} π(f) e^{iHt} pulled back to F(G); principal groupoids only.
AlgebraElement flow_by_conjugation(const Hamiltonian& h, double t, const AlgebraElement& f);

/// Classical RK4 on df/dt = D_h f. f0 is the value at t_grid.front(); each
/// interval is split into ceil(Δt / step) equal substeps. Throws
/// ParameterError on a non-increasing grid or step ≤ 0.
std::vector<AlgebraElement> heisenberg_integrate(const Hamiltonian& h, const AlgebraElement& f0,
                                                 const std::vector<double>& t_grid, double step);

/// Self-adjoint, unit-trace, positive semidefinite operator.
class DensityMatrix {
 public:
  /// Throws PreconditionError if hermiticity or trace are off by more than
  /// 1e−12 or the least eigenvalue is below −1e−10.
  explicit DensityMatrix(Operator entries);

  [[nodiscard]] const Operator& entries() const { return rho_; }
  [[nodiscard]] Eigen::Index dim() const { return rho_.rows(); }

 private:
  Operator rho_;
};

/// ρ(t) = e^{−iHt} ρ₀ e^{iHt}, which solves dρ/dt = i[ρ, H].
DensityMatrix evolve_density(const Operator& H, const DensityMatrix& rho0, double t);

/// i(ρH − Hρ).
Operator density_rate(const Operator& H, const Operator& rho);

/// State f ↦ Tr(ρ π(f)) on a principal groupoid with |Ω| = dim ρ.
State state_from_density(const GroupoidPtr& g, const DensityMatrix& rho);

using ElementMap = std::function<AlgebraElement(const AlgebraElement&)>;

struct PositiveMapReport {
  bool passed = false;
  double normalization_defect = 0.0;  // max |Φ(1) − 1|
  // Least eigenvalue of π(Φ(f*⋆f)) over samples, scaled by its norm. A
  // hermiticity defect counts as a negative eigenvalue of the same size.
  double worst_min_eigenvalue = 0.0;
};

/// Samples random f, then checks Φ(1) = 1 and π(Φ(f*⋆f)) ≥ 0. Both checks
/// use tol; the eigenvalue is taken relative to max(1, ‖π(Φ(f*⋆f))‖).
PositiveMapReport check_positive_normalized_map(const ElementMap& phi, const GroupoidPtr& g, int samples,
                                                std::uint64_t seed = 1, double tol = 1e-10);

}  // namespace gqm
