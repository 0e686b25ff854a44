#pragma once

#include <vector>

#include "gqm/algebra.hpp"

namespace gqm {

/// Linear functional ρ(f) = Σ_α w(α) f(α) on F(G).
class State {
 public:
  State(GroupoidPtr g, ComplexVector weights);

  [[nodiscard]] const GroupoidPtr& groupoid() const { return groupoid_; }
  [[nodiscard]] const ComplexVector& weights() const { return weights_; }

  [[nodiscard]] Complex operator()(const AlgebraElement& f) const;

 private:
  GroupoidPtr groupoid_;
  ComplexVector weights_;
};

/// ρ_a(f) = f(1_a).
State rho_event(const GroupoidPtr& g, EventId a);

/// ρ_a^inner(f) = (1/|G_a|) Σ_{α∈G_a} f(α).
State rho_inner(const GroupoidPtr& g, EventId a);

/// M_{αβ} = ρ(δ_α* ⋆ δ_β), so that ρ(f*⋆g) = f† M g.
Operator gram_matrix(const State& rho);

struct StateCheck {
  bool ok = false;
  double normalization_defect = 0.0;  // |ρ(1) − 1|
  double hermiticity_defect = 0.0;    // max |M − M†|
  double min_eigenvalue = 0.0;        // of the Hermitian part of M
};

/// Normalization and hermiticity are checked against tol; positivity
/// accepts eigenvalues down to −max(tol, 1e−10).
StateCheck is_state(const State& rho, double tol = 1e-12);

/// GNS data in orthonormal quotient coordinates.
///
/// Coordinates are chosen so the quotient inner product is the standard one:
/// quotient_map = Λ^{1/2} V₊† where M = V Λ V† and V₊ spans the range of M.
struct GnsData {
  GroupoidPtr groupoid;
  std::size_t dim = 0;
  Operator ideal_basis;    // |G| × rank(J), orthonormal columns spanning J_ρ
  Operator quotient_map;   // dim × |G|
  Operator lift;           // |G| × dim, quotient_map * lift = I
  Operator inner_product;  // dim × dim, identity in these coordinates
  ComplexVector cyclic_vector;

  /// π_ρ(f)(g + J) = f⋆g + J.
  [[nodiscard]] Operator represent(const AlgebraElement& f) const;
  /// Quotient coordinates of f + J.
  [[nodiscard]] ComplexVector project(const AlgebraElement& f) const;
};

/// Singular values ≤ rel_threshold × largest count as null.
GnsData gns_construct(const State& rho, double rel_threshold = 1e-10);

/// Unitary U with U π_ρa(f) U† = π(f), built by sending the class of the
/// unique transition a → b to |b⟩. Needs a connected principal groupoid and
/// the GNS data of ρ_a.
Operator fundamental_intertwiner(const GnsData& gns, EventId a);

/// Right action of G_a on F(G₊(a)): [μ(γ)ψ](α) = ψ(α∘γ).
struct IsotropyAction {
  std::vector<TransitionId> basis;  // G₊(a) in TransitionId order
  std::vector<TransitionId> group;  // G_a
  std::vector<Operator> matrices;   // μ(group[k]), permutation matrices

  [[nodiscard]] const Operator& of(TransitionId gamma) const;
};

IsotropyAction isotropy_action(const FiniteGroupoid& g, EventId a);

/// (1/|G_a|) Σ_γ μ(γ).
Operator trivial_component_projector(const FiniteGroupoid& g, EventId a);

struct IsometrySides {
  Complex lhs;
  Complex rhs;
};

/// Both sides of the trivial-component isometry for φ, ψ on G₊(a)
/// (coordinates follow sprays(g, a).g_plus).
///
/// lhs = ρ_a(φ̃* ⋆ ψ̃) with φ̃(α) = |G_a|^{-1/2} Σ_γ φ(α∘γ), computed by
/// convolution. rhs = Σ_{a′} conj(φ_Ω(a′)) ψ_Ω(a′) where
/// φ_Ω(t(α)) = |G_a|^{1/2} φ̃(α).
IsometrySides theorem1_isometry(const GroupoidPtr& g, EventId a, const ComplexVector& phi, const ComplexVector& psi);

}  // namespace gqm
