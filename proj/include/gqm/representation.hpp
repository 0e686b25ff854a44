#pragma once

#include <string>

#include "gqm/algebra.hpp"

namespace gqm {

/// π(f)|a⟩ = Σ_α f(α) δ(α,a) |t(α)⟩; entry (a′, a) = Σ_{α: a→a′} f(α).
Operator fundamental_rep(const AlgebraElement& f);

/// ⟨a′|π(f)|a⟩.
Complex amplitude(const AlgebraElement& f, EventId a, EventId a_prime);

/// ⟨f⟩_a = Σ_{α∈G_a} f(α).
Complex expected_value(const AlgebraElement& f, EventId a);

struct NormReport {
  double value = 0.0;
  std::string method;
  bool faithful = true;  // false: value is the seminorm induced by π
};

/// ‖π(f)‖ as the largest singular value.
NormReport cstar_norm(const AlgebraElement& f);

/// Largest singular value of a dense operator (square root of the top
/// eigenvalue of A†A).
double operator_norm(const Operator& a);

bool is_observable(const AlgebraElement& f, double tol);

/// Inverse of π on a principal groupoid. Throws PreconditionError if the
/// groupoid is not principal or the matrix has support on a pair (a′, a)
/// with no transition a → a′.
AlgebraElement element_from_operator(const GroupoidPtr& g, const Operator& m);

}  // namespace gqm
