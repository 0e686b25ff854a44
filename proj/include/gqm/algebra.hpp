#pragma once

#include <variant>

#include "gqm/core.hpp"
#include "gqm/groupoid.hpp"

namespace gqm {

/// An amplitude f: G → ℂ, stored densely in TransitionId order.
///
/// The same array also reads as the groupoid-algebra element Σ c_α α under
/// the identification δ_α ↔ α.
class AlgebraElement {
 public:
  /// Zero element.
  explicit AlgebraElement(GroupoidPtr g);
  AlgebraElement(GroupoidPtr g, ComplexVector coeffs);

  [[nodiscard]] const GroupoidPtr& groupoid() const { return groupoid_; }
  [[nodiscard]] const ComplexVector& coeffs() const { return coeffs_; }
  [[nodiscard]] ComplexVector& coeffs() { return coeffs_; }
  [[nodiscard]] std::size_t size() const { return static_cast<std::size_t>(coeffs_.size()); }

  [[nodiscard]] Complex operator()(TransitionId t) const;
  Complex& operator[](TransitionId t);

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(Complex s);

 private:
  GroupoidPtr groupoid_;
  ComplexVector coeffs_;
};

AlgebraElement operator+(AlgebraElement lhs, const AlgebraElement& rhs);
AlgebraElement operator-(AlgebraElement lhs, const AlgebraElement& rhs);
AlgebraElement operator-(AlgebraElement f);
AlgebraElement operator*(Complex s, AlgebraElement f);

/// Throws BindingError unless both elements live on the same groupoid.
void require_same_groupoid(const AlgebraElement& f, const AlgebraElement& g);
bool same_groupoid(const FiniteGroupoid& lhs, const FiniteGroupoid& rhs);

/// (f⋆g)(γ) = Σ_{α∘β=γ} f(α) g(β). Uses the matrix path on principal groupoids.
AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& g);
/// Convolution by walking the composition table.
AlgebraElement convolve_tabular(const AlgebraElement& f, const AlgebraElement& g);
/// Convolution as a product of coefficient matrices F(t(α), s(α)) = f(α).
/// Throws PreconditionError on non-principal groupoids.
AlgebraElement convolve_matrix(const AlgebraElement& f, const AlgebraElement& g);

/// f*(γ) = conj(f(γ⁻¹)).
AlgebraElement involution(const AlgebraElement& f);

AlgebraElement unit(const GroupoidPtr& g);
AlgebraElement delta(const GroupoidPtr& g, TransitionId t);

struct Incidence {};
struct CharIsotropy {
  EventId event;
};
struct CharSprayPlus {
  EventId event;
};
struct CharSprayMinus {
  EventId event;
};
struct Delta {
  TransitionId transition;
};
using Distinguished = std::variant<Incidence, CharIsotropy, CharSprayPlus, CharSprayMinus, Delta>;

/// Indicator elements: 𝕀 = Σ α, 1_{G_a}, 1_{G₊(a)}, 1_{G₋(a)}, δ_α.
AlgebraElement distinguished(const GroupoidPtr& g, const Distinguished& which);

/// ⟨f, x⟩ = Σ_α f(α) c_α with x read as a groupoid-algebra element.
Complex pairing(const AlgebraElement& f, const AlgebraElement& x);

AlgebraElement add(const AlgebraElement& f, const AlgebraElement& g);
AlgebraElement scale(Complex s, const AlgebraElement& f);
AlgebraElement commutator(const AlgebraElement& f, const AlgebraElement& g);

/// Matrices of x ↦ f⋆x and x ↦ x⋆f on coefficient space.
Operator left_multiplication(const AlgebraElement& f);
Operator right_multiplication(const AlgebraElement& f);

double max_abs_diff(const AlgebraElement& f, const AlgebraElement& g);
double max_abs(const AlgebraElement& f);

}  // namespace gqm
