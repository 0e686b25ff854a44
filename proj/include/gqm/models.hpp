#pragma once

#include <array>
#include <optional>
#include <utility>

#include "gqm/algebra.hpp"
#include "gqm/dynamics.hpp"

namespace gqm {

// Extended singleton.

namespace qubit_ids {
inline constexpr EventId plus{0};
inline constexpr EventId minus{1};
inline constexpr TransitionId unit_plus{0};
inline constexpr TransitionId unit_minus{1};
inline constexpr TransitionId alpha{2};      // + → −
inline constexpr TransitionId alpha_inv{3};  // − → +
}  // namespace qubit_ids

/// Pair groupoid on {+, −} with transitions 1₊, 1₋, α, α⁻¹ in that order.
GroupoidPtr qubit();

/// e₁ = 1₊, e₂ = 1₋, e₃ = α, e₄ = α⁻¹. One entry of the multiplication
/// table as listed for the extended singleton: e_left e_right = e_result,
/// or 0 when result is empty.
struct QubitRelation {
  int left;
  int right;
  std::optional<int> result;
};

const std::array<QubitRelation, 12>& qubit_relations();

/// TransitionId of e_k, k ∈ {1, 2, 3, 4}.
TransitionId qubit_basis(int k);

struct PauliCoordinates {
  double x0 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;
};

/// f₊ = x₀ + x₃, f₋ = x₀ − x₃, f_α = x₁ + ix₂, f_{α⁻¹} = x₁ − ix₂; so that
/// π(f) = x₀I + x·σ.
AlgebraElement pauli_compose(const GroupoidPtr& qubit, const PauliCoordinates& x);

/// Inverse of pauli_compose. Throws PreconditionError if f is not an
/// observable.
PauliCoordinates pauli_decompose(const AlgebraElement& f);

/// Coefficients (f₊, f₋, f_α, f_{α⁻¹}) of a qubit element.
struct QubitAmplitudes {
  Complex plus;
  Complex minus;
  Complex alpha;
  Complex alpha_inv;
};

QubitAmplitudes amplitudes_of(const AlgebraElement& f);

/// Right-hand side of df/dt = i[f, h] in qubit coordinates, h_z = h₁ + ih₂:
///   ḟ₊ = i(f_{α⁻¹} h_z − conj(h_z) f_α)
///   ḟ₋ = i(conj(h_z) f_α − f_{α⁻¹} h_z)
///   ḟ_α = i((f₋ − f₊) h_z + 2h₃ f_α)
///   ḟ_{α⁻¹} = i((f₊ − f₋) conj(h_z) − 2h₃ f_{α⁻¹})
QubitAmplitudes qubit_eom_rhs(const PauliCoordinates& h, const QubitAmplitudes& f);

// Truncated oscillator.

/// Pair groupoid on levels 0..N−1; transition (n,m) goes m → n. N < 2 throws
/// ParameterError.
GroupoidPtr oscillator(std::size_t levels);

struct Ladder {
  AlgebraElement a;       // √(n+1) on (n, n+1)
  AlgebraElement a_star;  // √(n+1) on (n+1, n)
};

Ladder ladder(const GroupoidPtr& osc);

/// Σ n δ_{1_n}.
AlgebraElement number_element(const GroupoidPtr& osc);

/// h = ω Σ n δ_{1_n} + f a* + conj(f) a + β.
Hamiltonian oscillator_hamiltonian(const GroupoidPtr& osc, double omega, Complex f, double beta);

struct PositionMomentum {
  AlgebraElement q;  // (a + a*)/√2
  AlgebraElement p;  // i(a* − a)/√2
};

PositionMomentum position_momentum(const GroupoidPtr& osc);

// Frame changes.

/// Unitary U; the constructor throws PreconditionError unless U†U = I
/// within 1e−12.
class FrameChange {
 public:
  explicit FrameChange(Operator u);
  [[nodiscard]] const Operator& matrix() const { return u_; }

 private:
  Operator u_;
};

FrameChange hadamard();

/// Element with π-image U π(f) U†. Throws UnsupportedFrameError unless the
/// groupoid is a pair groupoid of matching size.
AlgebraElement frame_change(const FrameChange& tau, const AlgebraElement& f);

/// c(β, ·) with τ(β) = Σ_α c(β, α) α.
ComplexVector expansion_coefficients(const FrameChange& tau, const GroupoidPtr& g, TransitionId beta);

struct CompoundResult {
  Complex amplitude;                   // ⟨b′|c′⟩ = U(b′, c′)
  double probability = 0.0;            // |⟨b′|c′⟩|²
  std::pair<EventId, EventId> symbol;  // (a, d)
};

/// M(a, b′) M(c′, d) = ⟨b′|c′⟩ M(a, d), with (a, b′) in the computational
/// frame and (c′, d) in the frame rotated by U.
CompoundResult compound_measurement(const FrameChange& tau, EventId a, EventId b_prime, EventId c_prime, EventId d);

/// c · M(x, y): x is the ket, y the bra, each a unit vector of some frame.
struct MeasurementSymbol {
  ComplexVector ket;
  ComplexVector bra;
  Complex coefficient{1.0, 0.0};
};

/// Symbol for |U e_x⟩⟨V e_y|.
MeasurementSymbol measurement_symbol(const FrameChange& ket_frame, EventId x, const FrameChange& bra_frame, EventId y);

/// Compound law: (c₁ M(a, b)) (c₂ M(c, d)) = c₁ c₂ ⟨b|c⟩ M(a, d).
MeasurementSymbol compound(const MeasurementSymbol& lhs, const MeasurementSymbol& rhs);

/// c |ket⟩⟨bra| as an operator.
Operator realize(const MeasurementSymbol& m);

}  // namespace gqm
