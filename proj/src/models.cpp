#include "gqm/models.hpp"

#include <cmath>

#include "gqm/representation.hpp"

namespace gqm {

namespace {

Eigen::Index ix(std::size_t i) { return static_cast<Eigen::Index>(i); }

void require_pair_groupoid(const FiniteGroupoid& g, const char* what) {
  const auto n = g.event_count();
  if (!g.is_principal() || g.transition_count() != n * n)
    throw PreconditionError(std::string(what) + " needs a pair groupoid");
}

TransitionId pair_transition(const FiniteGroupoid& g, std::size_t target, std::size_t source) {
  return g.between(EventId{source}, EventId{target}).front();
}

}  // namespace

GroupoidPtr qubit() {
  using namespace qubit_ids;
  GroupoidTables t;
  t.events = {"+", "-"};
  t.transitions = {{plus, plus, "1+"}, {minus, minus, "1-"}, {plus, minus, "alpha"}, {minus, plus, "alpha^-1"}};
  t.units = {unit_plus, unit_minus};
  t.inverse = {unit_plus, unit_minus, alpha_inv, alpha};
  t.compose = {
      {unit_plus, unit_plus, unit_plus},   {unit_minus, unit_minus, unit_minus}, {alpha, unit_plus, alpha},
      {unit_minus, alpha, alpha},          {alpha_inv, unit_minus, alpha_inv},   {unit_plus, alpha_inv, alpha_inv},
      {alpha, alpha_inv, unit_minus},      {alpha_inv, alpha, unit_plus},
  };
  GroupoidSpec spec;
  spec.kind = GroupoidKind::explicit_tables;
  spec.tables = t;
  return FiniteGroupoid::from_tables(std::move(t), std::move(spec));
}

const std::array<QubitRelation, 12>& qubit_relations() {
  static const std::array<QubitRelation, 12> table{{
      {1, 1, 1},
      {2, 2, 2},
      {1, 2, std::nullopt},
      {3, 4, 1},
      {4, 3, 2},
      {3, 3, std::nullopt},
      {4, 4, std::nullopt},
      {1, 3, 3},
      {4, 1, 4},
      {1, 4, std::nullopt},
      {3, 2, 3},
      {2, 3, std::nullopt},
  }};
  return table;
}

TransitionId qubit_basis(int k) {
  if (k < 1 || k > 4) throw RangeError("qubit basis index must be 1..4");
  return TransitionId{static_cast<std::size_t>(k - 1)};
}

AlgebraElement pauli_compose(const GroupoidPtr& g, const PauliCoordinates& x) {
  using namespace qubit_ids;
  AlgebraElement f(g);
  if (g->transition_count() != 4) throw PreconditionError("Pauli coordinates need the qubit groupoid");
  f[unit_plus] = x.x0 + x.x3;
  f[unit_minus] = x.x0 - x.x3;
  f[alpha] = Complex{x.x1, x.x2};
  f[alpha_inv] = Complex{x.x1, -x.x2};
  return f;
}

PauliCoordinates pauli_decompose(const AlgebraElement& f) {
  using namespace qubit_ids;
  if (f.size() != 4) throw PreconditionError("Pauli coordinates need the qubit groupoid");
  if (!is_observable(f, 1e-12 * std::max(1.0, max_abs(f)))) throw PreconditionError("pauli_decompose needs an observable");
  PauliCoordinates x;
  x.x0 = 0.5 * (f(unit_plus).real() + f(unit_minus).real());
  x.x3 = 0.5 * (f(unit_plus).real() - f(unit_minus).real());
  x.x1 = f(alpha).real();
  x.x2 = f(alpha).imag();
  return x;
}

QubitAmplitudes amplitudes_of(const AlgebraElement& f) {
  using namespace qubit_ids;
  if (f.size() != 4) throw PreconditionError("qubit amplitudes need the qubit groupoid");
  return {f(unit_plus), f(unit_minus), f(alpha), f(alpha_inv)};
}

QubitAmplitudes qubit_eom_rhs(const PauliCoordinates& h, const QubitAmplitudes& f) {
  const Complex hz{h.x1, h.x2};
  const Complex hzb = std::conj(hz);
  QubitAmplitudes r;
  r.plus = kI * (f.alpha_inv * hz - hzb * f.alpha);
  r.minus = kI * (hzb * f.alpha - f.alpha_inv * hz);
  r.alpha = kI * ((f.minus - f.plus) * hz + 2.0 * h.x3 * f.alpha);
  r.alpha_inv = kI * ((f.plus - f.minus) * hzb - 2.0 * h.x3 * f.alpha_inv);
  return r;
}

GroupoidPtr oscillator(std::size_t levels) {
  if (levels < 2) throw ParameterError("oscillator truncation needs at least 2 levels");
  return build_pair_groupoid(levels);
}

Ladder ladder(const GroupoidPtr& osc) {
  require_pair_groupoid(*osc, "ladder");
  AlgebraElement a(osc);
  for (std::size_t n = 0; n + 1 < osc->event_count(); ++n)
    a[pair_transition(*osc, n, n + 1)] = std::sqrt(static_cast<double>(n + 1));
  AlgebraElement a_star = involution(a);
  return {std::move(a), std::move(a_star)};
}

AlgebraElement number_element(const GroupoidPtr& osc) {
  AlgebraElement out(osc);
  for (std::size_t n = 0; n < osc->event_count(); ++n) out[osc->unit_of(EventId{n})] = static_cast<double>(n);
  return out;
}

Hamiltonian oscillator_hamiltonian(const GroupoidPtr& osc, double omega, Complex f, double beta) {
  const auto l = ladder(osc);
  AlgebraElement h = omega * number_element(osc) + beta * unit(osc);
  if (f != Complex{0.0}) h += f * l.a_star + std::conj(f) * l.a;
  return Hamiltonian(std::move(h));
}

PositionMomentum position_momentum(const GroupoidPtr& osc) {
  const auto l = ladder(osc);
  const double s = 1.0 / std::sqrt(2.0);
  return {s * (l.a + l.a_star), (kI * s) * (l.a_star - l.a)};
}

FrameChange::FrameChange(Operator u) : u_(std::move(u)) {
  if (u_.rows() != u_.cols() || u_.rows() == 0) throw PreconditionError("frame change matrix must be square");
  const Operator gram = u_.adjoint() * u_;
  const double defect = (gram - Operator::Identity(u_.rows(), u_.cols())).cwiseAbs().maxCoeff();
  if (defect > 1e-12) throw PreconditionError("frame change matrix is not unitary (defect " + std::to_string(defect) + ")");
}

FrameChange hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  Operator h(2, 2);
  h << s, s, s, -s;
  return FrameChange(h);
}

namespace {

void require_frame(const FrameChange& tau, const FiniteGroupoid& g) {
  const auto n = g.event_count();
  if (!g.is_principal() || g.transition_count() != n * n)
    throw UnsupportedFrameError("frame changes are only supported on pair groupoids");
  if (static_cast<std::size_t>(tau.matrix().rows()) != n)
    throw UnsupportedFrameError("frame dimension " + std::to_string(tau.matrix().rows()) + " differs from " +
                                std::to_string(n) + " events");
}

AlgebraElement from_matrix(const GroupoidPtr& g, const Operator& m) {
  AlgebraElement out(g);
  for (std::size_t i = 0; i < g->transition_count(); ++i) {
    const auto& tr = g->transition(TransitionId{i});
    out.coeffs()[ix(i)] = m(ix(tr.target.index), ix(tr.source.index));
  }
  return out;
}

}  // namespace

AlgebraElement frame_change(const FrameChange& tau, const AlgebraElement& f) {
  require_frame(tau, *f.groupoid());
  const auto& U = tau.matrix();
  return from_matrix(f.groupoid(), U * fundamental_rep(f) * U.adjoint());
}

ComplexVector expansion_coefficients(const FrameChange& tau, const GroupoidPtr& g, TransitionId beta) {
  require_frame(tau, *g);
  return frame_change(tau, delta(g, beta)).coeffs();
}

CompoundResult compound_measurement(const FrameChange& tau, EventId a, EventId b_prime, EventId c_prime, EventId d) {
  const auto n = static_cast<std::size_t>(tau.matrix().rows());
  for (auto e : {a, b_prime, c_prime, d})
    if (e.index >= n) throw RangeError("event " + std::to_string(e.index) + " outside the frame");
  CompoundResult r;
  r.amplitude = tau.matrix()(ix(b_prime.index), ix(c_prime.index));
  r.probability = std::norm(r.amplitude);
  r.symbol = {a, d};
  return r;
}

MeasurementSymbol measurement_symbol(const FrameChange& ket_frame, EventId x, const FrameChange& bra_frame, EventId y) {
  if (ket_frame.matrix().rows() != bra_frame.matrix().rows()) throw PreconditionError("frames have different dimensions");
  const auto n = static_cast<std::size_t>(ket_frame.matrix().rows());
  if (x.index >= n || y.index >= n) throw RangeError("event outside the frame");
  return {ket_frame.matrix().col(ix(x.index)), bra_frame.matrix().col(ix(y.index)), Complex{1.0, 0.0}};
}

MeasurementSymbol compound(const MeasurementSymbol& lhs, const MeasurementSymbol& rhs) {
  if (lhs.bra.size() != rhs.ket.size()) throw PreconditionError("measurement symbols have different dimensions");
  return {lhs.ket, rhs.bra, lhs.coefficient * rhs.coefficient * lhs.bra.dot(rhs.ket)};
}

Operator realize(const MeasurementSymbol& m) { return m.coefficient * m.ket * m.bra.adjoint(); }

}  // namespace gqm
