#include "gqm/states.hpp"

#include <algorithm>
#include <map>

#include <Eigen/Eigenvalues>

namespace gqm {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

}  // namespace

State::State(GroupoidPtr g, ComplexVector weights) : groupoid_(std::move(g)), weights_(std::move(weights)) {
  if (!groupoid_) throw PreconditionError("state needs a groupoid");
  if (static_cast<std::size_t>(weights_.size()) != groupoid_->transition_count())
    throw BindingError("state has " + std::to_string(weights_.size()) + " weights but the groupoid has " +
                       std::to_string(groupoid_->transition_count()) + " transitions");
}

Complex State::operator()(const AlgebraElement& f) const {
  if (!same_groupoid(*groupoid_, *f.groupoid())) throw BindingError("state and element live on different groupoids");
  return (weights_.array() * f.coeffs().array()).sum();
}

State rho_event(const GroupoidPtr& g, EventId a) {
  ComplexVector w = ComplexVector::Zero(idx(g->transition_count()));
  w[idx(g->unit_of(a).index)] = 1.0;
  return {g, std::move(w)};
}

State rho_inner(const GroupoidPtr& g, EventId a) {
  const auto iso = isotropy_group(*g, a);
  ComplexVector w = ComplexVector::Zero(idx(g->transition_count()));
  for (auto t : iso) w[idx(t.index)] = 1.0 / static_cast<double>(iso.size());
  return {g, std::move(w)};
}

Operator gram_matrix(const State& rho) {
  const auto& G = *rho.groupoid();
  const auto n = idx(G.transition_count());
  Operator M = Operator::Zero(n, n);
  for (const auto& e : G.compose_entries()) {
    // δ_α* ⋆ δ_β = δ_{α⁻¹∘β}; e.left plays α⁻¹.
    const auto alpha = G.inverse_of(e.left);
    M(idx(alpha.index), idx(e.right.index)) = rho.weights()[idx(e.result.index)];
  }
  return M;
}

StateCheck is_state(const State& rho, double tol) {
  if (tol < 0) throw ParameterError("tolerance must be nonnegative");
  StateCheck c;
  c.normalization_defect = std::abs(rho(unit(rho.groupoid())) - 1.0);
  const Operator M = gram_matrix(rho);
  c.hermiticity_defect = M.size() == 0 ? 0.0 : (M - M.adjoint()).cwiseAbs().maxCoeff();
  const Operator hermitian = 0.5 * (M + M.adjoint());
  Eigen::SelfAdjointEigenSolver<Operator> es(hermitian, Eigen::EigenvaluesOnly);
  c.min_eigenvalue = es.eigenvalues().minCoeff();
  c.ok = c.normalization_defect <= tol && c.hermiticity_defect <= tol && c.min_eigenvalue >= -std::max(tol, 1e-10);
  return c;
}

Operator GnsData::represent(const AlgebraElement& f) const {
  if (!same_groupoid(*groupoid, *f.groupoid())) throw BindingError("element is not bound to the GNS groupoid");
  return quotient_map * left_multiplication(f) * lift;
}

ComplexVector GnsData::project(const AlgebraElement& f) const {
  if (!same_groupoid(*groupoid, *f.groupoid())) throw BindingError("element is not bound to the GNS groupoid");
  return quotient_map * f.coeffs();
}

GnsData gns_construct(const State& rho, double rel_threshold) {
  const auto check = is_state(rho);
  if (!check.ok)
    throw PreconditionError("GNS construction needs a state (normalization defect " +
                            std::to_string(check.normalization_defect) + ", min Gram eigenvalue " +
                            std::to_string(check.min_eigenvalue) + ")");
  const Operator M = gram_matrix(rho);
  Eigen::SelfAdjointEigenSolver<Operator> es(0.5 * (M + M.adjoint()));
  const auto& lambda = es.eigenvalues();
  const auto& V = es.eigenvectors();
  const double largest = lambda.cwiseAbs().maxCoeff();
  const double cut = rel_threshold * largest;

  std::vector<Eigen::Index> range;
  std::vector<Eigen::Index> null;
  for (Eigen::Index k = 0; k < lambda.size(); ++k) (lambda[k] > cut ? range : null).push_back(k);

  GnsData d;
  d.groupoid = rho.groupoid();
  d.dim = range.size();
  const auto n = M.rows();
  const auto r = static_cast<Eigen::Index>(range.size());
  d.ideal_basis.resize(n, static_cast<Eigen::Index>(null.size()));
  for (std::size_t k = 0; k < null.size(); ++k) d.ideal_basis.col(idx(k)) = V.col(null[k]);
  d.quotient_map.resize(r, n);
  d.lift.resize(n, r);
  for (Eigen::Index k = 0; k < r; ++k) {
    const double s = std::sqrt(lambda[range[static_cast<std::size_t>(k)]]);
    d.quotient_map.row(k) = s * V.col(range[static_cast<std::size_t>(k)]).adjoint();
    d.lift.col(k) = V.col(range[static_cast<std::size_t>(k)]) / s;
  }
  d.inner_product = Operator::Identity(r, r);
  d.cyclic_vector = d.quotient_map * unit(rho.groupoid()).coeffs();
  return d;
}

Operator fundamental_intertwiner(const GnsData& gns, EventId a) {
  const auto& G = *gns.groupoid;
  if (!G.is_principal() || !is_connected(G))
    throw PreconditionError("intertwiner needs a connected principal groupoid");
  const auto n = idx(G.event_count());
  if (static_cast<Eigen::Index>(gns.dim) != n) throw PreconditionError("GNS dimension differs from the event count");
  Operator U(n, n);
  for (Eigen::Index b = 0; b < n; ++b) {
    const auto t = G.between(a, EventId{static_cast<std::size_t>(b)}).front();
    U.row(b) = gns.quotient_map.col(idx(t.index)).adjoint();
  }
  return U;
}

const Operator& IsotropyAction::of(TransitionId gamma) const {
  const auto it = std::find(group.begin(), group.end(), gamma);
  if (it == group.end()) throw RangeError("transition " + std::to_string(gamma.index) + " is not in the isotropy group");
  return matrices[static_cast<std::size_t>(it - group.begin())];
}

IsotropyAction isotropy_action(const FiniteGroupoid& g, EventId a) {
  IsotropyAction act;
  act.basis = sprays(g, a).g_plus;
  act.group = isotropy_group(g, a);
  std::map<TransitionId, Eigen::Index> pos;
  for (std::size_t i = 0; i < act.basis.size(); ++i) pos[act.basis[i]] = idx(i);
  const auto k = idx(act.basis.size());
  for (auto gamma : act.group) {
    Operator mu = Operator::Zero(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
      const auto moved = g.compose(act.basis[static_cast<std::size_t>(i)], gamma);
      if (!moved) throw PreconditionError("groupoid tables are not closed under the isotropy action");
      mu(i, pos.at(*moved)) = 1.0;
    }
    act.matrices.push_back(std::move(mu));
  }
  return act;
}

Operator trivial_component_projector(const FiniteGroupoid& g, EventId a) {
  const auto act = isotropy_action(g, a);
  const auto k = idx(act.basis.size());
  Operator P = Operator::Zero(k, k);
  for (const auto& mu : act.matrices) P += mu;
  return P / static_cast<double>(act.group.size());
}

IsometrySides theorem1_isometry(const GroupoidPtr& g, EventId a, const ComplexVector& phi, const ComplexVector& psi) {
  const auto reach = orbit(*g, a);
  if (reach.size() != g->event_count()) {
    std::string missing;
    for (std::size_t b = 0; b < g->event_count(); ++b) {
      if (std::find(reach.begin(), reach.end(), EventId{b}) != reach.end()) continue;
      missing += (missing.empty() ? "" : ", ") + std::to_string(b);
    }
    throw ComponentError("groupoid is not connected: events {" + missing + "} are outside the orbit of " +
                         std::to_string(a.index));
  }
  const auto act = isotropy_action(*g, a);
  const auto k = idx(act.basis.size());
  if (phi.size() != k || psi.size() != k)
    throw PreconditionError("functions on G+(a) must have " + std::to_string(k) + " entries");

  const double order = static_cast<double>(act.group.size());
  Operator sum = Operator::Zero(k, k);
  for (const auto& mu : act.matrices) sum += mu;
  const ComplexVector phi_avg = sum * phi / std::sqrt(order);
  const ComplexVector psi_avg = sum * psi / std::sqrt(order);

  AlgebraElement phi_el(g);
  AlgebraElement psi_el(g);
  for (Eigen::Index i = 0; i < k; ++i) {
    phi_el[act.basis[static_cast<std::size_t>(i)]] = phi_avg[i];
    psi_el[act.basis[static_cast<std::size_t>(i)]] = psi_avg[i];
  }
  IsometrySides out;
  out.lhs = rho_event(g, a)(convolve(involution(phi_el), psi_el));

  out.rhs = 0.0;
  for (std::size_t b = 0; b < g->event_count(); ++b) {
    const auto t = g->between(a, EventId{b}).front();
    out.rhs += std::conj(std::sqrt(order) * phi_el(t)) * (std::sqrt(order) * psi_el(t));
  }
  return out;
}

}  // namespace gqm
