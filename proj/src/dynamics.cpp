#include "gqm/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "gqm/representation.hpp"

namespace gqm {

namespace {

double hermiticity_defect(const Operator& a) { return a.size() == 0 ? 0.0 : (a - a.adjoint()).cwiseAbs().maxCoeff(); }

double scale_of(const Operator& a) { return a.size() == 0 ? 1.0 : std::max(1.0, a.cwiseAbs().maxCoeff()); }

AlgebraElement pull_back(const GroupoidPtr& g, const Operator& m) {
  AlgebraElement out(g);
  for (std::size_t i = 0; i < g->transition_count(); ++i) {
    const auto& tr = g->transition(TransitionId{i});
    out.coeffs()[static_cast<Eigen::Index>(i)] =
        m(static_cast<Eigen::Index>(tr.target.index), static_cast<Eigen::Index>(tr.source.index));
  }
  return out;
}

}  // namespace

Hamiltonian::Hamiltonian(AlgebraElement h) : h_(std::move(h)) {
  const double tol = 1e-12 * std::max(1.0, max_abs(h_));
  if (!is_observable(h_, tol)) throw PreconditionError("Hamiltonian must be an observable (h* = h)");
}

AlgebraElement derivation(const Hamiltonian& h, const AlgebraElement& f) {
  return kI * (convolve(f, h.element()) - convolve(h.element(), f));
}

Operator derivation_matrix(const Hamiltonian& h) {
  return kI * (right_multiplication(h.element()) - left_multiplication(h.element()));
}

Flow::Flow(const Hamiltonian& h) : groupoid_(h.groupoid()), d_(derivation_matrix(h)) {}

AlgebraElement Flow::operator()(double t, const AlgebraElement& f) const {
  if (!same_groupoid(*groupoid_, *f.groupoid())) throw BindingError("element and Hamiltonian live on different groupoids");
  if (t == 0.0) return f;
  const Operator e = (t * d_).exp();
  return {f.groupoid(), e * f.coeffs()};
}

AlgebraElement flow(const Hamiltonian& h, double t, const AlgebraElement& f) { return Flow(h)(t, f); }

AlgebraElement flow_by_conjugation(const Hamiltonian& h, double t, const AlgebraElement& f) {
  require_same_groupoid(h.element(), f);
  if (!f.groupoid()->is_principal()) throw PreconditionError("conjugation flow needs a principal groupoid");
  const Operator H = fundamental_rep(h.element());
  Eigen::SelfAdjointEigenSolver<Operator> es(0.5 * (H + H.adjoint()));
  const auto& V = es.eigenvectors();
  const ComplexVector phase = (kI * t * es.eigenvalues().cast<Complex>()).array().exp();
  const Operator forward = V * phase.asDiagonal() * V.adjoint();  // e^{iHt}
  const Operator A = forward.adjoint() * fundamental_rep(f) * forward;
  return pull_back(f.groupoid(), A);
}

std::vector<AlgebraElement> heisenberg_integrate(const Hamiltonian& h, const AlgebraElement& f0,
                                                 const std::vector<double>& t_grid, double step) {
  require_same_groupoid(h.element(), f0);
  if (!(step > 0.0)) throw ParameterError("integration step must be positive");
  if (t_grid.empty()) throw ParameterError("time grid is empty");
  for (std::size_t i = 1; i < t_grid.size(); ++i)
    if (!(t_grid[i] > t_grid[i - 1])) throw ParameterError("time grid must be strictly increasing");

  const Operator D = derivation_matrix(h);
  std::vector<AlgebraElement> out;
  out.reserve(t_grid.size());
  ComplexVector y = f0.coeffs();
  out.emplace_back(f0.groupoid(), y);
  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    const double span = t_grid[i] - t_grid[i - 1];
    const auto n = static_cast<long>(std::ceil(span / step - 1e-12));
    const double dt = span / static_cast<double>(std::max(1L, n));
    for (long s = 0; s < std::max(1L, n); ++s) {
      const ComplexVector k1 = D * y;
      const ComplexVector k2 = D * (y + 0.5 * dt * k1);
      const ComplexVector k3 = D * (y + 0.5 * dt * k2);
      const ComplexVector k4 = D * (y + dt * k3);
      y += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    out.emplace_back(f0.groupoid(), y);
  }
  return out;
}

DensityMatrix::DensityMatrix(Operator entries) : rho_(std::move(entries)) {
  if (rho_.rows() != rho_.cols() || rho_.rows() == 0) throw PreconditionError("density matrix must be square and nonempty");
  if (hermiticity_defect(rho_) > 1e-12) throw PreconditionError("density matrix is not self-adjoint");
  if (std::abs(rho_.trace() - 1.0) > 1e-12) throw PreconditionError("density matrix trace differs from 1");
  Eigen::SelfAdjointEigenSolver<Operator> es(0.5 * (rho_ + rho_.adjoint()), Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10) throw PreconditionError("density matrix has a negative eigenvalue");
}

DensityMatrix evolve_density(const Operator& H, const DensityMatrix& rho0, double t) {
  if (H.rows() != H.cols() || H.rows() != rho0.dim()) throw PreconditionError("Hamiltonian and density matrix dimensions differ");
  if (hermiticity_defect(H) > 1e-12 * scale_of(H)) throw PreconditionError("Hamiltonian operator is not self-adjoint");
  const Operator back = (Complex{0.0, -t} * H).exp();  // e^{−iHt}
  Operator rho = back * rho0.entries() * back.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(std::move(rho));
}

Operator density_rate(const Operator& H, const Operator& rho) { return kI * (rho * H - H * rho); }

State state_from_density(const GroupoidPtr& g, const DensityMatrix& rho) {
  if (!g->is_principal()) throw PreconditionError("density matrices identify with states only on principal groupoids");
  if (static_cast<std::size_t>(rho.dim()) != g->event_count())
    throw PreconditionError("density matrix dimension differs from the event count");
  ComplexVector w(static_cast<Eigen::Index>(g->transition_count()));
  for (std::size_t i = 0; i < g->transition_count(); ++i) {
    const auto& tr = g->transition(TransitionId{i});
    w[static_cast<Eigen::Index>(i)] =
        rho.entries()(static_cast<Eigen::Index>(tr.source.index), static_cast<Eigen::Index>(tr.target.index));
  }
  return {g, std::move(w)};
}

PositiveMapReport check_positive_normalized_map(const ElementMap& phi, const GroupoidPtr& g, int samples,
                                                std::uint64_t seed, double tol) {
  if (samples < 1) throw ParameterError("need at least one sample");
  if (tol < 0) throw ParameterError("tolerance must be nonnegative");
  PositiveMapReport r;
  const auto one = unit(g);
  r.normalization_defect = max_abs_diff(phi(one), one);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    AlgebraElement f(g);
    for (auto& c : f.coeffs()) c = Complex{u(rng), u(rng)};
    const Operator A = fundamental_rep(phi(convolve(involution(f), f)));
    Eigen::SelfAdjointEigenSolver<Operator> es(0.5 * (A + A.adjoint()), Eigen::EigenvaluesOnly);
    const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    worst = std::min(worst, es.eigenvalues().minCoeff() / scale);
    worst = std::min(worst, -hermiticity_defect(A) / scale);
  }
  r.worst_min_eigenvalue = worst;
  r.passed = r.normalization_defect <= tol && worst >= -tol;
  return r;
}

}  // namespace gqm
