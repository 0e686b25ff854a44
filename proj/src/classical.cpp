#include "gqm/classical.hpp"

#include <cmath>
#include <cstdio>

#include <unsupported/Eigen/MatrixFunctions>

namespace gqm {

bool is_classical(const AlgebraElement& f, double tol) {
  if (tol < 0) throw ParameterError("tolerance must be nonnegative");
  const auto& g = *f.groupoid();
  for (std::size_t i = 0; i < g.transition_count(); ++i) {
    const TransitionId t{i};
    if (!g.is_unit(t) && std::abs(f(t)) > tol) return false;
  }
  return true;
}

ComplexVector unit_values(const AlgebraElement& f) {
  const auto& g = *f.groupoid();
  ComplexVector v(static_cast<Eigen::Index>(g.event_count()));
  for (std::size_t a = 0; a < g.event_count(); ++a) v[static_cast<Eigen::Index>(a)] = f(g.unit_of(EventId{a}));
  return v;
}

Kernel kernel_from_hamiltonian(const FiniteGroupoid& g, const AlgebraElement& h1) {
  if (!same_groupoid(g, *h1.groupoid())) throw BindingError("h1 is bound to a different groupoid");
  const auto n = static_cast<Eigen::Index>(g.event_count());
  Kernel out{RealMatrix::Zero(n, n)};
  for (std::size_t i = 0; i < g.transition_count(); ++i) {
    const TransitionId t{i};
    const Complex c = h1(t);
    if (g.is_unit(t)) {
      if (c != Complex{0.0}) throw PreconditionError("h1 must vanish on units (transition " + std::to_string(i) + ")");
      continue;
    }
    const auto x = static_cast<Eigen::Index>(g.source(t).index);
    const auto y = static_cast<Eigen::Index>(g.target(t).index);
    if (x == y) continue;  // isotropy loops do not move probability
    out.k(x, y) += -2.0 * c.imag();
  }
  return out;
}

GeneratorMode parse_generator_mode(const std::string& name) {
  if (name == "paper_literal") return GeneratorMode::paper_literal;
  if (name == "symmetric_rates") return GeneratorMode::symmetric_rates;
  throw ParameterError("unknown generator mode '" + name + "' (expected paper_literal or symmetric_rates)");
}

const char* to_string(GeneratorMode mode) {
  return mode == GeneratorMode::paper_literal ? "paper_literal" : "symmetric_rates";
}

MarkovGenerator markov_generator(const Kernel& kernel, GeneratorMode mode) {
  if (kernel.k.rows() != kernel.k.cols()) throw PreconditionError("kernel must be square");
  RealMatrix r = mode == GeneratorMode::symmetric_rates ? RealMatrix(kernel.k.cwiseAbs()) : kernel.k;
  r.diagonal().setZero();
  MarkovGenerator out;
  out.K = r;
  out.K.diagonal() -= r.rowwise().sum();
  out.conservation_defect = out.K.size() == 0 ? 0.0 : out.K.colwise().sum().cwiseAbs().maxCoeff();
  if (out.conservation_defect > 1e-12) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "column sums of K are not zero (max |sum| = %.3e); probability is not conserved",
                  out.conservation_defect);
    out.warning = buf;
  }
  return out;
}

std::vector<ClassicalObservable> classical_evolve(const MarkovGenerator& K, const ClassicalObservable& p0,
                                                  const std::vector<double>& t_grid) {
  if (p0.size() != K.K.rows()) throw PreconditionError("initial vector length differs from the generator dimension");
  std::vector<ClassicalObservable> out;
  out.reserve(t_grid.size());
  for (double tau : t_grid) {
    if (tau == 0.0) {
      out.push_back(p0);
      continue;
    }
    const RealMatrix e = (tau * K.K).exp();
    out.emplace_back(e * p0);
  }
  return out;
}

double rescale_time(double t, double epsilon) {
  if (!(epsilon > 0.0)) throw ParameterError("time rescaling needs epsilon > 0");
  return epsilon * t;
}

}  // namespace gqm
