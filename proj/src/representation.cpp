#include "gqm/representation.hpp"

#include <Eigen/Eigenvalues>

namespace gqm {

Operator fundamental_rep(const AlgebraElement& f) {
  const auto& G = *f.groupoid();
  const auto n = static_cast<Eigen::Index>(G.event_count());
  Operator A = Operator::Zero(n, n);
  for (std::size_t i = 0; i < G.transition_count(); ++i) {
    const auto& tr = G.transition(TransitionId{i});
    A(static_cast<Eigen::Index>(tr.target.index), static_cast<Eigen::Index>(tr.source.index)) +=
        f.coeffs()[static_cast<Eigen::Index>(i)];
  }
  return A;
}

Complex amplitude(const AlgebraElement& f, EventId a, EventId a_prime) {
  Complex sum = 0.0;
  for (auto t : f.groupoid()->between(a, a_prime)) sum += f(t);
  return sum;
}

Complex expected_value(const AlgebraElement& f, EventId a) { return amplitude(f, a, a); }

double operator_norm(const Operator& a) {
  if (a.size() == 0) return 0.0;
  const Operator gram = a.adjoint() * a;
  Eigen::SelfAdjointEigenSolver<Operator> es(gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

NormReport cstar_norm(const AlgebraElement& f) {
  NormReport r;
  r.value = operator_norm(fundamental_rep(f));
  r.faithful = f.groupoid()->is_principal();
  r.method = "largest singular value of the fundamental representation";
  if (!r.faithful) r.method += " (seminorm: representation not faithful on this groupoid)";
  return r;
}

bool is_observable(const AlgebraElement& f, double tol) {
  if (tol < 0) throw ParameterError("tolerance must be nonnegative");
  return max_abs_diff(f, involution(f)) <= tol;
}

AlgebraElement element_from_operator(const GroupoidPtr& g, const Operator& m) {
  if (!g->is_principal()) throw PreconditionError("fundamental representation is not invertible on this groupoid");
  const auto n = static_cast<Eigen::Index>(g->event_count());
  if (m.rows() != n || m.cols() != n) throw PreconditionError("operator dimension does not match the event count");
  AlgebraElement out(g);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index s = 0; s < n; ++s) {
      const auto ts = g->between(EventId{static_cast<std::size_t>(s)}, EventId{static_cast<std::size_t>(r)});
      if (ts.empty()) {
        if (m(r, s) != Complex{0.0})
          throw PreconditionError("operator has support on (" + std::to_string(r) + "," + std::to_string(s) +
                                  ") where the groupoid has no transition");
        continue;
      }
      out[ts.front()] = m(r, s);
    }
  }
  return out;
}

}  // namespace gqm
