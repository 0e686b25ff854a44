#include "gqm/algebra.hpp"

namespace gqm {

AlgebraElement::AlgebraElement(GroupoidPtr g) : groupoid_(std::move(g)) {
  if (!groupoid_) throw PreconditionError("algebra element needs a groupoid");
  coeffs_ = ComplexVector::Zero(static_cast<Eigen::Index>(groupoid_->transition_count()));
}

AlgebraElement::AlgebraElement(GroupoidPtr g, ComplexVector coeffs)
    : groupoid_(std::move(g)), coeffs_(std::move(coeffs)) {
  if (!groupoid_) throw PreconditionError("algebra element needs a groupoid");
  if (static_cast<std::size_t>(coeffs_.size()) != groupoid_->transition_count())
    throw BindingError("coefficient array has length " + std::to_string(coeffs_.size()) + " but the groupoid has " +
                       std::to_string(groupoid_->transition_count()) + " transitions");
}

Complex AlgebraElement::operator()(TransitionId t) const {
  groupoid_->check_transition(t);
  return coeffs_[static_cast<Eigen::Index>(t.index)];
}

Complex& AlgebraElement::operator[](TransitionId t) {
  groupoid_->check_transition(t);
  return coeffs_[static_cast<Eigen::Index>(t.index)];
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  require_same_groupoid(*this, other);
  coeffs_ += other.coeffs_;
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  require_same_groupoid(*this, other);
  coeffs_ -= other.coeffs_;
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(Complex s) {
  coeffs_ *= s;
  return *this;
}

AlgebraElement operator+(AlgebraElement lhs, const AlgebraElement& rhs) { return lhs += rhs; }
AlgebraElement operator-(AlgebraElement lhs, const AlgebraElement& rhs) { return lhs -= rhs; }
AlgebraElement operator-(AlgebraElement f) { return f *= -1.0; }
AlgebraElement operator*(Complex s, AlgebraElement f) { return f *= s; }

bool same_groupoid(const FiniteGroupoid& lhs, const FiniteGroupoid& rhs) {
  return &lhs == &rhs || structurally_equal(lhs, rhs);
}

void require_same_groupoid(const AlgebraElement& f, const AlgebraElement& g) {
  if (!same_groupoid(*f.groupoid(), *g.groupoid()))
    throw BindingError("elements are bound to different groupoids");
}

AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& g) {
  require_same_groupoid(f, g);
  return f.groupoid()->is_principal() ? convolve_matrix(f, g) : convolve_tabular(f, g);
}

AlgebraElement convolve_tabular(const AlgebraElement& f, const AlgebraElement& g) {
  require_same_groupoid(f, g);
  AlgebraElement out(f.groupoid());
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  auto& c = out.coeffs();
  for (const auto& e : f.groupoid()->compose_entries()) {
    c[static_cast<Eigen::Index>(e.result.index)] +=
        a[static_cast<Eigen::Index>(e.left.index)] * b[static_cast<Eigen::Index>(e.right.index)];
  }
  return out;
}

AlgebraElement convolve_matrix(const AlgebraElement& f, const AlgebraElement& g) {
  require_same_groupoid(f, g);
  const auto& G = *f.groupoid();
  if (!G.is_principal()) throw PreconditionError("matrix convolution needs a principal groupoid");
  const auto n = static_cast<Eigen::Index>(G.event_count());
  Operator F = Operator::Zero(n, n);
  Operator H = Operator::Zero(n, n);
  for (std::size_t i = 0; i < G.transition_count(); ++i) {
    const auto& tr = G.transition(TransitionId{i});
    const auto r = static_cast<Eigen::Index>(tr.target.index);
    const auto s = static_cast<Eigen::Index>(tr.source.index);
    F(r, s) = f.coeffs()[static_cast<Eigen::Index>(i)];
    H(r, s) = g.coeffs()[static_cast<Eigen::Index>(i)];
  }
  const Operator P = F * H;
  AlgebraElement out(f.groupoid());
  for (std::size_t i = 0; i < G.transition_count(); ++i) {
    const auto& tr = G.transition(TransitionId{i});
    out.coeffs()[static_cast<Eigen::Index>(i)] =
        P(static_cast<Eigen::Index>(tr.target.index), static_cast<Eigen::Index>(tr.source.index));
  }
  return out;
}

AlgebraElement involution(const AlgebraElement& f) {
  const auto& G = *f.groupoid();
  AlgebraElement out(f.groupoid());
  for (std::size_t i = 0; i < G.transition_count(); ++i) {
    const auto inv = G.inverse_of(TransitionId{i});
    out.coeffs()[static_cast<Eigen::Index>(i)] = std::conj(f.coeffs()[static_cast<Eigen::Index>(inv.index)]);
  }
  return out;
}

AlgebraElement unit(const GroupoidPtr& g) {
  AlgebraElement out(g);
  for (std::size_t a = 0; a < g->event_count(); ++a) out[g->unit_of(EventId{a})] = 1.0;
  return out;
}

AlgebraElement delta(const GroupoidPtr& g, TransitionId t) {
  AlgebraElement out(g);
  out[t] = 1.0;
  return out;
}

AlgebraElement distinguished(const GroupoidPtr& g, const Distinguished& which) {
  AlgebraElement out(g);
  auto mark = [&](auto&& ids) {
    for (auto t : ids) out[t] = 1.0;
  };
  std::visit(
      [&](const auto& w) {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, Incidence>) {
          out.coeffs().setOnes();
        } else if constexpr (std::is_same_v<W, CharIsotropy>) {
          mark(isotropy_group(*g, w.event));
        } else if constexpr (std::is_same_v<W, CharSprayPlus>) {
          mark(sprays(*g, w.event).g_plus);
        } else if constexpr (std::is_same_v<W, CharSprayMinus>) {
          mark(sprays(*g, w.event).g_minus);
        } else {
          out[w.transition] = 1.0;
        }
      },
      which);
  return out;
}

Complex pairing(const AlgebraElement& f, const AlgebraElement& x) {
  require_same_groupoid(f, x);
  return (f.coeffs().array() * x.coeffs().array()).sum();
}

AlgebraElement add(const AlgebraElement& f, const AlgebraElement& g) { return f + g; }
AlgebraElement scale(Complex s, const AlgebraElement& f) { return s * f; }

AlgebraElement commutator(const AlgebraElement& f, const AlgebraElement& g) {
  return convolve(f, g) - convolve(g, f);
}

Operator left_multiplication(const AlgebraElement& f) {
  const auto n = static_cast<Eigen::Index>(f.size());
  Operator L = Operator::Zero(n, n);
  for (const auto& e : f.groupoid()->compose_entries())
    L(static_cast<Eigen::Index>(e.result.index), static_cast<Eigen::Index>(e.right.index)) +=
        f.coeffs()[static_cast<Eigen::Index>(e.left.index)];
  return L;
}

Operator right_multiplication(const AlgebraElement& f) {
  const auto n = static_cast<Eigen::Index>(f.size());
  Operator R = Operator::Zero(n, n);
  for (const auto& e : f.groupoid()->compose_entries())
    R(static_cast<Eigen::Index>(e.result.index), static_cast<Eigen::Index>(e.left.index)) +=
        f.coeffs()[static_cast<Eigen::Index>(e.right.index)];
  return R;
}

double max_abs_diff(const AlgebraElement& f, const AlgebraElement& g) {
  require_same_groupoid(f, g);
  return f.size() == 0 ? 0.0 : (f.coeffs() - g.coeffs()).cwiseAbs().maxCoeff();
}

double max_abs(const AlgebraElement& f) { return f.size() == 0 ? 0.0 : f.coeffs().cwiseAbs().maxCoeff(); }

}  // namespace gqm
