#pragma once

// Matched-pair structure of the graded tensor-field algebra. The two
// complementary subalgebras are the fluid block (grades 0 and 1, a scalar
// plus a vector field, semidirect structure of compressible flow) and the
// higher block (grades >= 2, the kinetic-moment tensors). Closed forms for
// the mutual actions and all four dual/cross actions are implemented here;
// unit tests pin each one against its defining pairing relation.

#include "schouten/matched_pair.hpp"
#include "schouten/tensor_calculus.hpp"

namespace schouten {

template <class S>
using TensorMatchedElement = MatchedElement<SymTensorField<S>, SymTensorField<S>>;
template <class S>
using TensorMatchedDual = MatchedDual<SymCovField<S>, SymCovField<S>>;

template <class S, bool Cov>
SymFieldT<S, Cov> grade_range(const SymFieldT<S, Cov>& f, int lo, int hi) {
  SymFieldT<S, Cov> out(f.dim());
  for (const auto& [k, t] : f.grades())
    if (k >= lo && k <= hi) out.set_grade(k, t);
  return out;
}

template <class S, bool Cov>
SymFieldT<S, Cov> fluid_part(const SymFieldT<S, Cov>& f) {
  return grade_range(f, 0, 1);
}

template <class S, bool Cov>
SymFieldT<S, Cov> higher_part(const SymFieldT<S, Cov>& f) {
  constexpr int unbounded = 1 << 20;
  return grade_range(f, 2, unbounded);
}

template <class S>
TensorMatchedElement<S> split_field(const SymTensorField<S>& f) {
  return {fluid_part(f), higher_part(f)};
}

template <class S>
TensorMatchedDual<S> split_dual(const SymCovField<S>& a) {
  return {fluid_part(a), higher_part(a)};
}

template <class S, bool Cov>
SymFieldT<S, Cov> merge_parts(const SymFieldT<S, Cov>& g, const SymFieldT<S, Cov>& h) {
  return g + h;
}

/// Left action of the higher block on the fluid block: X |> (sigma, Y) has
/// only a grade-1 part, the bracket of the grade-2 tensor with sigma.
template <class S>
SymTensorField<S> act_on_fluid(const SymTensorField<S>& higher, const SymTensorField<S>& fluid) {
  detail::require(higher.dim() == fluid.dim(), "dimension mismatch");
  SymTensorField<S> out(higher.dim());
  out.add_grade(schouten_bracket(higher.grade(2), fluid.grade(0)));
  return out;
}

/// Right action: grade k of X <| (sigma, Y) is [X^{k+1}, sigma] - L_Y X^k.
template <class S>
SymTensorField<S> act_on_higher(const SymTensorField<S>& higher, const SymTensorField<S>& fluid) {
  detail::require(higher.dim() == fluid.dim(), "dimension mismatch");
  SymTensorField<S> out(higher.dim());
  const SymTensor<S> sigma = fluid.grade(0);
  const SymTensor<S> Y = fluid.grade(1);
  int kmax = higher.max_order();
  for (int k = 2; k <= kmax; ++k) {
    out.add_grade(schouten_bracket(higher.grade(k + 1), sigma) -
                  schouten_bracket(Y, higher.grade(k)));
  }
  return out;
}

/// mu <|* X for fluid momenta mu = (rho, M): a single grade-0 output,
/// -(X^2 ast M + div X^2 contracted into M).
template <class S>
SymCovField<S> dual_action_on_fluid(const SymCovField<S>& mu, const SymTensorField<S>& higher) {
  detail::require(mu.dim() == higher.dim(), "dimension mismatch");
  SymCovField<S> out(mu.dim());
  const SymTensor<S> X2 = higher.grade(2);
  const SymCoTensor<S> M = mu.grade(1);
  out.add_grade(-(ast(X2, M) + cov_contract(divergence(X2), M)));
  return out;
}

/// (sigma, Y) |>* nu for higher momenta: grade m picks up L_Y nu_m plus
/// div Y nu_m, and for m >= 3 additionally nu_{m-1} star sigma.
template <class S>
SymCovField<S> dual_action_on_higher(const SymTensorField<S>& fluid, const SymCovField<S>& nu) {
  detail::require(fluid.dim() == nu.dim(), "dimension mismatch");
  SymCovField<S> out(nu.dim());
  const SymTensor<S> sigma = fluid.grade(0);
  const SymTensor<S> Y = fluid.grade(1);
  const SymTensor<S> divY = divergence(Y);
  for (const auto& [m, num] : nu.grades()) {
    if (m < 2) continue;
    out.add_grade(gen_lie(Y, num) + cov_contract(divY, num));
    out.add_grade(star(num, sigma));
  }
  return out;
}

/// a*_X nu: the fluid-dual trace of the right action, grades 0 and 1.
template <class S>
SymCovField<S> cross_to_fluid_dual(const SymTensorField<S>& higher, const SymCovField<S>& nu) {
  detail::require(higher.dim() == nu.dim(), "dimension mismatch");
  SymCovField<S> out(nu.dim());
  for (const auto& [k, nuk] : nu.grades()) {
    if (k < 2) continue;
    const SymTensor<S> Xk1 = higher.grade(k + 1);
    const SymTensor<S> Xk = higher.grade(k);
    out.add_grade(-(ast(Xk1, nuk) + cov_contract(divergence(Xk1), nuk)));
    out.add_grade(-(gen_lie(Xk, nuk) + cov_contract(divergence(Xk), nuk)));
  }
  return out;
}

/// b*_{(sigma,Y)} mu = M star sigma, a single grade-2 output.
template <class S>
SymCovField<S> cross_to_higher_dual(const SymTensorField<S>& fluid, const SymCovField<S>& mu) {
  detail::require(fluid.dim() == mu.dim(), "dimension mismatch");
  SymCovField<S> out(mu.dim());
  out.add_grade(star(mu.grade(1), fluid.grade(0)));
  return out;
}

/// Subalgebra-level coadjoint actions: the full coadjoint action followed by
/// projection onto the respective dual grading.
template <class S>
SymCovField<S> coad_fluid(const SymTensorField<S>& xi, const SymCovField<S>& mu) {
  return fluid_part(coadjoint(xi, mu));
}

template <class S>
SymCovField<S> coad_higher(const SymTensorField<S>& eta, const SymCovField<S>& nu) {
  return higher_part(coadjoint(eta, nu));
}

template <class S>
MatchedActions<SymTensorField<S>, SymTensorField<S>> tensor_matched_actions() {
  MatchedActions<SymTensorField<S>, SymTensorField<S>> acts;
  acts.bracket_g = [](const SymTensorField<S>& a, const SymTensorField<S>& b) {
    return schouten_graded(a, b);
  };
  acts.bracket_h = acts.bracket_g;
  acts.left = [](const SymTensorField<S>& eta, const SymTensorField<S>& xi) {
    return act_on_fluid(eta, xi);
  };
  acts.right = [](const SymTensorField<S>& eta, const SymTensorField<S>& xi) {
    return act_on_higher(eta, xi);
  };
  return acts;
}

template <class S>
MatchedDualOps<SymTensorField<S>, SymTensorField<S>, SymCovField<S>, SymCovField<S>>
tensor_matched_dual_ops() {
  MatchedDualOps<SymTensorField<S>, SymTensorField<S>, SymCovField<S>, SymCovField<S>> ops;
  ops.coad_g = [](const SymTensorField<S>& xi, const SymCovField<S>& mu) {
    return coad_fluid(xi, mu);
  };
  ops.coad_h = [](const SymTensorField<S>& eta, const SymCovField<S>& nu) {
    return coad_higher(eta, nu);
  };
  ops.dual_left = [](const SymCovField<S>& mu, const SymTensorField<S>& eta) {
    return dual_action_on_fluid(mu, eta);
  };
  ops.dual_right = [](const SymTensorField<S>& xi, const SymCovField<S>& nu) {
    return dual_action_on_higher(xi, nu);
  };
  ops.cross_a = [](const SymTensorField<S>& eta, const SymCovField<S>& nu) {
    return cross_to_fluid_dual(eta, nu);
  };
  ops.cross_b = [](const SymTensorField<S>& xi, const SymCovField<S>& mu) {
    return cross_to_higher_dual(xi, mu);
  };
  return ops;
}

}  // namespace schouten
