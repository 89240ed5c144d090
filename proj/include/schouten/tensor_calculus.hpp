#pragma once

// Calculus of symmetric tensor fields: the graded bracket, divergence,
// contractions, the first-order covariant operations star/ast and their sum,
// the duality pairing, and the induced coadjoint action on covariant fields.
//
// Coordinate formulas are written against fully symmetric tensors, so every
// multi-index output is symmetrized explicitly: the component at a sorted
// index is the average of the raw formula over the distinct orderings of
// that index. Contractions over repeated indices run over sorted multisets
// weighted by multiplicity().

#include <functional>

#include "schouten/multiindex.hpp"
#include "schouten/symtensor.hpp"

namespace schouten {

namespace detail {

template <class S, bool Cov, class Gen>
SymTensorT<S, Cov> symmetrized(int dim, int order, Gen&& gen) {
  SymTensorT<S, Cov> out(dim, order);
  for (const MultiIndex& target : multisets(dim, order)) {
    std::vector<MultiIndex> arrs = arrangements(target);
    TrigPoly<S> acc(dim);
    for (const MultiIndex& arr : arrs) acc = acc + gen(arr);
    out.set_component(target,
                      acc.scaled(scalar_traits<S>::from_ratio(1, static_cast<long long>(arrs.size()))));
  }
  return out;
}

}  // namespace detail

/// Bracket of homogeneous symmetric multivector fields. Output order is
/// k + m - 1; two order-0 fields bracket to zero by convention. Extends the
/// Jacobi-Lie bracket of vector fields and the directional derivative.
template <class S>
SymTensor<S> schouten_bracket(const SymTensor<S>& X, const SymTensor<S>& Y) {
  detail::require(X.dim() == Y.dim(), "dimension mismatch");
  const int d = X.dim();
  const int k = X.order();
  const int m = Y.order();
  if (k + m == 0) return SymTensor<S>::zero(d, 0);

  auto raw = [&](const MultiIndex& t) {
    TrigPoly<S> acc(d);
    if (k >= 1) {
      MultiIndex y_idx(t.begin(), t.begin() + m);
      MultiIndex x_idx(t.begin() + m, t.end());
      x_idx.push_back(0);
      TrigPoly<S> term(d);
      for (int axis = 0; axis < d; ++axis) {
        x_idx.back() = axis;
        term = term + X.component(x_idx) * Y.component(y_idx).diff(axis);
      }
      acc = acc + term.scaled(scalar_traits<S>::from_int(k));
    }
    if (m >= 1) {
      MultiIndex x_idx(t.begin(), t.begin() + k);
      MultiIndex y_idx(t.begin() + k, t.end());
      y_idx.push_back(0);
      TrigPoly<S> term(d);
      for (int axis = 0; axis < d; ++axis) {
        y_idx.back() = axis;
        term = term + Y.component(y_idx) * X.component(x_idx).diff(axis);
      }
      acc = acc - term.scaled(scalar_traits<S>::from_int(m));
    }
    return acc;
  };
  return detail::symmetrized<S, false>(d, k + m - 1, raw);
}

/// Grade-wise bracket of graded fields. The output carries every grade that
/// arises; callers truncate explicitly if they need to.
template <class S>
SymTensorField<S> schouten_graded(const SymTensorField<S>& X, const SymTensorField<S>& Y) {
  detail::require(X.dim() == Y.dim(), "dimension mismatch");
  SymTensorField<S> out(X.dim());
  for (const auto& [k, Xk] : X.grades())
    for (const auto& [m, Ym] : Y.grades()) out.add_grade(schouten_bracket(Xk, Ym));
  return out;
}

/// Lie derivative of a symmetric multivector field along a vector field;
/// coincides with the bracket when the first argument has order 1.
template <class S>
SymTensor<S> lie_derivative(const SymTensor<S>& X, const SymTensor<S>& Y) {
  detail::require(X.order() == 1, "lie_derivative needs an order-1 field");
  return schouten_bracket(X, Y);
}

/// div X at order k is k * X^{l i2...ik}_{,l}; order 0 maps to zero.
template <class S>
SymTensor<S> divergence(const SymTensor<S>& X) {
  const int d = X.dim();
  const int k = X.order();
  if (k == 0) return SymTensor<S>::zero(d, 0);
  SymTensor<S> out(d, k - 1);
  for (const MultiIndex& target : multisets(d, k - 1)) {
    TrigPoly<S> acc(d);
    for (int axis = 0; axis < d; ++axis)
      acc = acc + X.component(sorted_with(target, axis)).diff(axis);
    out.set_component(target, acc.scaled(scalar_traits<S>::from_int(k)));
  }
  return out;
}

/// X contracted into A over all of X's indices, leaving a covariant tensor
/// of order m - k (full contraction k = m gives an order-0 covariant field).
template <class S>
SymCoTensor<S> cov_contract(const SymTensor<S>& X, const SymCoTensor<S>& A) {
  detail::require(X.dim() == A.dim(), "dimension mismatch");
  detail::require(X.order() <= A.order(), "contraction needs order(X) <= order(A)");
  const int d = X.dim();
  SymCoTensor<S> out(d, A.order() - X.order());
  for (const MultiIndex& target : multisets(d, A.order() - X.order())) {
    TrigPoly<S> acc(d);
    for (const MultiIndex& u : multisets(d, X.order())) {
      TrigPoly<S> prod = X.component(u) * A.component(sorted_merge(u, target));
      acc = acc + prod.scaled(scalar_traits<S>::from_int(multiplicity(u)));
    }
    out.set_component(target, acc);
  }
  return out;
}

/// A contracted into X over all of A's indices, leaving a contravariant
/// tensor of order k - m.
template <class S>
SymTensor<S> contra_contract(const SymTensor<S>& X, const SymCoTensor<S>& A) {
  detail::require(X.dim() == A.dim(), "dimension mismatch");
  detail::require(X.order() >= A.order(), "contraction needs order(X) >= order(A)");
  const int d = X.dim();
  SymTensor<S> out(d, X.order() - A.order());
  for (const MultiIndex& target : multisets(d, X.order() - A.order())) {
    TrigPoly<S> acc(d);
    for (const MultiIndex& u : multisets(d, A.order())) {
      TrigPoly<S> prod = A.component(u) * X.component(sorted_merge(u, target));
      acc = acc + prod.scaled(scalar_traits<S>::from_int(multiplicity(u)));
    }
    out.set_component(target, acc);
  }
  return out;
}

/// star(A, X) at output order m = order(A) - order(X) + 1:
/// m * A_{i1..i(m-1) j1..jk} (d/dq^im) X^{j1..jk}, symmetrized over i1..im.
/// Identically zero when m = 0.
template <class S>
SymCoTensor<S> star(const SymCoTensor<S>& A, const SymTensor<S>& X) {
  detail::require(X.dim() == A.dim(), "dimension mismatch");
  const int d = X.dim();
  const int k = X.order();
  const int m = A.order() - k + 1;
  detail::require(m >= 0, "star orders inconsistent");
  if (m == 0) return SymCoTensor<S>::zero(d, 0);

  auto raw = [&](const MultiIndex& t) {
    MultiIndex head(t.begin(), t.end() - 1);
    int deriv_axis = t.back();
    TrigPoly<S> acc(d);
    for (const MultiIndex& u : multisets(d, k)) {
      TrigPoly<S> prod = A.component(sorted_merge(head, u)) * X.component(u).diff(deriv_axis);
      acc = acc + prod.scaled(scalar_traits<S>::from_int(multiplicity(u)));
    }
    return acc.scaled(scalar_traits<S>::from_int(m));
  };
  return detail::symmetrized<S, true>(d, m, raw);
}

/// ast(X, A) at output order m = order(A) - order(X) + 1:
/// k * X^{j1..j(k-1) l} (d/dq^l) A_{i1..im j1..j(k-1)}. Identically zero when
/// order(X) = 0.
template <class S>
SymCoTensor<S> ast(const SymTensor<S>& X, const SymCoTensor<S>& A) {
  detail::require(X.dim() == A.dim(), "dimension mismatch");
  const int d = X.dim();
  const int k = X.order();
  const int m = A.order() - k + 1;
  detail::require(m >= 0, "ast orders inconsistent");
  SymCoTensor<S> out(d, m);
  if (k == 0) return out;

  for (const MultiIndex& target : multisets(d, m)) {
    TrigPoly<S> acc(d);
    for (const MultiIndex& u : multisets(d, k - 1)) {
      S w = scalar_traits<S>::from_int(multiplicity(u));
      MultiIndex a_idx = sorted_merge(target, u);
      for (int axis = 0; axis < d; ++axis) {
        TrigPoly<S> prod = X.component(sorted_with(u, axis)) * A.component(a_idx).diff(axis);
        acc = acc + prod.scaled(w);
      }
    }
    out.set_component(target, acc.scaled(scalar_traits<S>::from_int(k)));
  }
  return out;
}

/// Generalized Lie derivative star + ast; reduces to the classical covariant
/// Lie derivative at order(X) = 1 and to m * A sigma_{,im} at order(X) = 0.
template <class S>
SymCoTensor<S> gen_lie(const SymTensor<S>& X, const SymCoTensor<S>& A) {
  return star(A, X) + ast(X, A);
}

/// Multiply-and-integrate duality pairing of graded fields; grades beyond
/// either truncation contribute zero.
template <class S>
IntegralValue<S> pairing(const SymCovField<S>& A, const SymTensorField<S>& X) {
  detail::require(A.dim() == X.dim(), "dimension mismatch");
  const int d = X.dim();
  TrigPoly<S> density(d);
  for (const auto& [k, Ak] : A.grades()) {
    auto it = X.grades().find(k);
    if (it == X.grades().end()) continue;
    for (const auto& [idx, a] : Ak.components()) {
      TrigPoly<S> prod = a * it->second.component(idx);
      density = density + prod.scaled(scalar_traits<S>::from_int(multiplicity(idx)));
    }
  }
  return density.integrate();
}

/// Coadjoint action of a graded field on a covariant field, defined by
/// <coadjoint(X, A), Y> = <A, [Y, X]> and realized grade-wise as
/// gen_lie(X^k, A_{m+k-1}) + div X^k contracted into A_{m+k-1}.
/// Exact: no truncation is applied.
template <class S>
SymCovField<S> coadjoint(const SymTensorField<S>& X, const SymCovField<S>& A) {
  detail::require(X.dim() == A.dim(), "dimension mismatch");
  SymCovField<S> out(X.dim());
  for (const auto& [k, Xk] : X.grades()) {
    for (const auto& [ma, Am] : A.grades()) {
      if (ma - k + 1 < 0) continue;
      out.add_grade(gen_lie(Xk, Am));
      if (k >= 1) out.add_grade(cov_contract(divergence(Xk), Am));
    }
  }
  return out;
}

}  // namespace schouten
