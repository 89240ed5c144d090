#pragma once

// Bridge between symmetric tensor fields and Hamiltonian vector fields on
// T*T^d. A graded field lifts to a momentum polynomial (grade k becomes
// p-degree k); minus the Hamiltonian vector field of that lift is the
// cotangent lift, a Lie algebra homomorphism onto the polynomial-generated
// Hamiltonian fields. Its dual fiber-integrates a Gaussian-weighted one-form
// into the hierarchy of covariant moment tensors.
//
// Sign conventions, fixed once and used everywhere:
//   {f,g}  = sum_i (df/dq^i dg/dp_i - df/dp_i dg/dq^i)
//   X_h    = sum_i (dh/dp_i) d/dq^i - (dh/dq^i) d/dp_i
//   alg bracket on vector fields = minus the Jacobi-Lie bracket
// Under this pair, [X_h, X_f]_alg = X_{{h,f}} and the lift is an
// anti-homomorphism into the Poisson algebra.

#include <concepts>
#include <optional>
#include <vector>

#include "schouten/phase.hpp"
#include "schouten/tensor_calculus.hpp"

namespace schouten {

namespace detail {

/// Dense Gauss-Jordan inverse with exact pivoting; throws on singular input.
template <class S>
std::vector<std::vector<S>> invert_matrix(std::vector<std::vector<S>> a) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<S>> inv(n, std::vector<S>(n, scalar_traits<S>::from_int(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = scalar_traits<S>::from_int(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (!scalar_traits<S>::is_zero(a[r][col])) {
        pivot = r;
        break;
      }
    }
    require(pivot >= 0, "singular moment system");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    S p = a[col][col];
    for (int c = 0; c < n; ++c) {
      a[col][c] = a[col][c] / p;
      inv[col][c] = inv[col][c] / p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || scalar_traits<S>::is_zero(a[r][col])) continue;
      S f = a[r][col];
      for (int c = 0; c < n; ++c) {
        a[r][c] = a[r][c] - f * a[col][c];
        inv[r][c] = inv[r][c] - f * inv[col][c];
      }
    }
  }
  return inv;
}

}  // namespace detail

/// Vector field on T*T^d with momentum-polynomial coefficients. When it was
/// built from a generator the generator is kept: components equal
/// gen_sign * X_{generator}, which is a testable invariant. Equality compares
/// components only.
template <class S>
struct HamVF {
  int dim = 1;
  std::vector<PhaseFunction<S>> dq;  // coefficients of d/dq^i
  std::vector<PhaseFunction<S>> dp;  // coefficients of d/dp_i
  std::optional<PhaseFunction<S>> generator;
  int gen_sign = 1;

  HamVF() : dq(1, PhaseFunction<S>(1)), dp(1, PhaseFunction<S>(1)) {}
  explicit HamVF(int d)
      : dim(d), dq(d, PhaseFunction<S>(d)), dp(d, PhaseFunction<S>(d)) {
    detail::require(d >= 1, "dim must be >= 1");
  }

  bool is_zero() const {
    for (const auto& f : dq)
      if (!f.is_zero()) return false;
    for (const auto& f : dp)
      if (!f.is_zero()) return false;
    return true;
  }

  /// generator scaled by the stored sign, so components == X_{signed}.
  std::optional<PhaseFunction<S>> signed_generator() const {
    if (!generator) return std::nullopt;
    return gen_sign == 1 ? *generator : generator->scaled(scalar_traits<S>::from_int(-1));
  }

  HamVF operator+(const HamVF& o) const {
    detail::require(dim == o.dim, "dimension mismatch");
    HamVF out(dim);
    for (int i = 0; i < dim; ++i) {
      out.dq[i] = dq[i] + o.dq[i];
      out.dp[i] = dp[i] + o.dp[i];
    }
    auto a = signed_generator();
    auto b = o.signed_generator();
    if (a && b) out.generator = *a + *b;
    return out;
  }

  HamVF operator-(const HamVF& o) const { return *this + (-o); }

  HamVF operator-() const {
    HamVF out(dim);
    for (int i = 0; i < dim; ++i) {
      out.dq[i] = -dq[i];
      out.dp[i] = -dp[i];
    }
    if (auto g = signed_generator()) out.generator = -*g;
    return out;
  }

  HamVF scaled(const S& s) const {
    HamVF out(dim);
    for (int i = 0; i < dim; ++i) {
      out.dq[i] = dq[i].scaled(s);
      out.dp[i] = dp[i].scaled(s);
    }
    if (auto g = signed_generator()) out.generator = g->scaled(s);
    return out;
  }

  PhaseFunction<S> phase_divergence() const {
    PhaseFunction<S> acc(dim);
    for (int i = 0; i < dim; ++i) acc = acc + dq[i].diff_q(i) + dp[i].diff_p(i);
    return acc;
  }

  bool operator==(const HamVF& o) const { return dim == o.dim && dq == o.dq && dp == o.dp; }
};

/// Lift of a graded field to its momentum polynomial: grade k contributes
/// X^{i1..ik}(q) p_{i1}..p_{ik}, so mult(J) X[J] p^deg(J) per sorted index.
template <class S>
PhaseFunction<S> momentum_lift(const SymTensorField<S>& X) {
  PhaseFunction<S> out(X.dim());
  for (const auto& [k, Xk] : X.grades())
    for (const auto& [idx, f] : Xk.components())
      out.add_term(degree_vector(idx, X.dim()),
                   f.scaled(scalar_traits<S>::from_int(multiplicity(idx))));
  return out;
}

/// Inverse of momentum_lift on its image (the lift is injective here).
template <class S>
SymTensorField<S> momentum_unlift(const PhaseFunction<S>& h) {
  SymTensorField<S> out(h.dim());
  for (const auto& [alpha, f] : h.terms()) {
    MultiIndex idx = index_from_degrees(alpha);
    SymTensor<S> t(h.dim(), static_cast<int>(idx.size()));
    t.set_component(idx, f.scaled(scalar_traits<S>::from_ratio(1, multiplicity(idx))));
    out.add_grade(t);
  }
  return out;
}

template <class S>
HamVF<S> hamiltonian_vf(const PhaseFunction<S>& h) {
  HamVF<S> out(h.dim());
  for (int i = 0; i < h.dim(); ++i) {
    out.dq[i] = h.diff_p(i);
    out.dp[i] = -h.diff_q(i);
  }
  out.generator = h;
  out.gen_sign = 1;
  return out;
}

template <class S>
PhaseFunction<S> poisson(const PhaseFunction<S>& f, const PhaseFunction<S>& g) {
  detail::require(f.dim() == g.dim(), "dimension mismatch");
  PhaseFunction<S> out(f.dim());
  for (int i = 0; i < f.dim(); ++i)
    out = out + f.diff_q(i) * g.diff_p(i) - f.diff_p(i) * g.diff_q(i);
  return out;
}

/// Cotangent lift: minus the Hamiltonian vector field of the momentum lift.
template <class S>
HamVF<S> cotangent_lift(const SymTensorField<S>& X) {
  PhaseFunction<S> h = momentum_lift(X);
  HamVF<S> out = -hamiltonian_vf(h);
  out.generator = h;
  out.gen_sign = -1;
  return out;
}

/// Tensor-field preimage of a generated vector field under the cotangent
/// lift: components == -X_{lift(result)}.
template <class S>
SymTensorField<S> tensor_preimage(const HamVF<S>& X) {
  auto g = X.signed_generator();
  detail::require(g.has_value(), "missing generator");
  return momentum_unlift(-*g);
}

/// Coordinate Jacobi-Lie bracket on T*T^d. The generator is not propagated;
/// whether the bracket of two generated fields is again generated is exactly
/// the correspondence the tests verify, so it is never assumed here.
template <class S>
HamVF<S> jacobi_lie(const HamVF<S>& X, const HamVF<S>& Y) {
  detail::require(X.dim == Y.dim, "dimension mismatch");
  const int d = X.dim;
  HamVF<S> out(d);
  for (int i = 0; i < d; ++i) {
    PhaseFunction<S> q_acc(d);
    PhaseFunction<S> p_acc(d);
    for (int j = 0; j < d; ++j) {
      q_acc = q_acc + X.dq[j] * Y.dq[i].diff_q(j) + X.dp[j] * Y.dq[i].diff_p(j) -
              Y.dq[j] * X.dq[i].diff_q(j) - Y.dp[j] * X.dq[i].diff_p(j);
      p_acc = p_acc + X.dq[j] * Y.dp[i].diff_q(j) + X.dp[j] * Y.dp[i].diff_p(j) -
              Y.dq[j] * X.dp[i].diff_q(j) - Y.dp[j] * X.dp[i].diff_p(j);
    }
    out.dq[i] = q_acc;
    out.dp[i] = p_acc;
  }
  return out;
}

/// Algebra bracket of the diffeomorphism picture: minus Jacobi-Lie.
template <class S>
HamVF<S> alg_bracket(const HamVF<S>& X, const HamVF<S>& Y) {
  return -jacobi_lie(X, Y);
}

/// Split a generated field by momentum degree of its generator: degrees 0,1
/// form the fluid-type part, degrees >= 2 the higher part. The constant mode
/// (kernel of the generator correspondence) is dropped.
template <class S>
std::pair<HamVF<S>, HamVF<S>> decompose_ham(const HamVF<S>& X) {
  auto g = X.signed_generator();
  detail::require(g.has_value(), "missing generator");
  const int d = X.dim;
  PhaseFunction<S> low(d);
  PhaseFunction<S> high(d);
  for (const auto& [alpha, f] : g->terms()) {
    int total = 0;
    for (int v : alpha) total += v;
    if (total >= 2) {
      high.add_term(alpha, f);
    } else if (total == 1) {
      low.add_term(alpha, f);
    } else {
      TrigPoly<S> reduced = f;
      auto c0 = f.coeff(std::vector<int>(d, 0));
      reduced.add_term(std::vector<int>(d, 0), -c0);
      low.add_term(alpha, reduced);
    }
  }
  return {hamiltonian_vf(low), hamiltonian_vf(high)};
}

template <class S>
double momentum_map(std::span<const double> q, std::span<const double> p, const HamVF<S>& X)
  requires std::same_as<S, double>
{
  auto g = X.signed_generator();
  detail::require(g.has_value(), "missing generator");
  return evaluate(*g, q, p);
}

/// One-form on T*T^d with Gaussian-weighted components, the dual carrier on
/// which every fiber integral below is exact.
template <class S>
struct GaussOneForm {
  int dim = 1;
  std::vector<GaussWeighted<S>> dq;  // coefficients of dq^i
  std::vector<GaussWeighted<S>> dp;  // coefficients of dp_i

  GaussOneForm() : dq(1, GaussWeighted<S>(1)), dp(1, GaussWeighted<S>(1)) {}
  explicit GaussOneForm(int d)
      : dim(d), dq(d, GaussWeighted<S>(d)), dp(d, GaussWeighted<S>(d)) {
    detail::require(d >= 1, "dim must be >= 1");
  }

  bool is_zero() const {
    for (const auto& f : dq)
      if (!f.is_zero()) return false;
    for (const auto& f : dp)
      if (!f.is_zero()) return false;
    return true;
  }

  GaussOneForm operator+(const GaussOneForm& o) const {
    detail::require(dim == o.dim, "dimension mismatch");
    GaussOneForm out(dim);
    for (int i = 0; i < dim; ++i) {
      out.dq[i] = dq[i] + o.dq[i];
      out.dp[i] = dp[i] + o.dp[i];
    }
    return out;
  }
  GaussOneForm operator-(const GaussOneForm& o) const { return *this + (-o); }
  GaussOneForm operator-() const {
    GaussOneForm out(dim);
    for (int i = 0; i < dim; ++i) {
      out.dq[i] = -dq[i];
      out.dp[i] = -dp[i];
    }
    return out;
  }
  GaussOneForm scaled(const S& s) const {
    GaussOneForm out(dim);
    for (int i = 0; i < dim; ++i) {
      out.dq[i] = dq[i].scaled(s);
      out.dp[i] = dp[i].scaled(s);
    }
    return out;
  }
  int max_abs_freq() const {
    int m = 0;
    for (const auto& f : dq) m = std::max(m, f.poly.max_abs_freq());
    for (const auto& f : dp) m = std::max(m, f.poly.max_abs_freq());
    return m;
  }
  bool operator==(const GaussOneForm& o) const {
    return dim == o.dim && dq == o.dq && dp == o.dp;
  }
};

/// L2 pairing of a one-form with a vector field over T^d x R^d.
template <class S>
IntegralValue<S> phase_pairing(const GaussOneForm<S>& Pi, const HamVF<S>& X) {
  detail::require(Pi.dim == X.dim, "dimension mismatch");
  GaussWeighted<S> acc(Pi.dim);
  for (int i = 0; i < Pi.dim; ++i)
    acc = acc + Pi.dq[i].mul(X.dq[i]) + Pi.dp[i].mul(X.dp[i]);
  return integrate_phase(acc);
}

/// Density function of a one-form: sum_i dPi^i/dq^i - dPi_i/dp_i.
template <class S>
GaussWeighted<S> density(const GaussOneForm<S>& Pi) {
  GaussWeighted<S> acc(Pi.dim);
  for (int i = 0; i < Pi.dim; ++i) acc = acc + Pi.dp[i].diff_q(i) - Pi.dq[i].diff_p(i);
  return acc;
}

/// Lie derivative of a one-form along a phase-space vector field:
/// (L_X Pi)_a = X^b d_b Pi_a + Pi_b d_a X^b over the 2d coordinates.
template <class S>
GaussOneForm<S> lie_derivative_one_form(const HamVF<S>& X, const GaussOneForm<S>& Pi) {
  detail::require(X.dim == Pi.dim, "dimension mismatch");
  const int d = X.dim;
  GaussOneForm<S> out(d);
  for (int i = 0; i < d; ++i) {
    GaussWeighted<S> q_acc(d);
    GaussWeighted<S> p_acc(d);
    for (int j = 0; j < d; ++j) {
      q_acc = q_acc + Pi.dq[i].diff_q(j).mul(X.dq[j]) + Pi.dq[i].diff_p(j).mul(X.dp[j]) +
              Pi.dq[j].mul(X.dq[j].diff_q(i)) + Pi.dp[j].mul(X.dp[j].diff_q(i));
      p_acc = p_acc + Pi.dp[i].diff_q(j).mul(X.dq[j]) + Pi.dp[i].diff_p(j).mul(X.dp[j]) +
              Pi.dq[j].mul(X.dq[j].diff_p(i)) + Pi.dp[j].mul(X.dp[j].diff_p(i));
    }
    out.dq[i] = q_acc;
    out.dp[i] = p_acc;
  }
  return out;
}

/// Coadjoint action on one-forms for divergence-free fields: -L_X Pi.
/// Satisfies <coad_vf(X,Pi), Y> = <Pi, [Y,X]_alg> in the phase pairing.
template <class S>
GaussOneForm<S> coad_vf(const HamVF<S>& X, const GaussOneForm<S>& Pi) {
  detail::require(X.phase_divergence().is_zero(),
                  "coad_vf requires a divergence-free vector field");
  return -lie_derivative_one_form(X, Pi);
}

/// Dual of the cotangent lift: fiber-integrate the one-form into covariant
/// moment tensors. Grade 0 is -int of the q-divergence of the dp components;
/// grade k >= 1 components are
///   -int p_{i1}..p_{i(k-1)} (k Pi_{ik} + (d_j Pi^j) p_{ik}) dp, symmetrized.
/// Adjoint to the lift: <covariant_moments(Pi,K), X> = <Pi, cotangent_lift(X)>
/// whenever X carries no grade above K.
template <class S>
SymCovField<S> covariant_moments(const GaussOneForm<S>& Pi, int max_order) {
  const int d = Pi.dim;
  SymCovField<S> out(d);
  GaussWeighted<S> div_p(d);
  for (int j = 0; j < d; ++j) div_p = div_p + Pi.dp[j].diff_q(j);

  out.add_grade(SymCoTensor<S>::scalar(-div_p.fiber_integral()));

  for (int k = 1; k <= max_order; ++k) {
    SymCoTensor<S> grade(d, k);
    for (const MultiIndex& target : multisets(d, k)) {
      std::vector<MultiIndex> arrs = arrangements(target);
      TrigPoly<S> acc(d);
      for (const MultiIndex& arr : arrs) {
        MultiIndex head(arr.begin(), arr.end() - 1);
        int last = arr.back();
        std::vector<int> unit(d, 0);
        unit[last] = 1;
        PhaseFunction<S> p_last = PhaseFunction<S>::monomial(
            unit, TrigPoly<S>::constant(d, scalar_traits<S>::from_int(1)));
        GaussWeighted<S> integrand =
            Pi.dq[last].scaled(scalar_traits<S>::from_int(k)) + div_p.mul(p_last);
        PhaseFunction<S> p_head = PhaseFunction<S>::monomial(
            degree_vector(head, d), TrigPoly<S>::constant(d, scalar_traits<S>::from_int(1)));
        acc = acc + integrand.mul(p_head).fiber_integral();
      }
      grade.set_component(
          target, acc.scaled(-scalar_traits<S>::from_ratio(1, static_cast<long long>(arrs.size()))));
    }
    out.add_grade(grade);
  }
  return out;
}

/// Right inverse of covariant_moments up to the requested order: builds a
/// Gaussian one-form whose moment hierarchy matches the target on grades
/// 0..max_order (higher grades are unconstrained). The grade-0 target must
/// have zero torus average, which is exactly the image condition of the dual
/// map; callers feeding it action terms always satisfy it.
template <class S>
GaussOneForm<S> gauss_one_form_with_moments(const SymCovField<S>& target, int max_order) {
  const int d = target.dim();
  detail::require(target.max_order() <= max_order, "target grade above requested order");
  GaussOneForm<S> Pi(d);

  // Grade 0 via dp components: solve -sum_j d_j g_j = rho mode by mode.
  TrigPoly<S> rho = target.grade(0).component({});
  detail::require(scalar_traits<S>::is_zero(rho.coeff(std::vector<int>(d, 0)).re) &&
                      scalar_traits<S>::is_zero(rho.coeff(std::vector<int>(d, 0)).im),
                  "grade-0 moment target must have zero mean");
  for (const auto& [kvec, c] : rho.terms()) {
    long long k2 = 0;
    for (int ki : kvec) k2 += static_cast<long long>(ki) * ki;
    if (k2 == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (kvec[j] == 0) continue;
      // coefficient i*k_j*c / |k|^2 on mode k of Pi^j
      S kj = scalar_traits<S>::from_int(kvec[j]);
      S inv = scalar_traits<S>::from_ratio(1, k2);
      Complex<S> a(-(c.im * kj) * inv, (c.re * kj) * inv);
      TrigPoly<S> mode(d);
      mode.add_term(kvec, a);
      Pi.dp[j] = Pi.dp[j] + GaussWeighted<S>(PhaseFunction<S>::from_trig(mode));
    }
  }

  if (max_order == 0) return Pi;

  // Basis of dq-ansatz pieces: one symmetric coefficient slot per grade m and
  // sorted m-index; the piece puts p^(deg(J)-e_i) on Pi_i for each axis in J.
  struct Slot {
    int grade;
    MultiIndex idx;
  };
  std::vector<Slot> slots;
  for (int m = 1; m <= max_order; ++m)
    for (const MultiIndex& J : multisets(d, m)) slots.push_back({m, J});
  const int n = static_cast<int>(slots.size());

  auto elem_form = [&](const Slot& s, const TrigPoly<S>& coeff) {
    GaussOneForm<S> piece(d);
    std::vector<int> deg = degree_vector(s.idx, d);
    for (int axis = 0; axis < d; ++axis) {
      if (deg[axis] == 0) continue;
      std::vector<int> beta = deg;
      --beta[axis];
      piece.dq[axis] = piece.dq[axis] + GaussWeighted<S>(PhaseFunction<S>::monomial(beta, coeff));
    }
    return piece;
  };

  // Moment matrix of the ansatz; q-dependence passes through linearly, so the
  // matrix is scalar and one inversion serves every Fourier mode.
  std::vector<std::vector<S>> T(n, std::vector<S>(n, scalar_traits<S>::from_int(0)));
  TrigPoly<S> one = TrigPoly<S>::constant(d, scalar_traits<S>::from_int(1));
  for (int col = 0; col < n; ++col) {
    SymCovField<S> moments = covariant_moments(elem_form(slots[col], one), max_order);
    for (int row = 0; row < n; ++row) {
      Complex<S> c0 =
          moments.grade(slots[row].grade).component(slots[row].idx).coeff(std::vector<int>(d, 0));
      T[row][col] = c0.re;
    }
  }
  std::vector<std::vector<S>> Tinv = detail::invert_matrix(std::move(T));

  SymCovField<S> current = covariant_moments(Pi, max_order);
  std::vector<TrigPoly<S>> residual;
  residual.reserve(n);
  for (const Slot& s : slots)
    residual.push_back(target.grade(s.grade).component(s.idx) - current.grade(s.grade).component(s.idx));

  for (int col = 0; col < n; ++col) {
    TrigPoly<S> coeff(d);
    for (int row = 0; row < n; ++row) coeff = coeff + residual[row].scaled(Tinv[col][row]);
    if (!coeff.is_zero()) Pi = Pi + elem_form(slots[col], coeff);
  }
  return Pi;
}

}  // namespace schouten
