#pragma once

// Euler-Poincare right-hand sides: generic (d/dt mu = -ad*_xi mu), both
// semidirect degenerations, the matched two-block form, the explicit graded
// tensor system with its fluid and higher-order restrictions, the transport
// of the matched system to Hamiltonian vector fields, the quadratic
// (Helmholtz) inertia operator, and a fixed-step RK4 integrator for the
// truncated hierarchy on the torus.
//
// Closure by truncation: momenta above the chosen order are treated as zero,
// and the integrator discards Fourier modes above the bandwidth cap after
// each right-hand side evaluation. Those are the only approximations; all
// per-step algebra is exact convolution.

#include <cmath>
#include <string>
#include <vector>

#include "schouten/gccl.hpp"
#include "schouten/tensor_matched.hpp"

namespace schouten {

/// Blockwise Helmholtz inertia operator, acting diagonally in Fourier space
/// as multiplication by 1 + alpha^2 |k|^2 on every tensor component. Index
/// lowering on the flat torus is the identity on components.
template <class S>
struct QuadMetric {
  S alpha2 = scalar_traits<S>::from_int(0);
};

namespace detail {

template <class S, bool CovIn, bool CovOut>
SymFieldT<S, CovOut> apply_symbol(const QuadMetric<S>& Q, const SymFieldT<S, CovIn>& f,
                                  bool inverse) {
  SymFieldT<S, CovOut> out(f.dim());
  for (const auto& [k, t] : f.grades()) {
    SymTensorT<S, CovOut> tk(f.dim(), k);
    for (const auto& [idx, poly] : t.components()) {
      TrigPoly<S> g(f.dim());
      for (const auto& [freq, c] : poly.terms()) {
        long long k2 = 0;
        for (int ki : freq) k2 += static_cast<long long>(ki) * ki;
        S sym = scalar_traits<S>::from_int(1) + Q.alpha2 * scalar_traits<S>::from_int(k2);
        g.add_term(freq, inverse ? Complex<S>(c.re / sym, c.im / sym)
                                 : Complex<S>(c.re * sym, c.im * sym));
      }
      tk.set_component(idx, g);
    }
    out.set_grade(k, tk);
  }
  return out;
}

template <class T>
T scale(const T& v, double s) {
  return v.scaled(s);
}
inline double scale(double v, double s) { return v * s; }

}  // namespace detail

template <class S>
SymCovField<S> metric_apply(const QuadMetric<S>& Q, const SymTensorField<S>& X) {
  return detail::apply_symbol<S, false, true>(Q, X, false);
}

/// Exact spectral inverse; the symbol never vanishes.
template <class S>
SymTensorField<S> metric_invert(const QuadMetric<S>& Q, const SymCovField<S>& mu) {
  return detail::apply_symbol<S, true, false>(Q, mu, true);
}

/// Quadratic Lagrangian evaluated on the momenta: (1/2) <mu, Q^-1 mu>.
template <class S>
IntegralValue<S> energy(const SymCovField<S>& mu, const QuadMetric<S>& Q) {
  return pairing(mu, metric_invert(Q, mu)) * scalar_traits<S>::from_ratio(1, 2);
}

/// d/dt mu = -ad*_xi mu for any algebra supplied through its coadjoint map.
template <class A, class D, class Coad>
D ep_rhs_generic(const A& xi, const D& mu, Coad&& coad) {
  return -coad(xi, mu);
}

/// Matched two-block right-hand side; the matched coadjoint action carries
/// all six constituent terms.
template <class G, class H, class GD, class HD>
MatchedDual<GD, HD> ep_rhs_matched(const MatchedDualOps<G, H, GD, HD>& ops,
                                   const MatchedElement<G, H>& x, const MatchedDual<GD, HD>& mu) {
  return -coad_matched(ops, x, mu);
}

/// Semidirect case with only the right action nontrivial:
/// d/dt mu = -ad*_xi mu + a*_eta nu,  d/dt nu = -ad*_eta nu - xi |>* nu.
template <class G, class H, class GD, class HD>
MatchedDual<GD, HD> ep_rhs_semidirect_right(const MatchedDualOps<G, H, GD, HD>& ops,
                                            const MatchedElement<G, H>& x,
                                            const MatchedDual<GD, HD>& mu) {
  GD gpart = -ops.coad_g(x.g, mu.g) + ops.cross_a(x.h, mu.h);
  HD hpart = -ops.coad_h(x.h, mu.h) - ops.dual_right(x.g, mu.h);
  return {std::move(gpart), std::move(hpart)};
}

/// Semidirect case with only the left action nontrivial:
/// d/dt mu = -ad*_xi mu + mu <|* eta,  d/dt nu = -ad*_eta nu - b*_xi mu.
template <class G, class H, class GD, class HD>
MatchedDual<GD, HD> ep_rhs_semidirect_left(const MatchedDualOps<G, H, GD, HD>& ops,
                                           const MatchedElement<G, H>& x,
                                           const MatchedDual<GD, HD>& mu) {
  GD gpart = -ops.coad_g(x.g, mu.g) + ops.dual_left(mu.g, x.h);
  HD hpart = -ops.coad_h(x.h, mu.h) - ops.cross_b(x.g, mu.g);
  return {std::move(gpart), std::move(hpart)};
}

/// Full graded system closed by truncation at max_order.
template <class S>
SymCovField<S> ep_rhs_tensor(const SymTensorField<S>& X, const SymCovField<S>& mu,
                             int max_order) {
  return (-coadjoint(X, mu)).truncated(max_order);
}

/// Fluid block alone (grades 0 and 1):
///   d/dt rho = -(L_Y rho + rho div Y)
///   d/dt M   = -(L_Y M + div Y M + rho d sigma)
template <class S>
SymCovField<S> ep_rhs_fluid(const SymTensorField<S>& fluid, const SymCovField<S>& mu) {
  detail::require(fluid.dim() == mu.dim(), "dimension mismatch");
  const SymTensor<S> sigma = fluid.grade(0);
  const SymTensor<S> Y = fluid.grade(1);
  const SymCoTensor<S> rho = mu.grade(0);
  const SymCoTensor<S> M = mu.grade(1);
  const SymTensor<S> divY = divergence(Y);

  SymCovField<S> out(mu.dim());
  out.add_grade(-(gen_lie(Y, rho) + cov_contract(divY, rho)));
  out.add_grade(-(star(rho, sigma) + gen_lie(Y, M) + cov_contract(divY, M)));
  return out;
}

/// Higher block alone (grades >= 2), closed by truncation:
///   d/dt mu_m = -sum_k (L_{X^k} mu_{m+k-1} + div X^k into mu_{m+k-1}).
template <class S>
SymCovField<S> ep_rhs_higher(const SymTensorField<S>& higher, const SymCovField<S>& mu,
                             int max_order) {
  detail::require(higher.dim() == mu.dim(), "dimension mismatch");
  SymCovField<S> out(mu.dim());
  for (int m = 2; m <= max_order; ++m) {
    for (const auto& [k, Xk] : higher.grades()) {
      if (k < 2) continue;
      int src = m + k - 1;
      if (src > max_order) continue;
      auto it = mu.grades().find(src);
      if (it == mu.grades().end()) continue;
      out.add_grade(-(gen_lie(Xk, it->second) + cov_contract(divergence(Xk), it->second)));
    }
  }
  return out;
}

/// Matched system transported to Hamiltonian vector fields. The coadjoint
/// terms are intrinsic (minus the phase-space Lie derivative, the fields
/// being divergence free); the dual and cross action terms are the graded
/// closed forms conjugated through the dual lift, realized as one-forms by
/// the moment section. Inputs are canonical block representatives: the
/// moment content of Pi_s lives in grades 0..1 and that of Pi_n in 2..N.
template <class S>
std::pair<GaussOneForm<S>, GaussOneForm<S>> ep_rhs_ham(const HamVF<S>& Xs, const HamVF<S>& Xn,
                                                       const GaussOneForm<S>& Pi_s,
                                                       const GaussOneForm<S>& Pi_n,
                                                       int max_order) {
  SymTensorField<S> fluid = tensor_preimage(Xs);
  SymTensorField<S> higher = tensor_preimage(Xn);
  SymCovField<S> mu = covariant_moments(Pi_s, max_order);
  SymCovField<S> nu = covariant_moments(Pi_n, max_order);
  if constexpr (scalar_traits<S>::exact) {
    detail::require(higher_part(mu).is_zero(), "Pi_s carries moments above grade 1");
    detail::require(fluid_part(nu).is_zero(), "Pi_n carries moments below grade 2");
  }
  mu = fluid_part(mu);
  nu = higher_part(nu);

  SymCovField<S> b_form = cross_to_higher_dual(fluid, mu);
  SymCovField<S> a_form = cross_to_fluid_dual(higher, nu);
  SymCovField<S> dual_s = dual_action_on_fluid(mu, higher);
  SymCovField<S> dual_n = dual_action_on_higher(fluid, nu).truncated(max_order);

  auto lift = [&](const SymCovField<S>& A) { return gauss_one_form_with_moments(A, max_order); };

  // The Lie-derivative terms carry the cross-block content of the full
  // coadjoint action; the lifted b*/a* corrections move it to its block.
  GaussOneForm<S> rhs_s =
      lie_derivative_one_form(Xs, Pi_s) + lift(b_form) + lift(dual_s) + lift(a_form);
  GaussOneForm<S> rhs_n =
      lie_derivative_one_form(Xn, Pi_n) - lift(a_form) - lift(dual_n) - lift(b_form);
  return {rhs_s, rhs_n};
}

/// Classical fixed-step RK4 for any state with +, scaled().
template <class Y, class F>
Y rk4_step(const Y& y, F&& f, double dt) {
  Y k1 = f(y);
  Y k2 = f(y + detail::scale(k1, dt / 2));
  Y k3 = f(y + detail::scale(k2, dt / 2));
  Y k4 = f(y + detail::scale(k3, dt));
  return y + detail::scale(k1 + detail::scale(k2, 2.0) + detail::scale(k3, 2.0) + k4, dt / 6);
}

struct EPConfig {
  int dim = 1;
  int max_order = 1;
  double alpha = 1.0;
  double dt = 1e-3;
  double t_end = 1.0;
  int bandwidth = 16;
  bool dealias = false;
  std::string scenario;

  void validate() const {
    detail::require(dim >= 1, "dim must be >= 1");
    detail::require(max_order >= 1, "truncation order must be >= 1");
    detail::require(dt > 0, "dt must be positive");
    detail::require(t_end >= 0, "t_end must be nonnegative");
    detail::require(bandwidth >= 1, "bandwidth must be >= 1");
    detail::require(alpha >= 0, "alpha must be nonnegative");
  }
};

struct EPState {
  SymCovField<double> momenta;
  double t = 0.0;
};

inline bool all_finite(const SymCovField<double>& mu) {
  for (const auto& [k, t] : mu.grades())
    for (const auto& [idx, poly] : t.components())
      for (const auto& [freq, c] : poly.terms())
        if (!std::isfinite(c.re) || !std::isfinite(c.im)) return false;
  return true;
}

inline QuadMetric<double> metric_for(const EPConfig& cfg) {
  return QuadMetric<double>{cfg.alpha * cfg.alpha};
}

/// One RK4 update of the momenta. Velocity is recovered spectrally at every
/// stage; each right-hand side evaluation is cut to the bandwidth cap
/// (or its 2/3 fraction when de-aliasing is requested).
inline EPState step_rk4(const EPState& state, const EPConfig& cfg) {
  QuadMetric<double> Q = metric_for(cfg);
  int band = cfg.dealias ? (2 * cfg.bandwidth) / 3 : cfg.bandwidth;
  auto rhs = [&](const SymCovField<double>& mu) {
    return ep_rhs_tensor(metric_invert(Q, mu), mu, cfg.max_order).bandlimited(band);
  };
  EPState next;
  next.momenta = rk4_step(state.momenta, rhs, cfg.dt);
  next.t = state.t + cfg.dt;
  return next;
}

struct FlowRow {
  double t = 0.0;
  double energy = 0.0;
  std::vector<double> grade_l2;
  double max_coeff = 0.0;
};

struct FlowResult {
  std::vector<FlowRow> rows;
  bool blew_up = false;
  double last_valid_t = 0.0;
};

inline FlowRow flow_row(const EPState& state, const EPConfig& cfg) {
  FlowRow row;
  row.t = state.t;
  row.energy = energy(state.momenta, metric_for(cfg)).value();
  row.grade_l2.assign(cfg.max_order + 1, 0.0);
  for (const auto& [k, t] : state.momenta.grades()) {
    double acc = 0.0;
    for (const auto& [idx, poly] : t.components()) {
      double comp = 0.0;
      for (const auto& [freq, c] : poly.terms()) comp += c.re * c.re + c.im * c.im;
      acc += static_cast<double>(multiplicity(idx)) * comp;
    }
    if (k <= cfg.max_order) row.grade_l2[k] = std::sqrt(acc);
    for (const auto& [idx, poly] : t.components())
      for (const auto& [freq, c] : poly.terms())
        row.max_coeff = std::max({row.max_coeff, std::fabs(c.re), std::fabs(c.im)});
  }
  return row;
}

inline FlowResult integrate(const EPConfig& cfg, const SymCovField<double>& initial) {
  cfg.validate();
  detail::require(initial.dim() == cfg.dim, "initial data dimension mismatch");
  detail::require(initial.max_order() <= cfg.max_order, "initial data above truncation order");

  FlowResult result;
  EPState state{initial.bandlimited(cfg.bandwidth), 0.0};
  result.rows.push_back(flow_row(state, cfg));
  long long steps = std::llround(cfg.t_end / cfg.dt);
  for (long long s = 0; s < steps; ++s) {
    EPState next = step_rk4(state, cfg);
    if (!all_finite(next.momenta)) {
      result.blew_up = true;
      result.last_valid_t = state.t;
      return result;
    }
    state = std::move(next);
    result.rows.push_back(flow_row(state, cfg));
  }
  result.last_valid_t = state.t;
  return result;
}

}  // namespace schouten
