#pragma once

// Randomized verification suites over the exact scalar ring. Each suite
// draws seeded random fields with small support, evaluates one or more
// identities, and reports the worst residual; a pass means every residual
// is exactly zero. The --mutate switch injects a deliberate corruption so
// the suites double as their own controls. Each identity carries a stable
// anchor label used in machine-readable reports.

#include <cstdlib>
#include <thread>

#include "schouten/euler_poincare.hpp"
#include "schouten/random_fields.hpp"

namespace schouten {

struct IdentityOutcome {
  std::string name;
  std::string anchor;
  Rational max_residual = 0;
  bool pass() const { return max_residual == 0; }
};

struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  int cases = 0;
  bool mutated = false;
  std::vector<IdentityOutcome> identities;

  bool pass() const {
    for (const auto& id : identities)
      if (!id.pass()) return false;
    return true;
  }
};

namespace detail {

inline std::uint64_t case_seed(std::uint64_t seed, int index) {
  return seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(index + 1);
}

inline int env_thread_cap() {
  const char* v = std::getenv("SCHOUTEN_EP_THREADS");
  if (!v) return 1;
  int n = std::atoi(v);
  return std::clamp(n, 1, 64);
}

/// Runs case_fn over every case index, optionally in parallel; results land
/// in index order so reports are byte-identical at any thread count.
template <class CaseFn>
VerifyReport run_cases(const std::string& suite, std::uint64_t seed, int cases, bool mutate,
                       std::vector<std::pair<std::string, std::string>> identity_labels,
                       CaseFn&& case_fn) {
  const int n_ids = static_cast<int>(identity_labels.size());
  std::vector<std::vector<Rational>> residuals(cases, std::vector<Rational>(n_ids, Rational(0)));
  std::vector<std::string> errors(cases);

  int threads = std::min(env_thread_cap(), std::max(cases, 1));
  auto worker = [&](int begin, int step) {
    for (int i = begin; i < cases; i += step) {
      try {
        residuals[i] = case_fn(i, mutate);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  if (threads <= 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t, threads);
    for (auto& th : pool) th.join();
  }
  for (const auto& err : errors)
    if (!err.empty()) throw std::runtime_error("suite case failed: " + err);

  VerifyReport report{suite, seed, cases, mutate, {}};
  for (int j = 0; j < n_ids; ++j) {
    IdentityOutcome out{identity_labels[j].first, identity_labels[j].second, Rational(0)};
    for (int i = 0; i < cases; ++i)
      if (residuals[i][j] > out.max_residual) out.max_residual = residuals[i][j];
    report.identities.push_back(std::move(out));
  }
  return report;
}

}  // namespace detail

using R = Rational;
using FieldR = SymTensorField<R>;
using CovR = SymCovField<R>;

/// Jacobi identity of the graded bracket on random triples.
inline VerifyReport run_jacobi(std::uint64_t seed, int cases, bool mutate) {
  return detail::run_cases(
      "jacobi", seed, cases, mutate, {{"schouten-jacobi", "sc"}},
      [&](int i, bool mut) {
        Rng rng(detail::case_seed(seed, i));
        const int d = i % 2 + 1;
        FieldR X = random_field<R>(rng, d, 0, 3, 2);
        FieldR Y = random_field<R>(rng, d, 0, 3, 2);
        FieldR Z = random_field<R>(rng, d, 0, 3, 2);
        FieldR first = schouten_graded(schouten_graded(X, Y), Z);
        if (mut) first = first.scaled(R(2));
        FieldR res = first + schouten_graded(schouten_graded(Y, Z), X) +
                     schouten_graded(schouten_graded(Z, X), Y);
        return std::vector<R>{residual_of(res)};
      });
}

/// Compatibility conditions of the mutual actions on the graded algebra.
inline VerifyReport run_compatibility(std::uint64_t seed, int cases, bool mutate) {
  return detail::run_cases(
      "compatibility", seed, cases, mutate,
      {{"left-compatibility", "compcon-mpl"}, {"right-compatibility", "compcon-mpl"}},
      [&](int i, bool mut) {
        Rng rng(detail::case_seed(seed, i));
        const int d = i % 2 + 1;
        auto acts = tensor_matched_actions<R>();
        if (mut) {
          auto base = acts.left;
          acts.left = [base](const FieldR& eta, const FieldR& xi) {
            return base(eta, xi).scaled(R(2));
          };
        }
        FieldR eta = random_field<R>(rng, d, 2, 4, 2);
        FieldR eta2 = random_field<R>(rng, d, 2, 4, 2);
        FieldR xi = random_field<R>(rng, d, 0, 1, 2);
        FieldR xi2 = random_field<R>(rng, d, 0, 1, 2);
        auto [rg, rh] = compatibility_residual(acts, eta, eta2, xi, xi2);
        return std::vector<R>{residual_of(rg), residual_of(rh)};
      });
}

/// Grade split of the bracket against the matched bracket of the splits.
inline VerifyReport run_reassembly(std::uint64_t seed, int cases, bool mutate) {
  return detail::run_cases(
      "reassembly", seed, cases, mutate, {{"bracket-reassembly", "mpTQ"}},
      [&](int i, bool mut) {
        Rng rng(detail::case_seed(seed, i));
        const int d = i % 2 + 1;
        FieldR X = random_field<R>(rng, d, 0, 4, 2);
        FieldR Y = random_field<R>(rng, d, 0, 4, 2);
        auto lhs = split_field(schouten_graded(X, Y));
        if (mut) lhs.g = lhs.g.scaled(R(2));
        auto rhs = matched_bracket(tensor_matched_actions<R>(), split_field(X), split_field(Y));
        return std::vector<R>{residual_of(lhs.g - rhs.g) + residual_of(lhs.h - rhs.h)};
      });
}

/// Cotangent lift as a homomorphism onto the opposite Jacobi-Lie algebra.
inline VerifyReport run_gccl_hom(std::uint64_t seed, int cases, bool mutate) {
  return detail::run_cases(
      "gccl-hom", seed, cases, mutate, {{"lift-homomorphism", "iso"}},
      [&](int i, bool mut) {
        Rng rng(detail::case_seed(seed, i));
        const int d = i % 2 + 1;
        FieldR X = random_field<R>(rng, d, 0, 3, 2);
        FieldR Y = random_field<R>(rng, d, 0, 3, 2);
        HamVF<R> lhs = cotangent_lift(schouten_graded(X, Y));
        HamVF<R> rhs = mut ? jacobi_lie(cotangent_lift(X), cotangent_lift(Y))
                           : alg_bracket(cotangent_lift(X), cotangent_lift(Y));
        return std::vector<R>{residual_of(lhs - rhs)};
      });
}

/// Momentum lift as an anti-homomorphism into the Poisson algebra.
inline VerifyReport run_kappa_antihom(std::uint64_t seed, int cases, bool mutate) {
  return detail::run_cases(
      "kappa-antihom", seed, cases, mutate, {{"lift-antihomomorphism", "sc-Poi"}},
      [&](int i, bool mut) {
        Rng rng(detail::case_seed(seed, i));
        const int d = i % 2 + 1;
        FieldR X = random_field<R>(rng, d, 0, 3, 2);
        FieldR Y = random_field<R>(rng, d, 0, 3, 2);
        PhaseFunction<R> lhs = momentum_lift(schouten_graded(X, Y));
        PhaseFunction<R> pb = poisson(momentum_lift(X), momentum_lift(Y));
        PhaseFunction<R> res = mut ? lhs - pb : lhs + pb;
        return std::vector<R>{residual_of(res)};
      });
}

namespace detail {

inline std::vector<int> oracle_grades(const FieldR& X, const CovR& A) {
  std::vector<int> grades;
  for (const auto& [a, Ag] : A.grades())
    for (const auto& [k, Xk] : X.grades()) {
      int m = a - k + 1;
      if (m >= 0 && std::find(grades.begin(), grades.end(), m) == grades.end())
        grades.push_back(m);
    }
  std::sort(grades.begin(), grades.end());
  return grades;
}

}  // namespace detail

/// Coadjoint closed form against its defining pairing over a spanning set.
inline VerifyReport run_coad_oracle(std::uint64_t seed, int cases, bool mutate) {
  return detail::run_cases(
      "coad-oracle", seed, cases, mutate, {{"coadjoint-pairing", "coad-TQ"}},
      [&](int i, bool mut) {
        Rng rng(detail::case_seed(seed, i));
        const int d = i % 2 + 1;
        const int max_freq = d == 1 ? 2 : 1;
        const int max_ord = d == 1 ? 3 : 2;
        FieldR X = random_field<R>(rng, d, 0, max_ord, max_freq);
        CovR A = random_cov_field<R>(rng, d, 0, max_ord + 1, max_freq);
        CovR D = coadjoint(X, A);
        if (mut) D = D.scaled(R(2));
        int bound = X.max_abs_freq() + A.max_abs_freq();
        R acc(0);
        for (const auto& Yp : partner_fields<R>(d, detail::oracle_grades(X, A), bound)) {
          IntegralValue<R> lhs = pairing(D, Yp);
          IntegralValue<R> rhs = pairing(A, schouten_graded(Yp, X));
          acc = acc + residual_of(lhs - rhs);
        }
        return std::vector<R>{acc};
      });
}

/// The four dual/cross action closed forms against their pairing relations.
inline VerifyReport run_dual_actions(std::uint64_t seed, int cases, bool mutate) {
  return detail::run_cases(
      "dual-actions", seed, cases, mutate,
      {{"dual-action-on-fluid", "dualaction-I"},
       {"dual-action-on-higher", "dualaction-II"},
       {"cross-to-fluid", "a-ex-dual"},
       {"cross-to-higher", "b-ex-dual"}},
      [&](int i, bool mut) {
        Rng rng(detail::case_seed(seed, i));
        const int d = i % 2 + 1;
        const int max_freq = d == 1 ? 2 : 1;
        CovR mu = random_cov_field<R>(rng, d, 0, 1, max_freq);
        CovR nu = random_cov_field<R>(rng, d, 2, 3, max_freq);
        FieldR xi = random_field<R>(rng, d, 0, 1, max_freq);
        FieldR eta = random_field<R>(rng, d, 2, 3, max_freq);
        auto acts = tensor_matched_actions<R>();
        R scale = mut ? R(2) : R(1);

        std::vector<R> out(4, R(0));
        {
          CovR Dv = dual_action_on_fluid(mu, eta).scaled(scale);
          int bound = mu.max_abs_freq() + eta.max_abs_freq();
          for (const auto& P : partner_fields<R>(d, {0, 1}, bound))
            out[0] = out[0] + residual_of(pairing(Dv, P) - pairing(mu, acts.left(eta, P)));
        }
        {
          CovR Dv = dual_action_on_higher(xi, nu).scaled(scale);
          int bound = xi.max_abs_freq() + nu.max_abs_freq();
          for (const auto& P : partner_fields<R>(d, {2, 3, 4}, bound))
            out[1] = out[1] + residual_of(pairing(Dv, P) - pairing(nu, acts.right(P, xi)));
        }
        {
          CovR Dv = cross_to_fluid_dual(eta, nu).scaled(scale);
          int bound = eta.max_abs_freq() + nu.max_abs_freq();
          for (const auto& P : partner_fields<R>(d, {0, 1}, bound))
            out[2] = out[2] + residual_of(pairing(Dv, P) - pairing(nu, acts.right(eta, P)));
        }
        {
          CovR Dv = cross_to_higher_dual(xi, mu).scaled(scale);
          int bound = xi.max_abs_freq() + mu.max_abs_freq();
          for (const auto& P : partner_fields<R>(d, {2}, bound))
            out[3] = out[3] + residual_of(pairing(Dv, P) - pairing(mu, acts.left(P, xi)));
        }
        return out;
      });
}

/// Grade split of the full EP right-hand side against the matched form.
inline VerifyReport run_ep_reassembly(std::uint64_t seed, int cases, bool mutate) {
  return detail::run_cases(
      "ep-reassembly", seed, cases, mutate, {{"ep-reassembly", "mEP-1-TQQ"}},
      [&](int i, bool mut) {
        Rng rng(detail::case_seed(seed, i));
        const int d = i % 2 + 1;
        const int max_freq = d == 1 ? 2 : 1;
        const int n0 = 3;
        FieldR X = random_field<R>(rng, d, 0, n0, max_freq);
        CovR mu = random_cov_field<R>(rng, d, 0, n0, max_freq);
        auto lhs = split_dual(ep_rhs_tensor(X, mu, n0 + 1));
        if (mut) lhs.g = lhs.g.scaled(R(2));
        auto rhs = ep_rhs_matched(tensor_matched_dual_ops<R>(), split_field(X), split_dual(mu));
        return std::vector<R>{residual_of(lhs.g - rhs.g) + residual_of(lhs.h - rhs.h)};
      });
}

/// Transport of coadjoint flows, dual/cross actions and the EP right-hand
/// side through the cotangent lift and its dual.
inline VerifyReport run_transport(std::uint64_t seed, int cases, bool mutate) {
  return detail::run_cases(
      "transport", seed, cases, mutate,
      {{"coad-transport", "coad-phi*"},
       {"cross-b-transport", "dual-b-a"},
       {"cross-a-transport", "dual-b-a"},
       {"dual-left-transport", "dual-triangle-eta-xi"},
       {"dual-right-transport", "dual-triangle-eta-xi"},
       {"ep-transport", "dual-coad---"}},
      [&](int i, bool mut) {
        Rng rng(detail::case_seed(seed, i));
        const int d = i % 2 + 1;
        const int max_freq = 1;
        R scale = mut ? R(2) : R(1);
        std::vector<R> out(6, R(0));

        {  // coadjoint equivariance
          FieldR X = random_field<R>(rng, d, 0, 3, max_freq);
          GaussOneForm<R> Pi = random_gauss_form<R>(rng, d, 2, max_freq);
          const int K = 2;
          CovR lhs = covariant_moments(coad_vf(cotangent_lift(X), Pi), K).scaled(scale);
          CovR rhs = coadjoint(X, covariant_moments(Pi, K + X.max_order())).truncated(K);
          out[0] = residual_of(lhs - rhs);
        }

        FieldR xi = random_field<R>(rng, d, 0, 1, max_freq);
        FieldR eta = random_field<R>(rng, d, 2, 3, max_freq);
        GaussOneForm<R> Pi = random_gauss_form<R>(rng, d, 2, max_freq);
        auto acts = tensor_matched_actions<R>();
        int bound = Pi.max_abs_freq() + std::max(xi.max_abs_freq(), eta.max_abs_freq());

        {  // cross_b through the dual lift
          CovR muf = fluid_part(covariant_moments(Pi, 1));
          CovR Dv = cross_to_higher_dual(xi, muf).scaled(scale);
          for (const auto& P : partner_fields<R>(d, {2}, bound))
            out[1] = out[1] +
                     residual_of(pairing(Dv, P) - phase_pairing(Pi, cotangent_lift(acts.left(P, xi))));
        }
        {  // cross_a through the dual lift
          CovR nuh = higher_part(covariant_moments(Pi, eta.max_order()));
          CovR Dv = cross_to_fluid_dual(eta, nuh).scaled(scale);
          for (const auto& P : partner_fields<R>(d, {0, 1}, bound))
            out[2] = out[2] +
                     residual_of(pairing(Dv, P) - phase_pairing(Pi, cotangent_lift(acts.right(eta, P))));
        }
        {  // dual left action through the dual lift
          CovR muf = fluid_part(covariant_moments(Pi, 1));
          CovR Dv = dual_action_on_fluid(muf, eta).scaled(scale);
          for (const auto& P : partner_fields<R>(d, {0, 1}, bound))
            out[3] = out[3] +
                     residual_of(pairing(Dv, P) - phase_pairing(Pi, cotangent_lift(acts.left(eta, P))));
        }
        {  // dual right action through the dual lift
          const int gmax = 3;
          CovR nuh = higher_part(covariant_moments(Pi, gmax));
          CovR Dv = dual_action_on_higher(xi, nuh).scaled(scale);
          for (const auto& P : partner_fields<R>(d, {2, 3}, bound))
            out[4] = out[4] +
                     residual_of(pairing(Dv, P) - phase_pairing(Pi, cotangent_lift(acts.right(P, xi))));
        }

        {  // EP flow transport, d = 1 keeps the section solves small
          Rng rng2(detail::case_seed(seed ^ 0x5bd1e995u, i));
          const int dd = 1;
          const int N = 4;
          FieldR xi2 = random_field<R>(rng2, dd, 0, 1, 1);
          FieldR eta2 = random_field<R>(rng2, dd, 2, 3, 1);
          CovR mu = random_cov_field<R>(rng2, dd, 0, 1, 1);
          {  // strip the torus mean of the grade-0 momentum
            TrigPoly<R> rho = mu.grade(0).component({});
            rho.add_term(std::vector<int>(dd, 0), -rho.coeff(std::vector<int>(dd, 0)));
            SymCoTensor<R> t(dd, 0);
            t.set_component({}, rho);
            mu.set_grade(0, t);
          }
          CovR nu = random_cov_field<R>(rng2, dd, 2, 3, 1);
          GaussOneForm<R> Pi_s = gauss_one_form_with_moments(mu, N);
          GaussOneForm<R> Pi_n = gauss_one_form_with_moments(nu, N);
          auto [rhs_s, rhs_n] =
              ep_rhs_ham(cotangent_lift(xi2), cotangent_lift(eta2), Pi_s, Pi_n, N);
          auto tensor_side =
              ep_rhs_matched(tensor_matched_dual_ops<R>(), {xi2, eta2}, {mu, nu});
          CovR lhs_s = covariant_moments(rhs_s, N).scaled(scale);
          CovR lhs_n = covariant_moments(rhs_n, N);
          out[5] = residual_of(lhs_s - tensor_side.g) + residual_of(lhs_n - tensor_side.h);
        }
        return out;
      });
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "jacobi",     "compatibility", "reassembly",    "gccl-hom",  "kappa-antihom",
      "coad-oracle", "dual-actions",  "ep-reassembly", "transport"};
  return names;
}

inline VerifyReport run_suite(const std::string& name, std::uint64_t seed, int cases,
                              bool mutate) {
  if (name == "jacobi") return run_jacobi(seed, cases, mutate);
  if (name == "compatibility") return run_compatibility(seed, cases, mutate);
  if (name == "reassembly") return run_reassembly(seed, cases, mutate);
  if (name == "gccl-hom") return run_gccl_hom(seed, cases, mutate);
  if (name == "kappa-antihom") return run_kappa_antihom(seed, cases, mutate);
  if (name == "coad-oracle") return run_coad_oracle(seed, cases, mutate);
  if (name == "dual-actions") return run_dual_actions(seed, cases, mutate);
  if (name == "ep-reassembly") return run_ep_reassembly(seed, cases, mutate);
  if (name == "transport") return run_transport(seed, cases, mutate);
  throw std::out_of_range("unknown suite: " + name);
}

}  // namespace schouten
