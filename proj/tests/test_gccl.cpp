#include <doctest.h>

#include "schouten/gccl.hpp"
#include "schouten/random_fields.hpp"

using namespace schouten;
using R = Rational;

namespace {

TrigPoly<R> cosq(int k = 1) { return TrigPoly<R>::harmonic_cos(1, {k}, R(1)); }
TrigPoly<R> sinq(int k = 1) { return TrigPoly<R>::harmonic_sin(1, {k}, R(1)); }
TrigPoly<R> one1() { return TrigPoly<R>::constant(1, R(1)); }

SymTensor<R> vec1(const TrigPoly<R>& u) {
  SymTensor<R> t(1, 1);
  t.set_component({0}, u);
  return t;
}

SymTensor<R> ten2(const TrigPoly<R>& f) {
  SymTensor<R> t(1, 2);
  t.set_component({0, 0}, f);
  return t;
}

PhaseFunction<R> pmono(int deg, const TrigPoly<R>& f) {
  return PhaseFunction<R>::monomial({deg}, f);
}

/// Generated fields are divergence free, so the bracket pairing oracle reads
/// <coad_vf(X, Pi), Y> = <Pi, [Y, X]_alg>.
void check_coad_vf_duality(const HamVF<R>& X, const GaussOneForm<R>& Pi, const HamVF<R>& Y) {
  IntegralValue<R> lhs = phase_pairing(coad_vf(X, Pi), Y);
  IntegralValue<R> rhs = phase_pairing(Pi, alg_bracket(Y, X));
  CHECK(lhs == rhs);
}

}  // namespace

TEST_CASE("momentum lift") {
  TrigPoly<R> f = cosq();
  CHECK(momentum_lift(SymTensorField<R>::single(ten2(f))) == pmono(2, f));
  CHECK(momentum_lift(SymTensorField<R>::single(SymTensor<R>::scalar(f))) ==
        PhaseFunction<R>::from_trig(f));
  CHECK(momentum_lift(SymTensorField<R>::single(vec1(f))) == pmono(1, f));
  // off-diagonal component carries its permutation multiplicity
  SymTensor<R> t(2, 2);
  t.set_component({0, 1}, TrigPoly<R>::constant(2, R(1)));
  PhaseFunction<R> lifted = momentum_lift(SymTensorField<R>::single(t));
  CHECK(lifted == PhaseFunction<R>::monomial({1, 1}, TrigPoly<R>::constant(2, R(2))));
}

TEST_CASE("momentum lift inverts") {
  Rng rng(67);
  for (int trial = 0; trial < 6; ++trial) {
    const int d = trial % 2 + 1;
    SymTensorField<R> X = random_field<R>(rng, d, 0, 3, 2);
    CHECK(momentum_unlift(momentum_lift(X)) == X);
  }
}

TEST_CASE("hamiltonian vector field") {
  TrigPoly<R> f = cosq();
  HamVF<R> X = hamiltonian_vf(pmono(2, f));
  CHECK(X.dq[0] == pmono(1, f.scaled(R(2))));
  CHECK(X.dp[0] == -pmono(2, f.diff(0)));
  CHECK(hamiltonian_vf(PhaseFunction<R>::from_trig(one1())).is_zero());
  HamVF<R> free = hamiltonian_vf(pmono(1, one1()));
  CHECK(free.dq[0] == PhaseFunction<R>::from_trig(one1()));
  CHECK(free.dp[0].is_zero());
}

TEST_CASE("poisson bracket convention") {
  PhaseFunction<R> p = pmono(1, one1());
  PhaseFunction<R> s = PhaseFunction<R>::from_trig(sinq());
  CHECK(poisson(p, s) == PhaseFunction<R>::from_trig(-cosq()));
  Rng rng(71);
  PhaseFunction<R> f = random_phase<R>(rng, 1, 2, 2);
  CHECK(poisson(f, f).is_zero());
}

TEST_CASE("cotangent lift on the fluid block") {
  // gccl(d/dq) = -d/dq
  HamVF<R> lifted = cotangent_lift(SymTensorField<R>::single(vec1(one1())));
  CHECK(lifted.dq[0] == PhaseFunction<R>::from_trig(-one1()));
  CHECK(lifted.dp[0].is_zero());
  // gccl(sigma) = sigma_{,q} d/dp
  TrigPoly<R> sigma = sinq();
  HamVF<R> ls = cotangent_lift(SymTensorField<R>::single(SymTensor<R>::scalar(sigma)));
  CHECK(ls.dq[0].is_zero());
  CHECK(ls.dp[0] == PhaseFunction<R>::from_trig(sigma.diff(0)));
  CHECK(cotangent_lift(SymTensorField<R>::zero(1)).is_zero());
  // full fluid pattern: -X d/dq + (sigma_{,q} + p X_{,q}) d/dp
  TrigPoly<R> u = cosq();
  SymTensorField<R> fl(1);
  fl.add_grade(SymTensor<R>::scalar(sigma));
  fl.add_grade(vec1(u));
  HamVF<R> lf = cotangent_lift(fl);
  CHECK(lf.dq[0] == PhaseFunction<R>::from_trig(-u));
  CHECK(lf.dp[0] == PhaseFunction<R>::from_trig(sigma.diff(0)) + pmono(1, u.diff(0)));
}

TEST_CASE("jacobi-lie bracket and the generator correspondence") {
  HamVF<R> dq = hamiltonian_vf(pmono(1, one1()));
  HamVF<R> Y(1);
  Y.dp[0] = PhaseFunction<R>::from_trig(cosq());
  HamVF<R> br = jacobi_lie(dq, Y);
  CHECK(br.dq[0].is_zero());
  CHECK(br.dp[0] == PhaseFunction<R>::from_trig(-sinq()));
  CHECK(jacobi_lie(Y, Y).is_zero());

  Rng rng(73);
  for (int trial = 0; trial < 5; ++trial) {
    const int d = trial % 2 + 1;
    PhaseFunction<R> h = random_phase<R>(rng, d, 2, 1);
    PhaseFunction<R> f = random_phase<R>(rng, d, 2, 1);
    CHECK(alg_bracket(hamiltonian_vf(h), hamiltonian_vf(f)) == hamiltonian_vf(poisson(h, f)));
  }
}

TEST_CASE("cotangent lift is a homomorphism") {
  Rng rng(79);
  for (int trial = 0; trial < 5; ++trial) {
    const int d = trial % 2 + 1;
    SymTensorField<R> X = random_field<R>(rng, d, 0, 3, 1);
    SymTensorField<R> Y = random_field<R>(rng, d, 0, 3, 1);
    CHECK(cotangent_lift(schouten_graded(X, Y)) ==
          alg_bracket(cotangent_lift(X), cotangent_lift(Y)));
  }
}

TEST_CASE("generated fields have zero phase divergence") {
  Rng rng(83);
  for (int trial = 0; trial < 5; ++trial) {
    const int d = trial % 2 + 1;
    CHECK(hamiltonian_vf(random_phase<R>(rng, d, 3, 2)).phase_divergence().is_zero());
  }
}

TEST_CASE("decompose by momentum degree") {
  TrigPoly<R> u = cosq(), f = sinq();
  PhaseFunction<R> h =
      PhaseFunction<R>::from_trig(sinq()) + pmono(1, u) + pmono(2, f);
  auto [xs, xn] = decompose_ham(hamiltonian_vf(h));
  CHECK(*xs.signed_generator() == PhaseFunction<R>::from_trig(sinq()) + pmono(1, u));
  CHECK(*xn.signed_generator() == pmono(2, f));
  CHECK(xs + xn == hamiltonian_vf(h));

  auto [cs, cn] = decompose_ham(hamiltonian_vf(PhaseFunction<R>::from_trig(one1())));
  CHECK(cs.is_zero());
  CHECK(cn.is_zero());
  CHECK(cs.signed_generator()->is_zero());

  HamVF<R> bare(1);
  CHECK_THROWS_AS(decompose_ham(bare), std::invalid_argument);

  // grading respected: the split of a lift is the lift of the split
  Rng rng(89);
  for (int trial = 0; trial < 4; ++trial) {
    const int d = trial % 2 + 1;
    SymTensorField<R> X = random_field<R>(rng, d, 1, 3, 1);  // no grade-0 constant ambiguity
    auto [s_part, n_part] = decompose_ham(cotangent_lift(X));
    CHECK(s_part == cotangent_lift(fluid_part(X)));
    CHECK(n_part == cotangent_lift(higher_part(X)));
  }
}

TEST_CASE("action transport through the lift") {
  // gccl(X) |> gccl(sigma, Y) computed on the tensor side matches the lift of
  // the action, which is minus the hamiltonian field of the lifted bracket
  TrigPoly<R> f = cosq(), g = sinq();
  SymTensorField<R> eta = SymTensorField<R>::single(ten2(f));
  SymTensorField<R> xi = SymTensorField<R>::single(SymTensor<R>::scalar(g));
  HamVF<R> lhs = cotangent_lift(act_on_fluid(eta, xi));
  PhaseFunction<R> bracket_hat = momentum_lift(schouten_graded(eta, xi));
  CHECK(lhs == -hamiltonian_vf(bracket_hat));
}

TEST_CASE("covariant moments of a weighted dq one-form") {
  TrigPoly<R> f = sinq();
  GaussOneForm<R> Pi(1);
  Pi.dq[0] = GaussWeighted<R>(PhaseFunction<R>::from_trig(f));
  SymCovField<R> mom = covariant_moments(Pi, 4);
  CHECK(mom.grade(0).is_zero());
  SymCoTensor<R> M(1, 1);
  M.set_component({0}, -f);
  CHECK(mom.grade(1) == M);
  CHECK(mom.grade(2).is_zero());  // odd gaussian moment
  SymCoTensor<R> A3(1, 3);
  A3.set_component({0, 0, 0}, f.scaled(R(-3)));  // -3 moment(2) f
  CHECK(mom.grade(3) == A3);
  CHECK(mom.grade(4).is_zero());
  CHECK(covariant_moments(GaussOneForm<R>(1), 3).is_zero());
}

TEST_CASE("moments are adjoint to the lift") {
  Rng rng(97);
  for (int trial = 0; trial < 5; ++trial) {
    const int d = trial % 2 + 1;
    SymTensorField<R> X = random_field<R>(rng, d, 0, 3, 1);
    GaussOneForm<R> Pi = random_gauss_form<R>(rng, d, 2, 1);
    IntegralValue<R> lhs = pairing(covariant_moments(Pi, X.max_order()), X);
    IntegralValue<R> rhs = phase_pairing(Pi, cotangent_lift(X));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("density function") {
  // Pi = h(p) dq gives -h'(p)
  GaussOneForm<R> Pi(1);
  Pi.dq[0] = GaussWeighted<R>(pmono(2, one1()));  // p^2 w
  GaussWeighted<R> expected = -GaussWeighted<R>(pmono(2, one1())).diff_p(0);
  CHECK(density(Pi) == expected);
  CHECK(density(GaussOneForm<R>(1)).is_zero());

  // Pi = psi_p dq - psi_q dp evaluates to minus the phase-space laplacian
  GaussWeighted<R> psi(PhaseFunction<R>::from_trig(sinq()));
  GaussOneForm<R> stream(1);
  stream.dq[0] = psi.diff_p(0);
  stream.dp[0] = -psi.diff_q(0);
  GaussWeighted<R> laplacian = psi.diff_q(0).diff_q(0) + psi.diff_p(0).diff_p(0);
  CHECK(density(stream) == -laplacian);
}

TEST_CASE("momentum map evaluates the generator") {
  PhaseFunction<double> h =
      PhaseFunction<double>::monomial({1}, TrigPoly<double>::harmonic_sin(1, {1}, 1.0));
  HamVF<double> X = hamiltonian_vf(h);
  double q0 = 0.7, p0 = -1.3;
  CHECK(momentum_map(std::span<const double>(&q0, 1), std::span<const double>(&p0, 1), X) ==
        doctest::Approx(p0 * std::sin(q0)));
  HamVF<double> c = hamiltonian_vf(PhaseFunction<double>::from_trig(
      TrigPoly<double>::constant(1, 2.5)));
  CHECK(momentum_map(std::span<const double>(&q0, 1), std::span<const double>(&p0, 1), c) ==
        doctest::Approx(2.5));
}

TEST_CASE("one-form coadjoint action") {
  HamVF<R> dq = hamiltonian_vf(pmono(1, one1()));
  GaussOneForm<R> Pi(1);
  Pi.dq[0] = GaussWeighted<R>(PhaseFunction<R>::from_trig(sinq()));
  GaussOneForm<R> out = coad_vf(dq, Pi);
  GaussOneForm<R> expected(1);
  expected.dq[0] = GaussWeighted<R>(PhaseFunction<R>::from_trig(-cosq()));
  CHECK(out == expected);
  CHECK(coad_vf(dq, GaussOneForm<R>(1)).is_zero());

  Rng rng(101);
  for (int trial = 0; trial < 4; ++trial) {
    const int d = trial % 2 + 1;
    HamVF<R> X = hamiltonian_vf(random_phase<R>(rng, d, 2, 1));
    HamVF<R> Y = hamiltonian_vf(random_phase<R>(rng, d, 2, 1));
    GaussOneForm<R> form = random_gauss_form<R>(rng, d, 2, 1);
    check_coad_vf_duality(X, form, Y);
  }

  HamVF<R> skew(1);
  skew.dq[0] = PhaseFunction<R>::from_trig(sinq());  // nonzero divergence
  CHECK_THROWS_AS(coad_vf(skew, Pi), std::invalid_argument);
}

TEST_CASE("moment section inverts the moments") {
  Rng rng(103);
  for (int trial = 0; trial < 5; ++trial) {
    const int d = trial % 2 + 1;
    const int N = d == 1 ? 4 : 3;
    SymCovField<R> target = random_cov_field<R>(rng, d, 0, N, 1);
    // the grade-0 slot must be mean free to lie in the image
    TrigPoly<R> rho = target.grade(0).component({});
    rho.add_term(std::vector<int>(d, 0), -rho.coeff(std::vector<int>(d, 0)));
    SymCoTensor<R> g0(d, 0);
    g0.set_component({}, rho);
    target.set_grade(0, g0);

    GaussOneForm<R> Pi = gauss_one_form_with_moments(target, N);
    CHECK(covariant_moments(Pi, N) == target);
  }
  // a mean-bearing grade-0 target is rejected
  SymCovField<R> bad = SymCovField<R>::single(SymCoTensor<R>::scalar(one1()));
  CHECK_THROWS_AS(gauss_one_form_with_moments(bad, 2), std::invalid_argument);
}
