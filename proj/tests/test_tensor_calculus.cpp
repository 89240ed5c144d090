#include <doctest.h>

#include "schouten/random_fields.hpp"
#include "schouten/tensor_calculus.hpp"

using namespace schouten;
using R = Rational;

namespace {

TrigPoly<R> cosq(int k = 1) { return TrigPoly<R>::harmonic_cos(1, {k}, R(1)); }
TrigPoly<R> sinq(int k = 1) { return TrigPoly<R>::harmonic_sin(1, {k}, R(1)); }
TrigPoly<R> one1() { return TrigPoly<R>::constant(1, R(1)); }

SymTensor<R> vec1(const TrigPoly<R>& u) {  // u d/dq in d = 1
  SymTensor<R> t(1, 1);
  t.set_component({0}, u);
  return t;
}

SymTensor<R> ten2(const TrigPoly<R>& f) {  // f d/dq x d/dq in d = 1
  SymTensor<R> t(1, 2);
  t.set_component({0, 0}, f);
  return t;
}

SymCoTensor<R> cov1(const TrigPoly<R>& a) {  // a dq in d = 1
  SymCoTensor<R> t(1, 1);
  t.set_component({0}, a);
  return t;
}

SymCoTensor<R> cov2(const TrigPoly<R>& a) {  // a dq x dq in d = 1
  SymCoTensor<R> t(1, 2);
  t.set_component({0, 0}, a);
  return t;
}

}  // namespace

TEST_CASE("bracket of a constant vector field with a function") {
  // [d/dq, sin q] = cos q
  SymTensor<R> out = schouten_bracket(vec1(one1()), SymTensor<R>::scalar(sinq()));
  CHECK(out == SymTensor<R>::scalar(cosq()));
}

TEST_CASE("two order-0 fields bracket to zero") {
  CHECK(schouten_bracket(SymTensor<R>::scalar(sinq()), SymTensor<R>::scalar(cosq())).is_zero());
}

TEST_CASE("order-2 against order-0: [f dq x dq, g] = 2 f g' dq") {
  SymTensor<R> out = schouten_bracket(ten2(cosq()), SymTensor<R>::scalar(sinq()));
  CHECK(out == vec1((cosq() * cosq()).scaled(R(2))));
}

TEST_CASE("vector field bracket matches its classical formula") {
  Rng rng(3);
  for (int trial = 0; trial < 6; ++trial) {
    TrigPoly<R> u = random_trig<R>(rng, 1, 2, 2);
    TrigPoly<R> v = random_trig<R>(rng, 1, 2, 2);
    SymTensor<R> lhs = schouten_bracket(vec1(u), vec1(v));
    CHECK(lhs == vec1(u * v.diff(0) - v * u.diff(0)));
  }
}

TEST_CASE("graded bracket: [d/dq, sin q + cos q d/dq]") {
  SymTensorField<R> X = SymTensorField<R>::single(vec1(one1()));
  SymTensorField<R> Y(1);
  Y.add_grade(SymTensor<R>::scalar(sinq()));
  Y.add_grade(vec1(cosq()));
  SymTensorField<R> out = schouten_graded(X, Y);
  CHECK(out.grade(0) == SymTensor<R>::scalar(cosq()));
  CHECK(out.grade(1) == vec1(-sinq()));
}

TEST_CASE("graded bracket is antisymmetric and reduces to single grades") {
  Rng rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    const int d = trial % 2 + 1;
    SymTensorField<R> X = random_field<R>(rng, d, 0, 3, 2);
    SymTensorField<R> Y = random_field<R>(rng, d, 0, 3, 2);
    CHECK(schouten_graded(X, X).is_zero());
    CHECK(residual_of(schouten_graded(X, Y) + schouten_graded(Y, X)) == R(0));
    SymTensor<R> a = random_tensor<R>(rng, d, 2, 2);
    SymTensor<R> b = random_tensor<R>(rng, d, 1, 2);
    CHECK(schouten_graded(SymTensorField<R>::single(a), SymTensorField<R>::single(b)).grade(2) ==
          schouten_bracket(a, b));
  }
}

TEST_CASE("jacobi identity on small random fields") {
  Rng rng(29);
  for (int trial = 0; trial < 4; ++trial) {
    const int d = trial % 2 + 1;
    SymTensorField<R> X = random_field<R>(rng, d, 0, 2, 1);
    SymTensorField<R> Y = random_field<R>(rng, d, 0, 2, 1);
    SymTensorField<R> Z = random_field<R>(rng, d, 0, 2, 1);
    SymTensorField<R> res = schouten_graded(schouten_graded(X, Y), Z) +
                            schouten_graded(schouten_graded(Y, Z), X) +
                            schouten_graded(schouten_graded(Z, X), Y);
    CHECK(residual_of(res) == R(0));
  }
}

TEST_CASE("lie derivative is the order-1 bracket") {
  CHECK(lie_derivative(vec1(one1()), ten2(sinq())) == ten2(cosq()));
  TrigPoly<R> u = cosq(2);
  CHECK(lie_derivative(vec1(u), SymTensor<R>::scalar(sinq())) ==
        SymTensor<R>::scalar(u * cosq()));
  CHECK(lie_derivative(vec1(u), vec1(u)).is_zero());
  CHECK_THROWS_AS(lie_derivative(ten2(u), vec1(u)), std::invalid_argument);
}

TEST_CASE("divergence") {
  CHECK(divergence(ten2(sinq())) == vec1(cosq().scaled(R(2))));
  CHECK(divergence(SymTensor<R>::scalar(sinq())).is_zero());
  CHECK(divergence(vec1(sinq())) == SymTensor<R>::scalar(cosq()));
}

TEST_CASE("contractions") {
  // (f dq x dq) into (g dq) leaves f g d/dq
  TrigPoly<R> f = cosq(), g = sinq();
  CHECK(contra_contract(ten2(f), cov1(g)) == vec1(f * g));
  // order-0 contraction is scalar multiplication
  CHECK(cov_contract(SymTensor<R>::scalar(f), cov1(g)) == cov1(f * g));
  // full contraction lands in covariant order 0
  SymCoTensor<R> full = cov_contract(vec1(f), cov1(g));
  CHECK(full.order() == 0);
  CHECK(full == SymCoTensor<R>::scalar(f * g));
  // div X^2 contracted into A_2 in d = 1: 2 f' a dq
  SymCoTensor<R> dc = cov_contract(divergence(ten2(f)), cov2(g));
  CHECK(dc == cov1(f.diff(0) * g * TrigPoly<R>::constant(1, R(2))));
}

TEST_CASE("star and ast") {
  TrigPoly<R> a = cosq(), u = sinq();
  CHECK(star(cov1(a), vec1(u)) == cov1(a * u.diff(0)));
  CHECK(ast(vec1(u), cov1(a)) == cov1(u * a.diff(0)));
  // star vanishes identically at output order 0
  CHECK(star(cov1(a), ten2(u)).is_zero());
}

TEST_CASE("generalized lie derivative special cases") {
  TrigPoly<R> a = sinq();
  // constant-coefficient order 1: L_{d/dq}(sin q dq) = cos q dq
  CHECK(gen_lie(vec1(one1()), cov1(a)) == cov1(cosq()));
  // order-0 actor on order-0 target: rho d sigma
  TrigPoly<R> rho = cosq(), sigma = sinq();
  CHECK(gen_lie(SymTensor<R>::scalar(sigma), SymCoTensor<R>::scalar(rho)) ==
        cov1(rho * sigma.diff(0)));
  // order-1 actor equals the classical covariant formula
  Rng rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    TrigPoly<R> u = random_trig<R>(rng, 1, 2, 2);
    TrigPoly<R> b = random_trig<R>(rng, 1, 2, 2);
    // m = 2: (L_Y A)_{11} = 2 A_{1l} Y^l_{,1} + Y^l A_{11,l} in d = 1
    SymCoTensor<R> expected = cov2(b.scaled(R(2)) * u.diff(0) + u * b.diff(0));
    CHECK(gen_lie(vec1(u), cov2(b)) == expected);
  }
}

TEST_CASE("pairing") {
  SymCovField<R> A = SymCovField<R>::single(cov1(sinq()));
  SymTensorField<R> X = SymTensorField<R>::single(vec1(sinq()));
  CHECK(pairing(A, X) == IntegralValue<R>(R(1) / 2, 1));  // pi
  CHECK(pairing(A, SymTensorField<R>::zero(1)).is_zero());
  TrigPoly<R> f = one1() + cosq();
  CHECK(pairing(SymCovField<R>::single(cov2(one1())), SymTensorField<R>::single(ten2(f))) ==
        f.integrate());
}

TEST_CASE("coadjoint closed form on elementary data") {
  // constant vector field on a one-form: ad*_{d/dq}(sin q dq) = cos q dq
  SymTensorField<R> X = SymTensorField<R>::single(vec1(one1()));
  SymCovField<R> A = SymCovField<R>::single(cov1(sinq()));
  CHECK(coadjoint(X, A) == SymCovField<R>::single(cov1(cosq())));
  CHECK(coadjoint(SymTensorField<R>::zero(1), A).is_zero());
  // grade-0 momentum pushed by u d/dq: u rho' + u' rho
  TrigPoly<R> u = cosq(), rho = sinq();
  SymCovField<R> B = SymCovField<R>::single(SymCoTensor<R>::scalar(rho));
  CHECK(coadjoint(SymTensorField<R>::single(vec1(u)), B) ==
        SymCovField<R>::single(SymCoTensor<R>::scalar(u * rho.diff(0) + u.diff(0) * rho)));
}

TEST_CASE("coadjoint matches its defining pairing") {
  Rng rng(37);
  for (int trial = 0; trial < 4; ++trial) {
    const int d = trial % 2 + 1;
    const int freq = d == 1 ? 2 : 1;
    SymTensorField<R> X = random_field<R>(rng, d, 0, 2, freq);
    SymCovField<R> A = random_cov_field<R>(rng, d, 0, 3, freq);
    SymCovField<R> D = coadjoint(X, A);
    int bound = X.max_abs_freq() + A.max_abs_freq();
    for (const auto& Y : partner_fields<R>(d, {0, 1, 2, 3, 4}, bound)) {
      CHECK(pairing(D, Y) == pairing(A, schouten_graded(Y, X)));
    }
  }
}

TEST_CASE("tensor shape errors") {
  SymTensor<R> t1(1, 1), t2(2, 1);
  CHECK_THROWS_AS(schouten_bracket(t1, t2), std::invalid_argument);
  CHECK_THROWS_AS(cov_contract(ten2(one1()), cov1(one1())), std::invalid_argument);
  SymTensor<R> t(1, 2);
  CHECK_THROWS_AS(t.set_component({0}, one1()), std::invalid_argument);
  CHECK_THROWS_AS(t.set_component({0, 5}, one1()), std::invalid_argument);
}
