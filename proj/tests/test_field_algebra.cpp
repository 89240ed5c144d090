#include <doctest.h>

#include "schouten/phase.hpp"
#include "schouten/random_fields.hpp"

using namespace schouten;
using R = Rational;

namespace {

TrigPoly<R> cosq(int k = 1) { return TrigPoly<R>::harmonic_cos(1, {k}, R(1)); }
TrigPoly<R> sinq(int k = 1) { return TrigPoly<R>::harmonic_sin(1, {k}, R(1)); }
TrigPoly<R> one1() { return TrigPoly<R>::constant(1, R(1)); }

}  // namespace

TEST_CASE("trig product: cos q * cos q = 1/2 + 1/2 cos 2q") {
  TrigPoly<R> expected = TrigPoly<R>::constant(1, R(1) / 2) +
                         TrigPoly<R>::harmonic_cos(1, {2}, R(1) / 2);
  CHECK(cosq() * cosq() == expected);
}

TEST_CASE("trig product: identity and annihilator") {
  TrigPoly<R> f = cosq(2) + sinq(1);
  CHECK(f * one1() == f);
  CHECK((sinq() * TrigPoly<R>::zero(1)).is_zero());
}

TEST_CASE("trig product agrees with pointwise evaluation") {
  Rng rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = trial % 2 + 1;
    TrigPoly<double> f = random_trig<double>(rng, d, 2, 3);
    TrigPoly<double> g = random_trig<double>(rng, d, 2, 3);
    TrigPoly<double> fg = f * g;
    std::vector<double> q(d);
    for (int i = 0; i < d; ++i) q[i] = 0.1 + 1.7 * i + 0.3 * trial;
    CHECK(evaluate(fg, q) == doctest::Approx(evaluate(f, q) * evaluate(g, q)).epsilon(1e-12));
  }
}

TEST_CASE("trig derivative") {
  CHECK(sinq().diff(0) == cosq());
  CHECK(one1().diff(0).is_zero());
  CHECK(cosq(2).diff(0) == TrigPoly<R>::harmonic_sin(1, {2}, R(-2)));
}

TEST_CASE("torus integral") {
  TrigPoly<R> sin2 = sinq() * sinq();
  CHECK(sin2.integrate() == IntegralValue<R>(R(1) / 2, 1));  // pi
  CHECK(sinq().integrate().is_zero());
  CHECK(one1().integrate() == IntegralValue<R>(R(1), 1));  // 2 pi
}

TEST_CASE("integral of a derivative vanishes") {
  Rng rng(7);
  for (int trial = 0; trial < 8; ++trial) {
    const int d = trial % 2 + 1;
    TrigPoly<R> f = random_trig<R>(rng, d, 2, 3);
    for (int axis = 0; axis < d; ++axis) CHECK(f.diff(axis).integrate().is_zero());
  }
}

TEST_CASE("gaussian moments") {
  CHECK(gaussian_moment<R>({0}) == R(1));
  CHECK(gaussian_moment<R>({1}) == R(0));
  CHECK(gaussian_moment<R>({4}) == R(3));
  // double-factorial recurrence M_n = (n-1) M_{n-2}, run independently
  R prev2 = R(1), prev1 = R(0);
  for (int n = 2; n <= 10; ++n) {
    R expected = scalar_traits<R>::from_int(n - 1) * prev2;
    if (n % 2 == 1) expected = R(0);
    CHECK(gaussian_moment<R>({n}) == expected);
    prev2 = prev1;
    prev1 = expected;
  }
  CHECK(gaussian_moment<R>({2, 4}) == R(3));
  CHECK(gaussian_moment<R>({2, 1}) == R(0));
}

TEST_CASE("phase derivative drops momentum degree") {
  TrigPoly<R> f = cosq();
  PhaseFunction<R> fp2 = PhaseFunction<R>::monomial({2}, f);
  PhaseFunction<R> expected = PhaseFunction<R>::monomial({1}, f.scaled(R(2)));
  CHECK(fp2.diff_p(0) == expected);
}

TEST_CASE("weight derivative contributes -p w") {
  GaussWeighted<R> w(PhaseFunction<R>::from_trig(one1()));
  GaussWeighted<R> expected(PhaseFunction<R>::monomial({1}, TrigPoly<R>::constant(1, R(-1))));
  CHECK(w.diff_p(0) == expected);
}

TEST_CASE("monomial product adds momentum degrees") {
  PhaseFunction<R> fp = PhaseFunction<R>::monomial({1}, cosq());
  PhaseFunction<R> gp = PhaseFunction<R>::monomial({1}, sinq());
  CHECK(fp * gp == PhaseFunction<R>::monomial({2}, cosq() * sinq()));
}

TEST_CASE("momentum degree of a product adds") {
  Rng rng(11);
  for (int trial = 0; trial < 6; ++trial) {
    PhaseFunction<R> f = random_phase<R>(rng, 1, 2, 1);
    PhaseFunction<R> g = random_phase<R>(rng, 1, 2, 1);
    if (f.is_zero() || g.is_zero()) continue;
    CHECK((f * g).max_pdeg() == f.max_pdeg() + g.max_pdeg());
  }
}

TEST_CASE("phase-space integrals") {
  GaussWeighted<R> w(PhaseFunction<R>::from_trig(one1()));
  CHECK(integrate_phase(w) == IntegralValue<R>(R(1), 1));  // 2 pi
  GaussWeighted<R> p2w(PhaseFunction<R>::monomial({2}, one1()));
  CHECK(integrate_phase(p2w) == IntegralValue<R>(R(1), 1));  // moment(2) = 1
  GaussWeighted<R> sw(PhaseFunction<R>::from_trig(sinq()));
  CHECK(integrate_phase(sw).is_zero());
}

TEST_CASE("phase integral of a momentum derivative vanishes") {
  Rng rng(23);
  for (int trial = 0; trial < 6; ++trial) {
    const int d = trial % 2 + 1;
    GaussWeighted<R> g(random_phase<R>(rng, d, 3, 1));
    for (int axis = 0; axis < d; ++axis) CHECK(integrate_phase(g.diff_p(axis)).is_zero());
  }
}

TEST_CASE("ring axioms hold exactly") {
  Rng rng(5);
  for (int trial = 0; trial < 8; ++trial) {
    const int d = trial % 2 + 1;
    TrigPoly<R> a = random_trig<R>(rng, d, 2, 2);
    TrigPoly<R> b = random_trig<R>(rng, d, 2, 2);
    TrigPoly<R> c = random_trig<R>(rng, d, 2, 2);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);

    PhaseFunction<R> f = random_phase<R>(rng, d, 2, 1);
    PhaseFunction<R> g = random_phase<R>(rng, d, 2, 1);
    PhaseFunction<R> h = random_phase<R>(rng, d, 2, 1);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
  }
}

TEST_CASE("Leibniz rule is exact") {
  Rng rng(9);
  for (int trial = 0; trial < 8; ++trial) {
    const int d = trial % 2 + 1;
    TrigPoly<R> a = random_trig<R>(rng, d, 2, 2);
    TrigPoly<R> b = random_trig<R>(rng, d, 2, 2);
    for (int axis = 0; axis < d; ++axis)
      CHECK((a * b).diff(axis) == a.diff(axis) * b + a * b.diff(axis));

    PhaseFunction<R> f = random_phase<R>(rng, d, 2, 1);
    PhaseFunction<R> g = random_phase<R>(rng, d, 2, 1);
    for (int axis = 0; axis < d; ++axis) {
      CHECK((f * g).diff_q(axis) == f.diff_q(axis) * g + f * g.diff_q(axis));
      CHECK((f * g).diff_p(axis) == f.diff_p(axis) * g + f * g.diff_p(axis));
    }
  }
}

TEST_CASE("reality is preserved") {
  Rng rng(13);
  for (int trial = 0; trial < 6; ++trial) {
    const int d = trial % 2 + 1;
    TrigPoly<R> a = random_trig<R>(rng, d, 2, 2);
    TrigPoly<R> b = random_trig<R>(rng, d, 2, 2);
    REQUIRE(a.is_real());
    REQUIRE(b.is_real());
    CHECK((a * b).is_real());
    CHECK((a + b).is_real());
    CHECK(a.diff(0).is_real());
  }
}

TEST_CASE("dimension and axis errors") {
  TrigPoly<R> f1(1), f2(2);
  CHECK_THROWS_AS(f1 * f2, std::invalid_argument);
  CHECK_THROWS_AS(f1.diff(1), std::invalid_argument);
  CHECK_THROWS_AS(f1.diff(-1), std::invalid_argument);
  PhaseFunction<R> g1(1), g2(2);
  CHECK_THROWS_AS(g1 * g2, std::invalid_argument);
  CHECK_THROWS_AS(g1.diff_p(2), std::invalid_argument);
}
