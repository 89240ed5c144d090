#pragma once

// Functions on T*T^d = T^d x R^d that are trigonometric in q and polynomial
// in p, plus their Gaussian-weighted companions. The weight is fixed as
// w(p) = (2*pi)^(-d/2) exp(-|p|^2/2), the minimal class closed under the
// operations used here with exactly computable fiber integrals.

#include <map>
#include <span>
#include <vector>

#include "schouten/scalar.hpp"
#include "schouten/trigpoly.hpp"

namespace schouten {

/// Normalized Gaussian moment: integral of p^n w(p) dp over R^d, equal to
/// prod_i (n_i - 1)!! when every n_i is even and zero otherwise.
template <class S>
S gaussian_moment(const std::vector<int>& degrees) {
  S result = scalar_traits<S>::from_int(1);
  for (int n : degrees) {
    detail::require(n >= 0, "negative momentum degree");
    if (n % 2 != 0) return scalar_traits<S>::from_int(0);
    long long df = 1;
    for (long long m = n - 1; m >= 1; m -= 2) df *= m;
    result = result * scalar_traits<S>::from_int(df);
  }
  return result;
}

/// sum_alpha f_alpha(q) p^alpha with finitely many momentum degrees alpha.
template <class S>
class PhaseFunction {
 public:
  using TermMap = std::map<std::vector<int>, TrigPoly<S>>;

  PhaseFunction() : dim_(1) {}
  explicit PhaseFunction(int dim) : dim_(dim) {
    detail::require(dim >= 1, "dim must be >= 1");
  }

  static PhaseFunction zero(int dim) { return PhaseFunction(dim); }

  static PhaseFunction from_trig(const TrigPoly<S>& f) {
    PhaseFunction out(f.dim());
    out.add_term(std::vector<int>(f.dim(), 0), f);
    return out;
  }

  static PhaseFunction monomial(const std::vector<int>& pdeg, const TrigPoly<S>& f) {
    PhaseFunction out(f.dim());
    out.add_term(pdeg, f);
    return out;
  }

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  TrigPoly<S> coefficient(const std::vector<int>& pdeg) const {
    auto it = terms_.find(pdeg);
    return it == terms_.end() ? TrigPoly<S>::zero(dim_) : it->second;
  }

  void add_term(const std::vector<int>& pdeg, const TrigPoly<S>& f) {
    detail::require(static_cast<int>(pdeg.size()) == dim_, "momentum degree dimension mismatch");
    for (int d : pdeg) detail::require(d >= 0, "negative momentum degree");
    detail::require(f.dim() == dim_, "dimension mismatch");
    if (f.is_zero()) return;
    auto it = terms_.find(pdeg);
    if (it == terms_.end()) {
      terms_.emplace(pdeg, f);
      return;
    }
    it->second = it->second + f;
    if (it->second.is_zero()) terms_.erase(it);
  }

  PhaseFunction operator+(const PhaseFunction& o) const {
    check_same_dim(o);
    PhaseFunction out = *this;
    for (const auto& [a, f] : o.terms_) out.add_term(a, f);
    return out;
  }

  PhaseFunction operator-(const PhaseFunction& o) const { return *this + (-o); }

  PhaseFunction operator-() const {
    PhaseFunction out(dim_);
    for (const auto& [a, f] : terms_) out.terms_.emplace(a, -f);
    return out;
  }

  PhaseFunction scaled(const S& s) const {
    PhaseFunction out(dim_);
    for (const auto& [a, f] : terms_) {
      TrigPoly<S> g = f.scaled(s);
      if (!g.is_zero()) out.terms_.emplace(a, g);
    }
    return out;
  }

  PhaseFunction operator*(const PhaseFunction& o) const {
    check_same_dim(o);
    PhaseFunction out(dim_);
    std::vector<int> deg(dim_);
    for (const auto& [a, f] : terms_) {
      for (const auto& [b, g] : o.terms_) {
        for (int i = 0; i < dim_; ++i) deg[i] = a[i] + b[i];
        out.add_term(deg, f * g);
      }
    }
    return out;
  }

  PhaseFunction diff_q(int axis) const {
    detail::require(axis >= 0 && axis < dim_, "axis out of range");
    PhaseFunction out(dim_);
    for (const auto& [a, f] : terms_) out.add_term(a, f.diff(axis));
    return out;
  }

  /// d/dp_axis, exponent drops by one.
  PhaseFunction diff_p(int axis) const {
    detail::require(axis >= 0 && axis < dim_, "axis out of range");
    PhaseFunction out(dim_);
    for (const auto& [a, f] : terms_) {
      if (a[axis] == 0) continue;
      std::vector<int> b = a;
      --b[axis];
      out.add_term(b, f.scaled(scalar_traits<S>::from_int(a[axis])));
    }
    return out;
  }

  int max_pdeg() const {
    int m = 0;
    for (const auto& [a, f] : terms_) {
      int total = 0;
      for (int v : a) total += v;
      m = std::max(m, total);
    }
    return m;
  }

  int max_abs_freq() const {
    int m = 0;
    for (const auto& [a, f] : terms_) m = std::max(m, f.max_abs_freq());
    return m;
  }

  bool operator==(const PhaseFunction& o) const {
    return dim_ == o.dim_ && terms_ == o.terms_;
  }

 private:
  void check_same_dim(const PhaseFunction& o) const {
    detail::require(dim_ == o.dim_, "dimension mismatch");
  }

  int dim_;
  TermMap terms_;
};

inline double evaluate(const PhaseFunction<double>& f, std::span<const double> q,
                       std::span<const double> p) {
  detail::require(static_cast<int>(p.size()) == f.dim(), "point dimension mismatch");
  double acc = 0.0;
  for (const auto& [a, g] : f.terms()) {
    double mono = 1.0;
    for (int i = 0; i < f.dim(); ++i)
      for (int c = 0; c < a[i]; ++c) mono *= p[i];
    acc += mono * evaluate(g, q);
  }
  return acc;
}

/// poly(q,p) * w(p). Closed under q/p derivatives and multiplication by
/// PhaseFunction; never multiplied against another weighted value (w^2 is
/// outside the class).
template <class S>
struct GaussWeighted {
  PhaseFunction<S> poly;

  GaussWeighted() = default;
  explicit GaussWeighted(int dim) : poly(dim) {}
  explicit GaussWeighted(PhaseFunction<S> f) : poly(std::move(f)) {}

  int dim() const { return poly.dim(); }
  bool is_zero() const { return poly.is_zero(); }

  GaussWeighted operator+(const GaussWeighted& o) const { return GaussWeighted(poly + o.poly); }
  GaussWeighted operator-(const GaussWeighted& o) const { return GaussWeighted(poly - o.poly); }
  GaussWeighted operator-() const { return GaussWeighted(-poly); }
  GaussWeighted scaled(const S& s) const { return GaussWeighted(poly.scaled(s)); }
  GaussWeighted mul(const PhaseFunction<S>& f) const { return GaussWeighted(poly * f); }

  GaussWeighted diff_q(int axis) const { return GaussWeighted(poly.diff_q(axis)); }

  /// Product rule with the weight factor: (f w)' = (f' - p_axis f) w.
  GaussWeighted diff_p(int axis) const {
    std::vector<int> unit(dim(), 0);
    unit[axis] = 1;
    PhaseFunction<S> p_axis = PhaseFunction<S>::monomial(
        unit, TrigPoly<S>::constant(dim(), scalar_traits<S>::from_int(1)));
    return GaussWeighted(poly.diff_p(axis) - poly * p_axis);
  }

  /// Exact fiber integral over R^d against the normalized weight.
  TrigPoly<S> fiber_integral() const {
    TrigPoly<S> out(dim());
    for (const auto& [a, f] : poly.terms()) {
      S m = gaussian_moment<S>(a);
      if (!scalar_traits<S>::is_zero(m)) out = out + f.scaled(m);
    }
    return out;
  }

  bool operator==(const GaussWeighted& o) const { return poly == o.poly; }
};

/// Integral over T^d x R^d of a weighted integrand: torus zero mode of the
/// fiber integral times the torus volume.
template <class S>
IntegralValue<S> integrate_phase(const GaussWeighted<S>& g) {
  return g.fiber_integral().integrate();
}

}  // namespace schouten
