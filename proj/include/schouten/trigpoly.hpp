#pragma once

// Finite Fourier series on the d-torus, the coefficient ring for every field
// in the library. Terms map an integer frequency vector k to a complex
// coefficient c_k; real-valued fields satisfy c_{-k} = conj(c_k) and both
// halves are stored. Products are exact frequency-domain convolutions, so no
// bandwidth is ever lost implicitly.

#include <map>
#include <span>
#include <vector>

#include "schouten/scalar.hpp"

namespace schouten {

template <class S>
class TrigPoly {
 public:
  using Coeff = Complex<S>;
  using TermMap = std::map<std::vector<int>, Coeff>;

  TrigPoly() : dim_(1) {}
  explicit TrigPoly(int dim) : dim_(dim) { detail::require(dim >= 1, "dim must be >= 1"); }

  static TrigPoly zero(int dim) { return TrigPoly(dim); }

  static TrigPoly constant(int dim, S value) {
    TrigPoly p(dim);
    p.add_term(std::vector<int>(dim, 0), Coeff(std::move(value)));
    return p;
  }

  /// amp * cos(k . q)
  static TrigPoly harmonic_cos(int dim, const std::vector<int>& freq, S amp) {
    TrigPoly p(dim);
    p.check_freq(freq);
    S half = amp * scalar_traits<S>::from_ratio(1, 2);
    if (all_zero(freq)) {
      p.add_term(freq, Coeff(std::move(amp)));
      return p;
    }
    p.add_term(freq, Coeff(half));
    p.add_term(negated(freq), Coeff(half));
    return p;
  }

  /// amp * sin(k . q)
  static TrigPoly harmonic_sin(int dim, const std::vector<int>& freq, S amp) {
    TrigPoly p(dim);
    p.check_freq(freq);
    if (all_zero(freq)) return p;
    S zero = scalar_traits<S>::from_int(0);
    S half = amp * scalar_traits<S>::from_ratio(1, 2);
    p.add_term(freq, Coeff(zero, -half));
    p.add_term(negated(freq), Coeff(zero, half));
    return p;
  }

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  Coeff coeff(const std::vector<int>& freq) const {
    auto it = terms_.find(freq);
    return it == terms_.end() ? Coeff() : it->second;
  }

  void add_term(const std::vector<int>& freq, const Coeff& c) {
    check_freq(freq);
    auto it = terms_.find(freq);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(freq, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  TrigPoly operator+(const TrigPoly& o) const {
    check_same_dim(o);
    TrigPoly out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k, c);
    return out;
  }

  TrigPoly operator-(const TrigPoly& o) const { return *this + (-o); }

  TrigPoly operator-() const {
    TrigPoly out(dim_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
  }

  TrigPoly scaled(const S& s) const {
    TrigPoly out(dim_);
    if (scalar_traits<S>::is_zero(s)) return out;
    for (const auto& [k, c] : terms_) {
      Coeff sc = c * s;
      if (!sc.is_zero()) out.terms_.emplace(k, sc);
    }
    return out;
  }

  /// Exact convolution product.
  TrigPoly operator*(const TrigPoly& o) const {
    check_same_dim(o);
    TrigPoly out(dim_);
    std::vector<int> k(dim_);
    for (const auto& [ka, ca] : terms_) {
      for (const auto& [kb, cb] : o.terms_) {
        for (int i = 0; i < dim_; ++i) k[i] = ka[i] + kb[i];
        out.add_term(k, ca * cb);
      }
    }
    return out;
  }

  /// d/dq^axis, term-wise multiplication by i*k_axis.
  TrigPoly diff(int axis) const {
    detail::require(axis >= 0 && axis < dim_, "axis out of range");
    TrigPoly out(dim_);
    for (const auto& [k, c] : terms_) {
      if (k[axis] == 0) continue;
      S f = scalar_traits<S>::from_int(k[axis]);
      out.terms_.emplace(k, Coeff(-(c.im * f), c.re * f));
    }
    return out;
  }

  /// Integral over the torus: (2*pi)^d times the zero-frequency coefficient.
  IntegralValue<S> integrate() const {
    Coeff c0 = coeff(std::vector<int>(dim_, 0));
    return IntegralValue<S>(c0.re, dim_);
  }

  bool is_real() const {
    for (const auto& [k, c] : terms_) {
      Coeff mirror = coeff(negated(k));
      if (!(mirror == c.conj())) return false;
    }
    return true;
  }

  int max_abs_freq() const {
    int m = 0;
    for (const auto& [k, c] : terms_)
      for (int ki : k) m = std::max(m, std::abs(ki));
    return m;
  }

  /// Drop every mode with |k_i| > band on some axis.
  TrigPoly bandlimited(int band) const {
    TrigPoly out(dim_);
    for (const auto& [k, c] : terms_) {
      bool keep = true;
      for (int ki : k)
        if (std::abs(ki) > band) keep = false;
      if (keep) out.terms_.emplace(k, c);
    }
    return out;
  }

  bool operator==(const TrigPoly& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

 private:
  static bool all_zero(const std::vector<int>& k) {
    for (int v : k)
      if (v != 0) return false;
    return true;
  }
  static std::vector<int> negated(std::vector<int> k) {
    for (int& v : k) v = -v;
    return k;
  }
  void check_freq(const std::vector<int>& freq) const {
    detail::require(static_cast<int>(freq.size()) == dim_, "frequency dimension mismatch");
  }
  void check_same_dim(const TrigPoly& o) const {
    detail::require(dim_ == o.dim_, "dimension mismatch");
  }

  int dim_;
  TermMap terms_;
};

inline double evaluate(const TrigPoly<double>& f, std::span<const double> q) {
  detail::require(static_cast<int>(q.size()) == f.dim(), "point dimension mismatch");
  double acc = 0.0;
  for (const auto& [k, c] : f.terms()) {
    double phase = 0.0;
    for (int i = 0; i < f.dim(); ++i) phase += k[i] * q[i];
    acc += c.re * std::cos(phase) - c.im * std::sin(phase);
  }
  return acc;
}

}  // namespace schouten
