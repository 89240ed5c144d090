#pragma once

// Scalar rings for the exact field algebra. Two instantiations are used
// throughout: Rational (arbitrary precision, every identity check is exact)
// and double (time integration only). No mixed-mode arithmetic.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

namespace schouten {

using Rational = boost::multiprecision::cpp_rational;

namespace detail {

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace detail

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static Rational from_int(long long n) { return Rational(n); }
  static Rational from_ratio(long long num, long long den) {
    return Rational(num) / Rational(den);
  }
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static double to_double(const Rational& x) { return x.convert_to<double>(); }
  static Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }
  static std::string to_string(const Rational& x) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(x) << "/"
       << boost::multiprecision::denominator(x);
    return os.str();
  }
  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(s));
    boost::multiprecision::cpp_int num(s.substr(0, slash));
    boost::multiprecision::cpp_int den(s.substr(slash + 1));
    detail::require(den != 0, "rational with zero denominator");
    return Rational(num, den);
  }
};

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static double from_int(long long n) { return static_cast<double>(n); }
  static double from_ratio(long long num, long long den) {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  static bool is_zero(double x) { return x == 0.0; }
  static double to_double(double x) { return x; }
  static double abs(double x) { return std::fabs(x); }
  static std::string to_string(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
  }
  static double parse(const std::string& s) { return std::stod(s); }
};

/// Complex value over a generic real scalar; std::complex is only specified
/// for floating point, so the exact ring carries its own.
template <class S>
struct Complex {
  S re{};
  S im{};

  Complex() = default;
  Complex(S r, S i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(S r) : re(std::move(r)), im(scalar_traits<S>::from_int(0)) {}

  bool is_zero() const {
    return scalar_traits<S>::is_zero(re) && scalar_traits<S>::is_zero(im);
  }
  Complex conj() const { return Complex(re, -im); }

  Complex operator+(const Complex& o) const { return Complex(re + o.re, im + o.im); }
  Complex operator-(const Complex& o) const { return Complex(re - o.re, im - o.im); }
  Complex operator-() const { return Complex(-re, -im); }
  Complex operator*(const Complex& o) const {
    return Complex(re * o.re - im * o.im, re * o.im + im * o.re);
  }
  Complex operator*(const S& s) const { return Complex(re * s, im * s); }
  Complex& operator+=(const Complex& o) {
    re = re + o.re;
    im = im + o.im;
    return *this;
  }
  bool operator==(const Complex& o) const { return re == o.re && im == o.im; }
};

/// Value of an integral over the torus or phase space: a scalar coefficient
/// times (2*pi)^vol_pow. Keeping the volume power symbolic lets the Rational
/// instantiation stay exact; value() collapses it numerically.
template <class S>
struct IntegralValue {
  S coeff{};
  int vol_pow = 0;

  IntegralValue() : coeff(scalar_traits<S>::from_int(0)) {}
  IntegralValue(S c, int pow) : coeff(std::move(c)), vol_pow(pow) {}

  bool is_zero() const { return scalar_traits<S>::is_zero(coeff); }

  IntegralValue operator+(const IntegralValue& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    detail::require(vol_pow == o.vol_pow, "integral volume powers differ");
    return IntegralValue(coeff + o.coeff, vol_pow);
  }
  IntegralValue operator-(const IntegralValue& o) const {
    return *this + IntegralValue(-o.coeff, o.vol_pow);
  }
  IntegralValue operator-() const { return IntegralValue(-coeff, vol_pow); }
  IntegralValue operator*(const S& s) const { return IntegralValue(coeff * s, vol_pow); }

  bool operator==(const IntegralValue& o) const {
    if (is_zero() && o.is_zero()) return true;
    return vol_pow == o.vol_pow && coeff == o.coeff;
  }

  double value() const {
    double v = scalar_traits<S>::to_double(coeff);
    return v * std::pow(2.0 * std::numbers::pi, vol_pow);
  }
};

}  // namespace schouten
