#ifndef QSLOCC4_SCALAR_HPP
#define QSLOCC4_SCALAR_HPP

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>

#include "qslocc4/gaussian.hpp"

namespace qslocc4 {

// The library is templated on the scalar field F. Supported fields:
//   GaussianRational     exact backend, Q(i)
//   std::complex<double> floating backend
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<GaussianRational> {
  static constexpr bool is_exact = true;
  static GaussianRational zero() { return GaussianRational(); }
  static GaussianRational one() { return GaussianRational(1); }
  static GaussianRational imaginary() { return GaussianRational::i(); }
  static GaussianRational from_int(long long v) { return GaussianRational(v); }
  static GaussianRational from_rational(const Rational& r) {
    return GaussianRational(r);
  }
  static bool equals(const GaussianRational& a, const GaussianRational& b) {
    return a == b;
  }
  static std::complex<double> to_complex(const GaussianRational& v) {
    return v.to_complex();
  }
  static double abs(const GaussianRational& v) {
    return std::sqrt(v.norm2().to_double());
  }
  static std::string render(const GaussianRational& v) { return v.to_string(); }
};

template <>
struct FieldTraits<std::complex<double>> {
  static constexpr bool is_exact = false;
  static std::complex<double> zero() { return {0.0, 0.0}; }
  static std::complex<double> one() { return {1.0, 0.0}; }
  static std::complex<double> imaginary() { return {0.0, 1.0}; }
  static std::complex<double> from_int(long long v) {
    return {static_cast<double>(v), 0.0};
  }
  static std::complex<double> from_rational(const Rational& r) {
    return {r.to_double(), 0.0};
  }
  static bool equals(const std::complex<double>& a,
                     const std::complex<double>& b) {
    return a == b;
  }
  static std::complex<double> to_complex(const std::complex<double>& v) {
    return v;
  }
  static double abs(const std::complex<double>& v) { return std::abs(v); }
  // 17 significant digits round-trip doubles exactly.
  static std::string render(const std::complex<double>& v) {
    char buf[96];
    if (v.imag() == 0.0) {
      std::snprintf(buf, sizeof buf, "%.17g", v.real());
      return buf;
    }
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", v.real(), v.imag());
    return buf;
  }
};

// Zero decisions. Exact backend: literal equality with zero. Floating
// backend: |v| <= tol * max(1, scale)^degree, where scale is the largest
// amplitude magnitude of the source state and degree is the degree of the
// tested quantity in the amplitudes.
template <class F>
struct ZeroCtx {
  double tol = 1e-9;
  double scale = 1.0;

  bool is_zero(const F& v, int degree) const {
    if constexpr (FieldTraits<F>::is_exact) {
      (void)degree;
      return v.is_zero();
    } else {
      double bound = tol * std::pow(std::max(1.0, scale), degree);
      return FieldTraits<F>::abs(v) <= bound;
    }
  }
};

}  // namespace qslocc4

#endif  // QSLOCC4_SCALAR_HPP
