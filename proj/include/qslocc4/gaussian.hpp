#ifndef QSLOCC4_GAUSSIAN_HPP
#define QSLOCC4_GAUSSIAN_HPP

#include <complex>
#include <optional>
#include <string>

#include "qslocc4/rational.hpp"

namespace qslocc4 {

// Element of Q(i): re + im*i with exact rational parts.
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}
  GaussianRational(long long v) : re_(v) {}
  GaussianRational(int v) : re_(v) {}
  GaussianRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() {
    return GaussianRational(Rational(0), Rational(1));
  }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return GaussianRational(re_, -im_); }
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

  friend GaussianRational operator+(const GaussianRational& a,
                                    const GaussianRational& b) {
    return GaussianRational(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend GaussianRational operator-(const GaussianRational& a,
                                    const GaussianRational& b) {
    return GaussianRational(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend GaussianRational operator*(const GaussianRational& a,
                                    const GaussianRational& b) {
    return GaussianRational(a.re_ * b.re_ - a.im_ * b.im_,
                            a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend GaussianRational operator/(const GaussianRational& a,
                                    const GaussianRational& b) {
    Rational n2 = b.norm2();
    if (n2.is_zero())
      throw std::domain_error("GaussianRational: division by zero");
    GaussianRational p = a * b.conj();
    return GaussianRational(p.re_ / n2, p.im_ / n2);
  }
  GaussianRational& operator+=(const GaussianRational& o) {
    return *this = *this + o;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    return *this = *this - o;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    return *this = *this * o;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    return *this = *this / o;
  }

  bool operator==(const GaussianRational& o) const {
    return re_ == o.re_ && im_ == o.im_;
  }

  // Lexicographic (re, im) order; a total order for canonicalization, not
  // compatible with arithmetic.
  std::strong_ordering operator<=>(const GaussianRational& o) const {
    auto c = re_ <=> o.re_;
    if (c != std::strong_ordering::equal) return c;
    return im_ <=> o.im_;
  }

  GaussianRational pow(long long e) const {
    if (e < 0) return (GaussianRational(1) / *this).pow(-e);
    GaussianRational base = *this, acc(1);
    unsigned long long u = static_cast<unsigned long long>(e);
    while (u != 0) {
      if (u & 1ull) acc *= base;
      base *= base;
      u >>= 1;
    }
    return acc;
  }

  // Exact square root in Q(i) when one exists. For z = x + yi, y != 0: needs
  // n = sqrt(x^2+y^2) in Q and u^2 = (x+n)/2 a rational square; then
  // z = (u + y/(2u) i)^2.
  std::optional<GaussianRational> sqrt_exact() const {
    if (im_.is_zero()) {
      if (re_.sign() >= 0) {
        auto r = re_.sqrt_exact();
        if (!r) return std::nullopt;
        return GaussianRational(*r);
      }
      auto r = (-re_).sqrt_exact();
      if (!r) return std::nullopt;
      return GaussianRational(Rational(0), *r);
    }
    auto n = norm2().sqrt_exact();
    if (!n) return std::nullopt;
    Rational half(1, 2);
    auto u = ((re_ + *n) * half).sqrt_exact();
    if (!u || u->is_zero()) return std::nullopt;
    Rational v = im_ * half / *u;
    GaussianRational cand(*u, v);
    if (cand * cand == *this) return cand;
    return std::nullopt;
  }

  std::complex<double> to_complex() const {
    return {re_.to_double(), im_.to_double()};
  }

  // Renders "a", "bi", or "a+bi" / "a-bi" with rational parts.
  std::string to_string() const {
    if (im_.is_zero()) return re_.to_string();
    std::string im_part =
        (im_ == Rational(1))
            ? "i"
            : (im_ == Rational(-1) ? "-i" : im_.to_string() + "i");
    if (re_.is_zero()) return im_part;
    if (im_.sign() > 0) return re_.to_string() + "+" + im_part;
    return re_.to_string() + im_part;
  }

private:
  Rational re_, im_;
};

}  // namespace qslocc4

#endif  // QSLOCC4_GAUSSIAN_HPP
