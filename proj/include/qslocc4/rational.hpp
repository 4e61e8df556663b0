#ifndef QSLOCC4_RATIONAL_HPP
#define QSLOCC4_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qslocc4/bigint.hpp"

namespace qslocc4 {

// Exact rational number. Invariants: den > 0, gcd(|num|, den) = 1, zero is
// stored as 0/1.
class Rational {
public:
  Rational() : num_(0ll), den_(1ll) {}
  Rational(long long v) : num_(v), den_(1ll) {}
  Rational(int v) : num_(static_cast<long long>(v)), den_(1ll) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1ll) {}
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    normalize();
  }
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_.is_one(); }
  int sign() const { return num_.sign(); }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational abs() const {
    Rational r;
    r.num_ = num_.abs();
    r.den_ = den_;
    return r;
  }
  Rational reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    return Rational(den_, num_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  std::strong_ordering operator<=>(const Rational& o) const {
    return (num_ * o.den_) <=> (o.num_ * den_);
  }

  Rational pow(long long e) const {
    if (e >= 0) {
      Rational r;
      r.num_ = num_.pow(static_cast<unsigned long long>(e));
      r.den_ = den_.pow(static_cast<unsigned long long>(e));
      return r;
    }
    return reciprocal().pow(-e);
  }

  // Exact square root when one exists in Q.
  std::optional<Rational> sqrt_exact() const {
    if (sign() < 0) return std::nullopt;
    BigInt rn, rd;
    if (!BigInt::is_perfect_square(num_, &rn)) return std::nullopt;
    if (!BigInt::is_perfect_square(den_, &rd)) return std::nullopt;
    return Rational(rn, rd);
  }

  double to_double() const {
    size_t nb = num_.bit_length(), db = den_.bit_length();
    // Keep both operands comfortably inside double range before dividing.
    if (nb > 900 || db > 900) {
      size_t sh = (nb > db ? nb : db) - 900;
      return (num_ >> sh).to_double() / (den_ >> sh).to_double();
    }
    return num_.to_double() / den_.to_double();
  }

  // Renders "p" for integers, "p/q" otherwise.
  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
  }

  // Accepts "p", "p/q", and decimal forms like "-12.5", "2.5e3", "1e-2".
  static Rational from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    size_t slash = s.find('/');
    if (slash != std::string_view::npos) {
      BigInt n = BigInt::from_string(s.substr(0, slash));
      BigInt d = BigInt::from_string(s.substr(slash + 1));
      return Rational(std::move(n), std::move(d));
    }
    size_t epos = s.find_first_of("eE");
    long long exp10 = 0;
    std::string_view mant = s;
    if (epos != std::string_view::npos) {
      exp10 = BigInt::from_string(s.substr(epos + 1)).to_longlong();
      mant = s.substr(0, epos);
    }
    size_t dot = mant.find('.');
    std::string digits;
    if (dot != std::string_view::npos) {
      digits.append(mant.substr(0, dot));
      digits.append(mant.substr(dot + 1));
      exp10 -= static_cast<long long>(mant.size() - dot - 1);
    } else {
      digits.assign(mant);
    }
    if (digits.empty() || digits == "+" || digits == "-")
      throw std::invalid_argument("Rational: no digits");
    Rational r(BigInt::from_string(digits));
    if (exp10 > 0)
      r *= Rational(BigInt(10ll).pow(static_cast<unsigned long long>(exp10)));
    else if (exp10 < 0)
      r /= Rational(BigInt(10ll).pow(static_cast<unsigned long long>(-exp10)));
    return r;
  }

private:
  BigInt num_, den_;

  void normalize() {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (den_.sign() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_.is_zero()) {
      den_ = BigInt(1ll);
      return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
      num_ /= g;
      den_ /= g;
    }
  }
};

}  // namespace qslocc4

#endif  // QSLOCC4_RATIONAL_HPP
