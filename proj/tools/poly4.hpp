#ifndef QSLOCC4_TOOLS_POLY4_HPP
#define QSLOCC4_TOOLS_POLY4_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "qslocc4/scalar.hpp"

namespace qslocc4 {

// Polynomials in up to four parameters with coefficients in Q(i).  Used only
// by the catalog generator to check covariant vanishing identically in the
// family parameters.  Supports ring operations plus division by constants.
struct Poly4 {
  // exponent key: 8 bits per variable
  std::map<std::uint32_t, GaussianRational> t;

  Poly4() = default;
  explicit Poly4(GaussianRational c) {
    if (!c.is_zero()) t.emplace(0u, std::move(c));
  }

  static Poly4 variable(int k) {
    Poly4 p;
    p.t.emplace(1u << (8 * k), GaussianRational(1));
    return p;
  }

  bool is_zero() const { return t.empty(); }
  bool is_constant() const {
    return t.empty() || (t.size() == 1 && t.begin()->first == 0u);
  }

  bool operator==(const Poly4& o) const { return t == o.t; }

  Poly4 operator+(const Poly4& o) const {
    Poly4 r = *this;
    for (const auto& [k, v] : o.t) {
      auto it = r.t.find(k);
      if (it == r.t.end()) {
        r.t.emplace(k, v);
      } else {
        it->second += v;
        if (it->second.is_zero()) r.t.erase(it);
      }
    }
    return r;
  }

  Poly4 operator-() const {
    Poly4 r = *this;
    for (auto& [k, v] : r.t) v = -v;
    return r;
  }

  Poly4 operator-(const Poly4& o) const { return *this + (-o); }

  Poly4 operator*(const Poly4& o) const {
    Poly4 r;
    for (const auto& [ka, va] : t)
      for (const auto& [kb, vb] : o.t) {
        GaussianRational prod = va * vb;
        auto it = r.t.find(ka + kb);
        if (it == r.t.end()) {
          if (!prod.is_zero()) r.t.emplace(ka + kb, std::move(prod));
        } else {
          it->second += prod;
          if (it->second.is_zero()) r.t.erase(it);
        }
      }
    return r;
  }

  Poly4 operator/(const Poly4& o) const {
    if (!o.is_constant() || o.is_zero())
      throw std::invalid_argument("Poly4: division only by nonzero constants");
    GaussianRational c = o.t.begin()->second;
    Poly4 r = *this;
    for (auto& [k, v] : r.t) v /= c;
    return r;
  }

  Poly4& operator+=(const Poly4& o) { return *this = *this + o; }
  Poly4& operator-=(const Poly4& o) { return *this = *this - o; }
  Poly4& operator*=(const Poly4& o) { return *this = *this * o; }

  std::string to_string() const {
    if (t.empty()) return "0";
    std::string s;
    static const char* names[4] = {"a", "b", "c", "d"};
    for (const auto& [k, v] : t) {
      if (!s.empty()) s += " + ";
      s += "(" + v.to_string() + ")";
      for (int q = 0; q < 4; ++q) {
        int e = static_cast<int>((k >> (8 * q)) & 0xff);
        if (e == 1) s += std::string("*") + names[q];
        else if (e > 1) s += std::string("*") + names[q] + "^" + std::to_string(e);
      }
    }
    return s;
  }
};

template <>
struct FieldTraits<Poly4> {
  static constexpr bool is_exact = true;
  static Poly4 zero() { return Poly4(); }
  static Poly4 one() { return Poly4(GaussianRational(1)); }
  static Poly4 imaginary() { return Poly4(GaussianRational::i()); }
  static Poly4 from_int(long long v) { return Poly4(GaussianRational(v)); }
  static Poly4 from_rational(const Rational& r) {
    return Poly4(GaussianRational(r));
  }
  static bool equals(const Poly4& a, const Poly4& b) { return a == b; }
};

}  // namespace qslocc4

#endif  // QSLOCC4_TOOLS_POLY4_HPP
