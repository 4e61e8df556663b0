#ifndef QSLOCC4_BIGINT_HPP
#define QSLOCC4_BIGINT_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qslocc4 {

// Arbitrary-precision signed integer; sign-magnitude with 32-bit limbs in
// little-endian order. Invariants: no trailing zero limb; sign_ == 0 iff
// mag_ is empty. Division truncates toward zero; the remainder carries the
// sign of the dividend.
class BigInt {
public:
  BigInt() : sign_(0) {}

  BigInt(long long v) : sign_(0) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // Two-step negation avoids overflow at LLONG_MIN.
    unsigned long long u =
        v < 0 ? ~static_cast<unsigned long long>(v) + 1ull
              : static_cast<unsigned long long>(v);
    while (u != 0) {
      mag_.push_back(static_cast<uint32_t>(u & 0xffffffffull));
      u >>= 32;
    }
  }
  BigInt(int v) : BigInt(static_cast<long long>(v)) {}

  static BigInt from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("BigInt: empty string");
    int sign = 1;
    size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
      sign = s[0] == '-' ? -1 : 1;
      i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
    BigInt r;
    const BigInt chunk_base(1000000000ll);
    size_t n = s.size();
    // Process leading partial chunk, then full 9-digit chunks.
    size_t first = (n - i) % 9;
    if (first == 0) first = 9;
    for (size_t pos = i; pos < n;) {
      size_t len = (pos == i) ? first : 9;
      long long v = 0;
      for (size_t k = 0; k < len; ++k, ++pos) {
        char c = s[pos];
        if (c < '0' || c > '9')
          throw std::invalid_argument("BigInt: bad digit");
        v = v * 10 + (c - '0');
      }
      if (pos == i + len && len == first)
        r = BigInt(v);
      else
        r = r * chunk_base + BigInt(v);
    }
    if (sign < 0) r.sign_ = -r.sign_;
    return r;
  }

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }
  bool is_one() const {
    return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1;
  }

  BigInt operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
  }
  BigInt abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
      r.mag_ = add_mag(a.mag_, b.mag_);
      r.sign_ = a.sign_;
    } else {
      int c = cmp_mag(a.mag_, b.mag_);
      if (c == 0) return BigInt();
      if (c > 0) {
        r.mag_ = sub_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_;
      } else {
        r.mag_ = sub_mag(b.mag_, a.mag_);
        r.sign_ = b.sign_;
      }
    }
    return r;
  }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.mag_ = mul_mag(a.mag_, b.mag_);
    r.sign_ = a.sign_ * b.sign_;
    r.trim();
    return r;
  }

  // Truncated division: q = trunc(a/b), r = a - q*b, sign(r) = sign(a).
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    if (a.sign_ == 0) {
      q = BigInt();
      r = BigInt();
      return;
    }
    int c = cmp_mag(a.mag_, b.mag_);
    if (c < 0) {
      q = BigInt();
      r = a;
      return;
    }
    std::vector<uint32_t> qm, rm;
    divmod_mag(a.mag_, b.mag_, qm, rm);
    q.mag_ = std::move(qm);
    q.sign_ = a.sign_ * b.sign_;
    q.trim();
    r.mag_ = std::move(rm);
    r.sign_ = a.sign_;
    r.trim();
  }

  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return q;
  }
  friend BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return r;
  }

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }
  BigInt& operator/=(const BigInt& o) { return *this = *this / o; }
  BigInt& operator%=(const BigInt& o) { return *this = *this % o; }

  bool operator==(const BigInt& o) const {
    return sign_ == o.sign_ && mag_ == o.mag_;
  }
  std::strong_ordering operator<=>(const BigInt& o) const {
    if (sign_ != o.sign_)
      return sign_ < o.sign_ ? std::strong_ordering::less
                             : std::strong_ordering::greater;
    int c = cmp_mag(mag_, o.mag_) * (sign_ < 0 ? -1 : 1);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  static BigInt gcd(BigInt a, BigInt b) {
    a.sign_ = a.sign_ == 0 ? 0 : 1;
    b.sign_ = b.sign_ == 0 ? 0 : 1;
    while (!b.is_zero()) {
      BigInt q, r;
      divmod(a, b, q, r);
      a = std::move(b);
      b = std::move(r);
    }
    return a;
  }

  BigInt pow(unsigned long long e) const {
    BigInt base = *this, acc(1ll);
    while (e != 0) {
      if (e & 1ull) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  // Floor square root of a nonnegative value (Newton iteration).
  static BigInt isqrt(const BigInt& n) {
    if (n.sign_ < 0) throw std::domain_error("BigInt: isqrt of negative");
    if (n.sign_ == 0) return BigInt();
    size_t bits = n.bit_length();
    BigInt x = BigInt(1ll) << (bits / 2 + 1);
    while (true) {
      BigInt y = (x + n / x) >> 1;
      if (y >= x) break;
      x = std::move(y);
    }
    return x;
  }

  static bool is_perfect_square(const BigInt& n, BigInt* root = nullptr) {
    if (n.sign_ < 0) return false;
    BigInt r = isqrt(n);
    bool ok = r * r == n;
    if (ok && root) *root = r;
    return ok;
  }

  size_t bit_length() const {
    if (sign_ == 0) return 0;
    return (mag_.size() - 1) * 32 +
           (32 - static_cast<size_t>(std::countl_zero(mag_.back())));
  }

  BigInt operator<<(size_t bits) const {
    if (sign_ == 0 || bits == 0) return *this;
    BigInt r;
    r.sign_ = sign_;
    size_t limbs = bits / 32, sh = bits % 32;
    r.mag_.assign(limbs, 0);
    uint32_t carry = 0;
    for (uint32_t w : mag_) {
      if (sh == 0) {
        r.mag_.push_back(w);
      } else {
        r.mag_.push_back((w << sh) | carry);
        carry = static_cast<uint32_t>((static_cast<uint64_t>(w) >> (32 - sh)));
      }
    }
    if (sh != 0 && carry != 0) r.mag_.push_back(carry);
    r.trim();
    return r;
  }

  BigInt operator>>(size_t bits) const {
    if (sign_ == 0) return *this;
    size_t limbs = bits / 32, sh = bits % 32;
    if (limbs >= mag_.size()) return BigInt();
    BigInt r;
    r.sign_ = sign_;
    r.mag_.assign(mag_.begin() + static_cast<long>(limbs), mag_.end());
    if (sh != 0) {
      uint32_t carry = 0;
      for (size_t i = r.mag_.size(); i-- > 0;) {
        uint32_t w = r.mag_[i];
        r.mag_[i] = (w >> sh) | carry;
        carry = w << (32 - sh);
      }
    }
    r.trim();
    return r;
  }

  double to_double() const {
    double x = 0;
    for (size_t i = mag_.size(); i-- > 0;) x = x * 4294967296.0 + mag_[i];
    return sign_ < 0 ? -x : x;
  }

  // Valid only when the value fits; callers guard with bit_length().
  long long to_longlong() const {
    unsigned long long u = 0;
    if (bit_length() > 63)
      throw std::overflow_error("BigInt: to_longlong out of range");
    for (size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
    long long v = static_cast<long long>(u);
    return sign_ < 0 ? -v : v;
  }

  std::string to_string() const {
    if (sign_ == 0) return "0";
    std::vector<uint32_t> tmp = mag_;
    std::string digits;
    while (!tmp.empty()) {
      // Divide magnitude by 1e9 in place, collecting 9 decimal digits.
      uint64_t rem = 0;
      for (size_t i = tmp.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | tmp[i];
        tmp[i] = static_cast<uint32_t>(cur / 1000000000ull);
        rem = cur % 1000000000ull;
      }
      while (!tmp.empty() && tmp.back() == 0) tmp.pop_back();
      for (int k = 0; k < 9; ++k) {
        digits.push_back(static_cast<char>('0' + rem % 10));
        rem /= 10;
      }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
  }

private:
  int sign_;
  std::vector<uint32_t> mag_;

  void trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
  }

  static int cmp_mag(const std::vector<uint32_t>& a,
                     const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> r;
    r.reserve(big.size() + 1);
    uint64_t carry = 0;
    for (size_t i = 0; i < big.size(); ++i) {
      uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0u);
      r.push_back(static_cast<uint32_t>(s));
      carry = s >> 32;
    }
    if (carry) r.push_back(static_cast<uint32_t>(carry));
    return r;
  }

  // Requires a >= b.
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r;
    r.reserve(a.size());
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
      int64_t d = static_cast<int64_t>(a[i]) -
                  (i < b.size() ? static_cast<int64_t>(b[i]) : 0) - borrow;
      if (d < 0) {
        d += 1ll << 32;
        borrow = 1;
      } else {
        borrow = 0;
      }
      r.push_back(static_cast<uint32_t>(d));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
      uint64_t carry = 0;
      uint64_t ai = a[i];
      for (size_t j = 0; j < b.size(); ++j) {
        uint64_t cur = r[i + j] + ai * b[j] + carry;
        r[i + j] = static_cast<uint32_t>(cur);
        carry = cur >> 32;
      }
      size_t k = i + b.size();
      while (carry) {
        uint64_t cur = r[k] + carry;
        r[k] = static_cast<uint32_t>(cur);
        carry = cur >> 32;
        ++k;
      }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  // Knuth algorithm D on normalized operands; requires |a| >= |b|, b != 0.
  static void divmod_mag(const std::vector<uint32_t>& a,
                         const std::vector<uint32_t>& b,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    if (b.size() == 1) {
      uint64_t d = b[0], rem = 0;
      q.assign(a.size(), 0);
      for (size_t i = a.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | a[i];
        q[i] = static_cast<uint32_t>(cur / d);
        rem = cur % d;
      }
      while (!q.empty() && q.back() == 0) q.pop_back();
      r.clear();
      if (rem) r.push_back(static_cast<uint32_t>(rem));
      return;
    }
    const size_t n = b.size(), m = a.size() - n;
    const unsigned sh = static_cast<unsigned>(std::countl_zero(b.back()));
    // Normalized copies: v.back() has its top bit set.
    std::vector<uint32_t> u(a.size() + 1, 0), v(n, 0);
    for (size_t i = 0; i < n; ++i) {
      v[i] = b[i] << sh;
      if (sh && i > 0)
        v[i] |= static_cast<uint32_t>(static_cast<uint64_t>(b[i - 1]) >>
                                      (32 - sh));
    }
    for (size_t i = 0; i < a.size(); ++i) {
      u[i] = a[i] << sh;
      if (sh && i > 0)
        u[i] |= static_cast<uint32_t>(static_cast<uint64_t>(a[i - 1]) >>
                                      (32 - sh));
    }
    if (sh)
      u[a.size()] =
          static_cast<uint32_t>(static_cast<uint64_t>(a.back()) >> (32 - sh));

    q.assign(m + 1, 0);
    const uint64_t base = 1ull << 32;
    for (size_t j = m + 1; j-- > 0;) {
      uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
      uint64_t qhat = num / v[n - 1];
      uint64_t rhat = num % v[n - 1];
      while (qhat >= base ||
             qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
        --qhat;
        rhat += v[n - 1];
        if (rhat >= base) break;
      }
      // Multiply-subtract qhat*v from u[j..j+n].
      int64_t borrow = 0;
      uint64_t carry = 0;
      for (size_t i = 0; i < n; ++i) {
        uint64_t p = qhat * v[i] + carry;
        carry = p >> 32;
        int64_t t = static_cast<int64_t>(u[i + j]) -
                    static_cast<int64_t>(p & 0xffffffffull) - borrow;
        if (t < 0) {
          t += static_cast<int64_t>(base);
          borrow = 1;
        } else {
          borrow = 0;
        }
        u[i + j] = static_cast<uint32_t>(t);
      }
      int64_t t = static_cast<int64_t>(u[j + n]) -
                  static_cast<int64_t>(carry) - borrow;
      if (t < 0) {
        // qhat was one too large; add v back.
        t += static_cast<int64_t>(base);
        --qhat;
        uint64_t c2 = 0;
        for (size_t i = 0; i < n; ++i) {
          uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
          u[i + j] = static_cast<uint32_t>(s);
          c2 = s >> 32;
        }
        t += static_cast<int64_t>(c2);
        t &= static_cast<int64_t>(base) - 1;
      }
      u[j + n] = static_cast<uint32_t>(t);
      q[j] = static_cast<uint32_t>(qhat);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    r.assign(u.begin(), u.begin() + static_cast<long>(n));
    if (sh) {
      uint32_t carry = 0;
      for (size_t i = r.size(); i-- > 0;) {
        uint32_t w = r[i];
        r[i] = (w >> sh) | carry;
        carry = w << (32 - sh);
      }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
};

}  // namespace qslocc4

#endif  // QSLOCC4_BIGINT_HPP
