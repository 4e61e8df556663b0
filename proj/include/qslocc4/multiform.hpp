#ifndef QSLOCC4_MULTIFORM_HPP
#define QSLOCC4_MULTIFORM_HPP

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "qslocc4/state.hpp"

namespace qslocc4 {

// Multihomogeneous form in four binary variable pairs (u_k, v_k).  Terms are
// keyed by the v-powers i_k (8 bits per slot); the u-power in slot k is then
// md[k] - i_k.  Coefficients that compare equal to zero are pruned, so for
// exact fields an empty map means the zero form.
template <class F>
struct MultiForm {
  std::array<int, 4> md{0, 0, 0, 0};
  std::map<std::uint32_t, F> coef;

  static std::uint32_t key(int i0, int i1, int i2, int i3) {
    return static_cast<std::uint32_t>(i0) |
           (static_cast<std::uint32_t>(i1) << 8) |
           (static_cast<std::uint32_t>(i2) << 16) |
           (static_cast<std::uint32_t>(i3) << 24);
  }
  static int key_at(std::uint32_t k, int slot) {
    return static_cast<int>((k >> (8 * slot)) & 0xff);
  }

  void add_term(std::uint32_t k, const F& v) {
    auto it = coef.find(k);
    if (it == coef.end()) {
      if (!(v == FieldTraits<F>::zero())) coef.emplace(k, v);
    } else {
      it->second = it->second + v;
      if (it->second == FieldTraits<F>::zero()) coef.erase(it);
    }
  }

  bool operator==(const MultiForm&) const = default;

  // The state itself as a multilinear form: sum a_ijkl x_i y_j z_k w_l.
  static MultiForm ground(const State<F>& s) {
    MultiForm f;
    f.md = {1, 1, 1, 1};
    for (int m = 0; m < 16; ++m) {
      int i = (m >> 3) & 1, j = (m >> 2) & 1, k = (m >> 1) & 1, l = m & 1;
      f.add_term(key(i, j, k, l), s.a[static_cast<size_t>(m)]);
    }
    return f;
  }

  MultiForm operator+(const MultiForm& o) const {
    if (md != o.md) throw std::invalid_argument("MultiForm: degree mismatch");
    MultiForm r = *this;
    for (const auto& [k, v] : o.coef) r.add_term(k, v);
    return r;
  }

  MultiForm operator-(const MultiForm& o) const {
    if (md != o.md) throw std::invalid_argument("MultiForm: degree mismatch");
    MultiForm r = *this;
    for (const auto& [k, v] : o.coef) r.add_term(k, FieldTraits<F>::zero() - v);
    return r;
  }

  MultiForm scaled(const F& c) const {
    MultiForm r;
    r.md = md;
    if (c == FieldTraits<F>::zero()) return r;
    for (const auto& [k, v] : coef) {
      F cv = c * v;
      if (!(cv == FieldTraits<F>::zero())) r.coef.emplace(k, cv);
    }
    return r;
  }

  MultiForm operator*(const MultiForm& o) const {
    MultiForm r;
    for (int k = 0; k < 4; ++k)
      r.md[static_cast<size_t>(k)] =
          md[static_cast<size_t>(k)] + o.md[static_cast<size_t>(k)];
    for (const auto& [ka, va] : coef)
      for (const auto& [kb, vb] : o.coef) r.add_term(ka + kb, va * vb);
    return r;
  }

  // d/du_slot if which == 0, d/dv_slot if which == 1.
  MultiForm derivative(int slot, int which) const {
    MultiForm r;
    r.md = md;
    r.md[static_cast<size_t>(slot)] -= 1;
    if (r.md[static_cast<size_t>(slot)] < 0)
      throw std::invalid_argument("MultiForm: derivative below degree zero");
    for (const auto& [k, v] : coef) {
      int iv = key_at(k, slot);
      if (which == 0) {
        int iu = md[static_cast<size_t>(slot)] - iv;
        if (iu == 0) continue;
        r.add_term(k, FieldTraits<F>::from_int(iu) * v);
      } else {
        if (iv == 0) continue;
        std::uint32_t k2 = k - (1u << (8 * slot));
        r.add_term(k2, FieldTraits<F>::from_int(iv) * v);
      }
    }
    return r;
  }

  bool exactly_zero() const { return coef.empty(); }
};

namespace detail {

inline long long binom_ll(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - t + 1) / t;
  return r;
}

template <class F>
MultiForm<F> iterated_derivative(MultiForm<F> f, int slot, int du, int dv) {
  for (int t = 0; t < du; ++t) f = f.derivative(slot, 0);
  for (int t = 0; t < dv; ++t) f = f.derivative(slot, 1);
  return f;
}

}  // namespace detail

// Simultaneous transvectant of orders r = (r1, r2, r3, r4), without factorial
// normalization:
//   (f, g)^r = sum over 0 <= i_k <= r_k of
//     prod_k (-1)^{i_k} C(r_k, i_k)
//     * [d_u^{r_k - i_k} d_v^{i_k} f] * [d_u^{i_k} d_v^{r_k - i_k} g].
// The normalization is pinned by (f, f)^{(1,1,1,1)} = 2B on the ground form.
template <class F>
MultiForm<F> transvect(const MultiForm<F>& f, const MultiForm<F>& g,
                       const std::array<int, 4>& r) {
  for (int k = 0; k < 4; ++k)
    if (r[static_cast<size_t>(k)] > f.md[static_cast<size_t>(k)] ||
        r[static_cast<size_t>(k)] > g.md[static_cast<size_t>(k)] ||
        r[static_cast<size_t>(k)] < 0)
      throw std::invalid_argument("transvect: order exceeds degree");
  MultiForm<F> acc;
  for (int k = 0; k < 4; ++k)
    acc.md[static_cast<size_t>(k)] = f.md[static_cast<size_t>(k)] +
                                     g.md[static_cast<size_t>(k)] -
                                     2 * r[static_cast<size_t>(k)];
  std::array<int, 4> i{0, 0, 0, 0};
  while (true) {
    long long sign_binom = 1;
    int parity = 0;
    for (int k = 0; k < 4; ++k) {
      sign_binom *= detail::binom_ll(r[static_cast<size_t>(k)],
                                     i[static_cast<size_t>(k)]);
      parity += i[static_cast<size_t>(k)];
    }
    if (parity % 2 != 0) sign_binom = -sign_binom;
    MultiForm<F> df = f, dg = g;
    for (int k = 0; k < 4; ++k) {
      df = detail::iterated_derivative(df, k,
                                       r[static_cast<size_t>(k)] -
                                           i[static_cast<size_t>(k)],
                                       i[static_cast<size_t>(k)]);
      dg = detail::iterated_derivative(dg, k, i[static_cast<size_t>(k)],
                                       r[static_cast<size_t>(k)] -
                                           i[static_cast<size_t>(k)]);
    }
    MultiForm<F> term = df * dg;
    acc = acc + term.scaled(FieldTraits<F>::from_int(sign_binom));
    int k = 0;
    while (k < 4 && i[static_cast<size_t>(k)] == r[static_cast<size_t>(k)]) {
      i[static_cast<size_t>(k)] = 0;
      ++k;
    }
    if (k == 4) break;
    ++i[static_cast<size_t>(k)];
  }
  return acc;
}

}  // namespace qslocc4

#endif  // QSLOCC4_MULTIFORM_HPP
