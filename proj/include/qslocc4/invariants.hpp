#ifndef QSLOCC4_INVARIANTS_HPP
#define QSLOCC4_INVARIANTS_HPP

#include <array>
#include <bit>

#include "qslocc4/state.hpp"

namespace qslocc4 {

// Generating invariants of the local SL(2)^4 action together with the
// derived quantities used by the classifier.  Degrees in the amplitudes:
// B:2, L:4, M:4, N:4, Dxy:6, P:8, S1..S3:4, I2:8, I3:12, Delta:24.
template <class F>
struct InvariantVector {
  F B, L, M, N, Dxy;
  F P, S1, S2, S3;
  F I2, I3, Delta;
};

namespace detail {

template <class F>
F det2(const F& a, const F& b, const F& c, const F& d) {
  return a * d - b * c;
}

// Laplace expansion along the first row, 3x3.
template <class F>
F det3(const std::array<F, 9>& m) {
  return m[0] * det2(m[4], m[5], m[7], m[8]) -
         m[1] * det2(m[3], m[5], m[6], m[8]) +
         m[2] * det2(m[3], m[4], m[6], m[7]);
}

// Laplace expansion along the first row, 4x4.
template <class F>
F det4(const std::array<F, 16>& m) {
  F acc = FieldTraits<F>::zero();
  for (int j = 0; j < 4; ++j) {
    std::array<F, 9> minor;
    int t = 0;
    for (int r = 1; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        if (c != j) minor[static_cast<size_t>(t++)] = m[static_cast<size_t>(4 * r + c)];
    F term = m[static_cast<size_t>(j)] * det3(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

// Rows of the three 2x2-block flattenings, by storage index m = 8i+4j+2k+l.
// pairing_L groups qubits (12)(34), pairing_M groups (13)(24), pairing_N
// groups (14)(23); each determinant is an SL(2)^4 invariant of degree 4.
inline constexpr int pairing_L[16] = {0, 2,  1,  3,  8, 10, 9,  11,
                                      4, 6,  5,  7,  12, 14, 13, 15};
inline constexpr int pairing_M[16] = {0, 1,  4,  5,  8, 9,  12, 13,
                                      2, 3,  6,  7,  10, 11, 14, 15};
inline constexpr int pairing_N[16] = {0, 8,  1,  9,  4, 12, 5,  13,
                                      2, 10, 3,  11, 6, 14, 7,  15};

template <class F>
F det_by_indices(const State<F>& s, const int (&idx)[16]) {
  std::array<F, 16> m;
  for (int t = 0; t < 16; ++t) m[static_cast<size_t>(t)] = s.a[static_cast<size_t>(idx[t])];
  return det4(m);
}

}  // namespace detail

// Full epsilon contraction: B = 1/2 sum_m (-1)^popcount(m) a_m a_{15-m}.
template <class F>
F inv_B(const State<F>& s) {
  F acc = FieldTraits<F>::zero();
  for (unsigned m = 0; m < 16; ++m) {
    F term = s.a[m] * s.a[15 - m];
    acc = (std::popcount(m) % 2 == 0) ? acc + term : acc - term;
  }
  return acc / FieldTraits<F>::from_int(2);
}

template <class F>
F inv_L(const State<F>& s) {
  return detail::det_by_indices(s, detail::pairing_L);
}

template <class F>
F inv_M(const State<F>& s) {
  return detail::det_by_indices(s, detail::pairing_M);
}

template <class F>
F inv_N(const State<F>& s) {
  return detail::det_by_indices(s, detail::pairing_N);
}

// D_xy = -det of the 3x3 coefficient matrix of the biquadratic
// b_xy = det_{kl} A_{kl}(x,y), where A_{kl}(x,y) = sum_{ij} a_{ijkl} x_i y_j.
template <class F>
F inv_Dxy(const State<F>& s) {
  const F zero = FieldTraits<F>::zero();
  // q[3p+r] = coefficient of x0^(2-p) x1^p y0^(2-r) y1^r in b_xy.
  std::array<F, 9> q;
  q.fill(zero);
  auto A = [&](int i, int j, int k, int l) -> const F& {
    return s.a[static_cast<size_t>(8 * i + 4 * j + 2 * k + l)];
  };
  // b_xy = A00*A11 - A01*A10 with A_kl bilinear in (x0,x1),(y0,y1); expand
  // products of bilinear forms into the 3x3 coefficient array.
  for (int i1 = 0; i1 < 2; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < 2; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          F term = A(i1, j1, 0, 0) * A(i2, j2, 1, 1) -
                   A(i1, j1, 0, 1) * A(i2, j2, 1, 0);
          size_t slot = static_cast<size_t>(3 * (i1 + i2) + (j1 + j2));
          q[slot] = q[slot] + term;
        }
  // det is taken in the bases [x0^2, x0x1, x1^2] (x) [y0^2, y0y1, y1^2].
  return zero - detail::det3(q);
}

namespace detail {

template <class F>
F i2_of_quartic(const F& c4, const F& c3, const F& c2, const F& c1, const F& c0) {
  const F four = FieldTraits<F>::from_int(4);
  const F twelve = FieldTraits<F>::from_int(12);
  return c4 * c0 - c3 * c1 / four + c2 * c2 / twelve;
}

template <class F>
F i3_of_quartic(const F& c4, const F& c3, const F& c2, const F& c1, const F& c0) {
  const F six = FieldTraits<F>::from_int(6);
  const F sixteen = FieldTraits<F>::from_int(16);
  const F f216 = FieldTraits<F>::from_int(216);
  const F f48 = FieldTraits<F>::from_int(48);
  return c4 * c2 * c0 / six - c4 * c1 * c1 / sixteen - c3 * c3 * c0 / sixteen -
         c2 * c2 * c2 / f216 + c3 * c2 * c1 / f48;
}

}  // namespace detail

template <class F>
InvariantVector<F> invariants(const State<F>& s) {
  InvariantVector<F> iv;
  iv.B = inv_B(s);
  iv.L = inv_L(s);
  iv.M = inv_M(s);
  iv.N = inv_N(s);
  iv.Dxy = inv_Dxy(s);
  const F four = FieldTraits<F>::from_int(4);
  iv.P = iv.Dxy - iv.B * iv.M;
  iv.S1 = iv.B * iv.B + four * iv.M;
  iv.S2 = iv.B * iv.B - four * iv.L;
  iv.S3 = iv.B * iv.B - four * iv.M;
  // All three quartics share I2, I3; compute them from the first one.
  const F two = FieldTraits<F>::from_int(2);
  F c4 = FieldTraits<F>::one();
  F c3 = FieldTraits<F>::zero() - two * iv.B;
  F c2 = iv.B * iv.B + two * iv.L + four * iv.M;
  F c1 = four * iv.Dxy - four * iv.B * iv.M - two * iv.B * iv.L;
  F c0 = iv.L * iv.L;
  iv.I2 = detail::i2_of_quartic(c4, c3, c2, c1, c0);
  iv.I3 = detail::i3_of_quartic(c4, c3, c2, c1, c0);
  iv.Delta = iv.I2 * iv.I2 * iv.I2 -
             FieldTraits<F>::from_int(27) * iv.I3 * iv.I3;
  return iv;
}

}  // namespace qslocc4

#endif  // QSLOCC4_INVARIANTS_HPP
