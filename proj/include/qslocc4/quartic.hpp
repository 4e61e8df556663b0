#ifndef QSLOCC4_QUARTIC_HPP
#define QSLOCC4_QUARTIC_HPP

#include <array>
#include <complex>
#include <stdexcept>

#include "qslocc4/invariants.hpp"
#include "qslocc4/scalar.hpp"

namespace qslocc4 {

// f = c4 x^4 + c3 x^3 y + c2 x^2 y^2 + c1 x y^3 + c0 y^4.
// When built from invariants the coefficients have amplitude degrees
// 0, 2, 4, 6, 8 in that order; the zero tests below rely on this grading.
template <class F>
struct BinaryQuartic {
  F c4, c3, c2, c1, c0;

  bool operator==(const BinaryQuartic&) const = default;

  F eval(const F& x, const F& y) const {
    return (((c4 * x + c3 * y) * x + c2 * y * y) * x + c1 * y * y * y) * x +
           c0 * y * y * y * y;
  }
};

template <class F>
struct BinarySextic {
  // t[j] multiplies x^j y^(6-j).
  std::array<F, 7> t;
  bool operator==(const BinarySextic&) const = default;
};

// The three quartics attached to a state, one per pairing label.
template <class F>
std::array<BinaryQuartic<F>, 3> build_quartics(const InvariantVector<F>& iv) {
  const F one = FieldTraits<F>::one();
  const F two = FieldTraits<F>::from_int(2);
  const F four = FieldTraits<F>::from_int(4);
  const F& B = iv.B;
  const F& L = iv.L;
  const F& M = iv.M;
  const F& N = iv.N;
  const F& D = iv.Dxy;
  BinaryQuartic<F> q1{one, FieldTraits<F>::zero() - two * B,
                      B * B + two * L + four * M,
                      four * D - four * B * M - two * B * L, L * L};
  BinaryQuartic<F> q2{one, FieldTraits<F>::zero() - two * B,
                      B * B - four * L - two * M, four * D - two * B * M,
                      M * M};
  BinaryQuartic<F> q3{one, FieldTraits<F>::zero() - two * B,
                      B * B + two * L - two * M,
                      four * D - two * B * L - two * B * M, N * N};
  return {q1, q2, q3};
}

template <class F>
F i2_of(const BinaryQuartic<F>& q) {
  return detail::i2_of_quartic(q.c4, q.c3, q.c2, q.c1, q.c0);
}

template <class F>
F i3_of(const BinaryQuartic<F>& q) {
  return detail::i3_of_quartic(q.c4, q.c3, q.c2, q.c1, q.c0);
}

template <class F>
F delta_of(const BinaryQuartic<F>& q) {
  F i2 = i2_of(q), i3 = i3_of(q);
  return i2 * i2 * i2 - FieldTraits<F>::from_int(27) * i3 * i3;
}

// Hess(f) = f_xx f_yy - f_xy^2, expanded in the coefficient basis.
template <class F>
BinaryQuartic<F> hessian(const BinaryQuartic<F>& q) {
  auto k = [](int v) { return FieldTraits<F>::from_int(v); };
  BinaryQuartic<F> h;
  h.c4 = k(24) * q.c4 * q.c2 - k(9) * q.c3 * q.c3;
  h.c3 = k(72) * q.c4 * q.c1 - k(12) * q.c3 * q.c2;
  h.c2 = k(144) * q.c4 * q.c0 + k(18) * q.c3 * q.c1 - k(12) * q.c2 * q.c2;
  h.c1 = k(72) * q.c3 * q.c0 - k(12) * q.c2 * q.c1;
  h.c0 = k(24) * q.c2 * q.c0 - k(9) * q.c1 * q.c1;
  return h;
}

// T(f) = f_x Hess_y - f_y Hess_x, a sextic covariant.
template <class F>
BinarySextic<F> t_covariant(const BinaryQuartic<F>& q) {
  auto k = [](int v) { return FieldTraits<F>::from_int(v); };
  BinaryQuartic<F> h = hessian(q);
  // Cubic coefficient vectors indexed by the power of x.
  std::array<F, 4> fx = {q.c1, k(2) * q.c2, k(3) * q.c3, k(4) * q.c4};
  std::array<F, 4> fy = {k(4) * q.c0, k(3) * q.c1, k(2) * q.c2, q.c3};
  std::array<F, 4> hx = {h.c1, k(2) * h.c2, k(3) * h.c3, k(4) * h.c4};
  std::array<F, 4> hy = {k(4) * h.c0, k(3) * h.c1, k(2) * h.c2, h.c3};
  BinarySextic<F> t;
  t.t.fill(FieldTraits<F>::zero());
  for (int p = 0; p < 4; ++p)
    for (int r = 0; r < 4; ++r) {
      size_t j = static_cast<size_t>(p + r);
      t.t[j] = t.t[j] + fx[static_cast<size_t>(p)] * hy[static_cast<size_t>(r)] -
               fy[static_cast<size_t>(p)] * hx[static_cast<size_t>(r)];
    }
  return t;
}

enum class RootProfile { r1111, r211, r22, r31, r4 };

inline const char* root_profile_name(RootProfile p) {
  switch (p) {
    case RootProfile::r1111: return "[1,1,1,1]";
    case RootProfile::r211: return "[2,1,1]";
    case RootProfile::r22: return "[2,2]";
    case RootProfile::r31: return "[3,1]";
    case RootProfile::r4: return "[4]";
  }
  return "?";
}

// Multiplicity partition of the projective roots.  A multiplicity >= 3
// forces I2 = I3 = 0, and a quadruple root additionally kills the Hessian;
// away from that locus T separates one double root from two.
template <class F>
RootProfile root_profile(const BinaryQuartic<F>& q, const ZeroCtx<F>& ctx) {
  F i2 = i2_of(q), i3 = i3_of(q);
  F delta = i2 * i2 * i2 - FieldTraits<F>::from_int(27) * i3 * i3;
  if (!ctx.is_zero(delta, 24)) return RootProfile::r1111;
  if (ctx.is_zero(i2, 8) && ctx.is_zero(i3, 12)) {
    BinaryQuartic<F> h = hessian(q);
    bool hess_zero = ctx.is_zero(h.c4, 4) && ctx.is_zero(h.c3, 6) &&
                     ctx.is_zero(h.c2, 8) && ctx.is_zero(h.c1, 10) &&
                     ctx.is_zero(h.c0, 12);
    return hess_zero ? RootProfile::r4 : RootProfile::r31;
  }
  BinarySextic<F> t = t_covariant(q);
  for (int j = 0; j <= 6; ++j)
    if (!ctx.is_zero(t.t[static_cast<size_t>(j)], 18 - 2 * j))
      return RootProfile::r211;
  return RootProfile::r22;
}

// Multiplicity of zero as a root of quartic `which` (0, 1 or 2), read off
// the trailing coefficients through the generator invariants.
template <class F>
int zero_root_multiplicity(int which, const InvariantVector<F>& iv,
                           const ZeroCtx<F>& ctx) {
  F lead, next, third;
  switch (which) {
    case 0: lead = iv.L; next = iv.P; third = iv.S1; break;
    case 1: lead = iv.M; next = iv.Dxy; third = iv.S2; break;
    case 2: lead = iv.N; next = iv.Dxy; third = iv.S3; break;
    default: throw std::invalid_argument("zero_root_multiplicity: bad index");
  }
  int next_deg = which == 0 ? 8 : 6;
  if (!ctx.is_zero(lead, 4)) return 0;
  if (!ctx.is_zero(next, next_deg)) return 1;
  if (!ctx.is_zero(third, 4)) return 2;
  if (!ctx.is_zero(iv.B, 2)) return 3;
  return 4;
}

// Durand-Kerner iteration; requires a numerically nonzero leading
// coefficient (the quartics built from invariants are monic).
template <class F>
std::array<std::complex<double>, 4> numeric_roots(const BinaryQuartic<F>& q) {
  using C = std::complex<double>;
  C c4 = FieldTraits<F>::to_complex(q.c4);
  if (std::abs(c4) == 0.0)
    throw std::invalid_argument("numeric_roots: leading coefficient is zero");
  std::array<C, 4> c = {FieldTraits<F>::to_complex(q.c3) / c4,
                        FieldTraits<F>::to_complex(q.c2) / c4,
                        FieldTraits<F>::to_complex(q.c1) / c4,
                        FieldTraits<F>::to_complex(q.c0) / c4};
  auto eval = [&](C x) { return (((x + c[0]) * x + c[1]) * x + c[2]) * x + c[3]; };
  double bound = 1.0;
  for (const C& ci : c) bound = std::max(bound, std::abs(ci));
  bound = 1.0 + bound;
  std::array<C, 4> r;
  C seed(0.4, 0.9);
  C acc = seed;
  for (int k = 0; k < 4; ++k) {
    r[static_cast<size_t>(k)] = acc * bound;
    acc *= seed;
  }
  for (int iter = 0; iter < 500; ++iter) {
    double worst = 0.0;
    for (int k = 0; k < 4; ++k) {
      C denom(1.0, 0.0);
      for (int j = 0; j < 4; ++j)
        if (j != k)
          denom *= r[static_cast<size_t>(k)] - r[static_cast<size_t>(j)];
      C step = eval(r[static_cast<size_t>(k)]) / denom;
      r[static_cast<size_t>(k)] -= step;
      worst = std::max(worst,
                       std::abs(step) / (1.0 + std::abs(r[static_cast<size_t>(k)])));
    }
    if (worst < 1e-15) break;
  }
  return r;
}

}  // namespace qslocc4

#endif  // QSLOCC4_QUARTIC_HPP
