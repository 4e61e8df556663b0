#ifndef QSLOCC4_STATE_HPP
#define QSLOCC4_STATE_HPP

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

#include "qslocc4/scalar.hpp"

namespace qslocc4 {

// Four-qubit pure state: 16 amplitudes a_{ijkl}, i..l in {0,1}, qubit 1
// first. Storage index m = 8i + 4j + 2k + l (big-endian bit string "ijkl").
template <class F>
struct State {
  std::array<F, 16> a{};

  F& amp(int i, int j, int k, int l) { return a[8 * i + 4 * j + 2 * k + l]; }
  const F& amp(int i, int j, int k, int l) const {
    return a[8 * i + 4 * j + 2 * k + l];
  }

  bool all_zero() const {
    for (const F& v : a)
      if (!FieldTraits<F>::equals(v, FieldTraits<F>::zero())) return false;
    return true;
  }

  // Largest amplitude magnitude; the floating backend's zero threshold
  // scales with powers of this.
  double scale() const {
    double m = 0.0;
    for (const F& v : a) m = std::max(m, FieldTraits<F>::abs(v));
    return m;
  }

  friend State operator*(const F& c, const State& s) {
    State r;
    for (int m = 0; m < 16; ++m) r.a[m] = c * s.a[m];
    return r;
  }
  friend State operator+(const State& s, const State& t) {
    State r;
    for (int m = 0; m < 16; ++m) r.a[m] = s.a[m] + t.a[m];
    return r;
  }
  bool operator==(const State& o) const {
    for (int m = 0; m < 16; ++m)
      if (!FieldTraits<F>::equals(a[m], o.a[m])) return false;
    return true;
  }
};

template <class F>
struct Mat2 {
  // Row-major 2x2: e[r][c].
  std::array<std::array<F, 2>, 2> e;

  F det() const { return e[0][0] * e[1][1] - e[0][1] * e[1][0]; }

  static Mat2 identity() {
    Mat2 m;
    m.e = {{{FieldTraits<F>::one(), FieldTraits<F>::zero()},
            {FieldTraits<F>::zero(), FieldTraits<F>::one()}}};
    return m;
  }
  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        r.e[i][j] = a.e[i][0] * b.e[0][j] + a.e[i][1] * b.e[1][j];
    return r;
  }
};

// One 2x2 factor per qubit; the SLOCC action requires each det == 1.
template <class F>
struct LocalOperator {
  std::array<Mat2<F>, 4> g;
};

namespace detail {
template <class F>
bool det_is_one(const Mat2<F>& m) {
  if constexpr (FieldTraits<F>::is_exact) {
    return FieldTraits<F>::equals(m.det(), FieldTraits<F>::one());
  } else {
    return FieldTraits<F>::abs(m.det() - FieldTraits<F>::one()) <= 1e-9;
  }
}
}  // namespace detail

// (g.s)_{i1 i2 i3 i4} = sum_j (g1)_{i1 j1} ... (g4)_{i4 j4} s_{j1 j2 j3 j4}.
template <class F>
State<F> apply_local(const State<F>& s, const LocalOperator<F>& op) {
  for (const auto& m : op.g)
    if (!detail::det_is_one(m))
      throw std::invalid_argument("apply_local: factor determinant is not 1");
  State<F> cur = s;
  for (int q = 0; q < 4; ++q) {
    const int stride = 8 >> q;  // bit weight of qubit q+1 in the index
    State<F> next;
    for (int m = 0; m < 16; ++m) {
      const int bit = (m / stride) % 2;
      const int base = m - bit * stride;
      next.a[m] = op.g[q].e[bit][0] * cur.a[base] +
                  op.g[q].e[bit][1] * cur.a[base + stride];
    }
    cur = next;
  }
  return cur;
}

// Left action of S4: (sigma.s) at bit tuple (b0,b1,b2,b3) reads s at
// (b_{sigma[0]}, ..., b_{sigma[3]}).
template <class F>
State<F> permute_qubits(const State<F>& s, const std::array<int, 4>& sigma) {
  State<F> r;
  for (int m = 0; m < 16; ++m) {
    std::array<int, 4> b = {(m >> 3) & 1, (m >> 2) & 1, (m >> 1) & 1, m & 1};
    int src = 0;
    for (int q = 0; q < 4; ++q) src = 2 * src + b[sigma[q]];
    r.a[m] = s.a[src];
  }
  return r;
}

inline const std::array<std::array<int, 4>, 24>& all_qubit_permutations() {
  static const std::array<std::array<int, 4>, 24> perms = [] {
    std::array<std::array<int, 4>, 24> p{};
    std::array<int, 4> v = {0, 1, 2, 3};
    for (int n = 0; n < 24; ++n) {
      p[n] = v;
      std::next_permutation(v.begin(), v.end());
    }
    return p;
  }();
  return perms;
}

// Random SL2 quadruple with exactly unit determinants: products of integer
// shear matrices with Gaussian-integer entries bounded by `bound`.
template <class F>
LocalOperator<F> random_sl2_quadruple(unsigned long long seed, int bound) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-bound, bound);
  std::uniform_int_distribution<int> coin(0, 3);
  auto shear_value = [&] {
    F v = FieldTraits<F>::from_int(entry(rng));
    if (coin(rng) == 0)
      v = v + FieldTraits<F>::imaginary() * FieldTraits<F>::from_int(entry(rng));
    return v;
  };
  LocalOperator<F> op;
  for (int q = 0; q < 4; ++q) {
    Mat2<F> m = Mat2<F>::identity();
    for (int step = 0; step < 3; ++step) {
      Mat2<F> s = Mat2<F>::identity();
      if (step % 2 == 0)
        s.e[0][1] = shear_value();
      else
        s.e[1][0] = shear_value();
      m = m * s;
    }
    if (coin(rng) == 0) {
      // Unit-determinant phase factor diag(i, -i).
      Mat2<F> ph = Mat2<F>::identity();
      ph.e[0][0] = FieldTraits<F>::imaginary();
      ph.e[1][1] = FieldTraits<F>::zero() - FieldTraits<F>::imaginary();
      m = m * ph;
    }
    op.g[q] = m;
  }
  return op;
}

// Random state with rational amplitudes (numerators/denominators bounded),
// occasionally complex; never the zero state.
template <class F>
State<F> random_state(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  std::uniform_int_distribution<int> coin(0, 4);
  while (true) {
    State<F> s;
    for (int m = 0; m < 16; ++m) {
      F v = FieldTraits<F>::from_rational(Rational(num(rng), den(rng)));
      if (coin(rng) == 0)
        v = v + FieldTraits<F>::imaginary() *
                    FieldTraits<F>::from_rational(Rational(num(rng), den(rng)));
      s.a[m] = v;
    }
    if (!s.all_zero()) return s;
  }
}

}  // namespace qslocc4

#endif  // QSLOCC4_STATE_HPP
