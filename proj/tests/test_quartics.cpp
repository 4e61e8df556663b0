#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <complex>
#include <random>
#include <vector>

#include "qslocc4/invariants.hpp"
#include "qslocc4/normal_forms.hpp"
#include "qslocc4/quartic.hpp"
#include "qslocc4/state.hpp"

using qslocc4::BinaryQuartic;
using qslocc4::GaussianRational;
using qslocc4::Rational;
using qslocc4::RootProfile;
using qslocc4::State;
using qslocc4::ZeroCtx;
using GR = GaussianRational;

namespace {

GR rnd_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-100, 100);
  std::uniform_int_distribution<int> den(1, 100);
  return GR(Rational(num(rng), den(rng)));
}

// Monic quartic with the given projective roots [root : 1].
BinaryQuartic<GR> from_roots(const std::array<GR, 4>& r) {
  GR e1 = r[0] + r[1] + r[2] + r[3];
  GR e2 = r[0] * r[1] + r[0] * r[2] + r[0] * r[3] + r[1] * r[2] + r[1] * r[3] +
          r[2] * r[3];
  GR e3 = r[0] * r[1] * r[2] + r[0] * r[1] * r[3] + r[0] * r[2] * r[3] +
          r[1] * r[2] * r[3];
  GR e4 = r[0] * r[1] * r[2] * r[3];
  return {GR(1), -e1, e2, -e3, e4};
}

ZeroCtx<GR> exact_ctx() { return {}; }

}  // namespace

TEST_CASE("first quartic factors through the squared parameters",
          "[quartics]") {
  std::mt19937_64 rng(30301);
  for (int iter = 0; iter < 100; ++iter) {
    GR a = rnd_rational(rng), b = rnd_rational(rng), c = rnd_rational(rng),
       d = rnd_rational(rng);
    auto iv = qslocc4::invariants(qslocc4::gen_G(a, b, c, d));
    auto q = qslocc4::build_quartics(iv);
    REQUIRE(q[0] == from_roots({a * a, b * b, c * c, d * d}));
  }
}

TEST_CASE("second and third quartics factor through squared half sums",
          "[quartics]") {
  std::mt19937_64 rng(30302);
  const GR h = GR(Rational(1, 2));
  for (int iter = 0; iter < 50; ++iter) {
    GR a = rnd_rational(rng), b = rnd_rational(rng), c = rnd_rational(rng),
       d = rnd_rational(rng);
    auto iv = qslocc4::invariants(qslocc4::gen_G(a, b, c, d));
    auto q = qslocc4::build_quartics(iv);
    std::array<GR, 4> alpha = {(a + b + c + d) * h, (c + d - a - b) * h,
                               (a - b + c - d) * h, (a - b + d - c) * h};
    std::array<GR, 4> beta = {(a + b + c - d) * h, (a - b - c - d) * h,
                              (a - b + c + d) * h, (a + b - c + d) * h};
    for (auto& v : alpha) v = v * v;
    for (auto& v : beta) v = v * v;
    REQUIRE(q[1] == from_roots(alpha));
    REQUIRE(q[2] == from_roots(beta));
  }
}

TEST_CASE("the three quartics share their degree 2 and 3 invariants",
          "[quartics]") {
  std::mt19937_64 rng(30303);
  for (int iter = 0; iter < 100; ++iter) {
    State<GR> s = qslocc4::random_state<GR>(rng, 9);
    auto iv = qslocc4::invariants(s);
    auto q = qslocc4::build_quartics(iv);
    for (int k = 0; k < 3; ++k) {
      REQUIRE(qslocc4::i2_of(q[static_cast<size_t>(k)]) == iv.I2);
      REQUIRE(qslocc4::i3_of(q[static_cast<size_t>(k)]) == iv.I3);
      REQUIRE(qslocc4::delta_of(q[static_cast<size_t>(k)]) == iv.Delta);
    }
  }
}

TEST_CASE("discriminant matches the pairwise numeric root spread",
          "[quartics]") {
  std::mt19937_64 rng(30304);
  int done = 0;
  while (done < 20) {
    State<GR> s = qslocc4::random_state<GR>(rng, 9);
    auto iv = qslocc4::invariants(s);
    if (iv.Delta == GR(0)) continue;
    auto q = qslocc4::build_quartics(iv);
    for (int k = 0; k < 3; ++k) {
      auto roots = qslocc4::numeric_roots(q[static_cast<size_t>(k)]);
      std::complex<double> prod(1.0, 0.0);
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
          std::complex<double> d = roots[static_cast<size_t>(i)] -
                                   roots[static_cast<size_t>(j)];
          prod *= d * d;
        }
      prod /= 256.0;
      std::complex<double> delta =
          qslocc4::FieldTraits<GR>::to_complex(iv.Delta);
      REQUIRE(std::abs(prod - delta) <= 1e-8 * std::abs(delta));
    }
    ++done;
  }
}

TEST_CASE("root profiles of quartics built from prescribed roots",
          "[quartics]") {
  std::mt19937_64 rng(30305);
  auto ctx = exact_ctx();
  auto distinct4 = [&]() {
    std::array<GR, 4> r;
    do {
      for (auto& v : r) v = rnd_rational(rng);
    } while (r[0] == r[1] || r[0] == r[2] || r[0] == r[3] || r[1] == r[2] ||
             r[1] == r[3] || r[2] == r[3]);
    return r;
  };
  for (int iter = 0; iter < 50; ++iter) {
    auto r = distinct4();
    REQUIRE(qslocc4::root_profile(from_roots(r), ctx) == RootProfile::r1111);
    REQUIRE(qslocc4::root_profile(from_roots({r[0], r[0], r[1], r[2]}), ctx) ==
            RootProfile::r211);
    REQUIRE(qslocc4::root_profile(from_roots({r[0], r[0], r[1], r[1]}), ctx) ==
            RootProfile::r22);
    REQUIRE(qslocc4::root_profile(from_roots({r[0], r[0], r[0], r[1]}), ctx) ==
            RootProfile::r31);
    REQUIRE(qslocc4::root_profile(from_roots({r[0], r[0], r[0], r[0]}), ctx) ==
            RootProfile::r4);
  }
}

TEST_CASE("profiles handle a repeated root at infinity", "[quartics]") {
  auto ctx = exact_ctx();
  // x^3 y: triple root at [0:1] plus the root at infinity.
  BinaryQuartic<GR> q{GR(0), GR(1), GR(0), GR(0), GR(0)};
  REQUIRE(qslocc4::root_profile(q, ctx) == RootProfile::r31);
  auto t = qslocc4::t_covariant(q);
  std::array<GR, 7> expect{};
  expect[6] = GR(36);
  REQUIRE(t.t == expect);
  // x^2 y^2: double roots at [0:1] and at infinity.
  BinaryQuartic<GR> q2{GR(0), GR(0), GR(1), GR(0), GR(0)};
  REQUIRE(qslocc4::root_profile(q2, ctx) == RootProfile::r22);
  // x y^3: double-free but with a root at infinity.
  BinaryQuartic<GR> q3{GR(0), GR(0), GR(0), GR(1), GR(0)};
  REQUIRE(qslocc4::root_profile(q3, ctx) == RootProfile::r31);
}

TEST_CASE("squares have vanishing T covariant", "[quartics]") {
  std::mt19937_64 rng(30306);
  for (int iter = 0; iter < 30; ++iter) {
    GR r0 = rnd_rational(rng), r1 = rnd_rational(rng);
    auto t = qslocc4::t_covariant(from_roots({r0, r0, r1, r1}));
    for (const GR& coef : t.t) REQUIRE(coef == GR(0));
    auto h = qslocc4::hessian(from_roots({r0, r0, r0, r0}));
    REQUIRE(h == (BinaryQuartic<GR>{GR(0), GR(0), GR(0), GR(0), GR(0)}));
  }
}

TEST_CASE("zero root multiplicities along parameter degenerations",
          "[quartics]") {
  auto ctx = exact_ctx();
  auto mult_q1 = [&](const State<GR>& s) {
    return qslocc4::zero_root_multiplicity(0, qslocc4::invariants(s), ctx);
  };
  CHECK(mult_q1(qslocc4::gen_G(GR(2), GR(3), GR(5), GR(7))) == 0);
  CHECK(mult_q1(qslocc4::gen_G(GR(2), GR(3), GR(5), GR(0))) == 1);
  CHECK(mult_q1(qslocc4::gen_G(GR(2), GR(3), GR(0), GR(0))) == 2);
  CHECK(mult_q1(qslocc4::gen_G(GR(2), GR(0), GR(0), GR(0))) == 3);
  CHECK(mult_q1(qslocc4::gen_family<GR>(qslocc4::FamilyId::L_07p1, {})) == 4);

  // The trailing coefficients read through the invariants must agree with
  // the actual multiplicity of the root zero in each quartic.
  std::mt19937_64 rng(30307);
  std::uniform_int_distribution<int> small(-4, 4);
  for (int iter = 0; iter < 200; ++iter) {
    GR a(small(rng)), b(small(rng)), c(small(rng)), d(small(rng));
    State<GR> s = qslocc4::gen_G(a, b, c, d);
    if (s.all_zero()) continue;
    auto iv = qslocc4::invariants(s);
    auto q = qslocc4::build_quartics(iv);
    for (int k = 0; k < 3; ++k) {
      int m = qslocc4::zero_root_multiplicity(k, iv, ctx);
      // Count the multiplicity of x = 0 from the trailing coefficients.
      const auto& qq = q[static_cast<size_t>(k)];
      std::array<GR, 5> asc = {qq.c0, qq.c1, qq.c2, qq.c3, qq.c4};
      int direct = 0;
      while (direct < 4 && asc[static_cast<size_t>(direct)] == GR(0)) ++direct;
      REQUIRE(m == direct);
    }
  }
}

TEST_CASE("the number of quartics with a zero root is 0, 1 or 3",
          "[quartics]") {
  std::mt19937_64 rng(30308);
  auto ctx = exact_ctx();
  int seen_mask = 0;
  for (int iter = 0; iter < 200; ++iter) {
    State<GR> s = iter % 2 == 0 ? qslocc4::random_state<GR>(rng, 4)
                                : [&] {
                                    std::uniform_int_distribution<int> v(-3, 3);
                                    return qslocc4::gen_G(GR(v(rng)), GR(v(rng)),
                                                          GR(v(rng)), GR(v(rng)));
                                  }();
    if (s.all_zero()) continue;
    auto iv = qslocc4::invariants(s);
    int count = 0;
    for (int k = 0; k < 3; ++k)
      if (qslocc4::zero_root_multiplicity(k, iv, ctx) > 0) ++count;
    REQUIRE((count == 0 || count == 1 || count == 3));
    seen_mask |= 1 << count;
  }
  CHECK(seen_mask == 0b1011);
}

TEST_CASE("numeric root clusters agree with the exact profile", "[quartics]") {
  std::mt19937_64 rng(30309);
  std::uniform_int_distribution<int> v(-5, 5);
  auto ctx = exact_ctx();
  int checked = 0;
  while (checked < 60) {
    std::array<GR, 4> r = {GR(v(rng)), GR(v(rng)), GR(v(rng)), GR(v(rng))};
    auto q = from_roots(r);
    auto roots = qslocc4::numeric_roots(q);
    // Expected partition from the constructed multiset.
    std::array<int, 4> mult{};
    std::vector<GR> uniq;
    for (const GR& x : r) {
      bool found = false;
      for (size_t u = 0; u < uniq.size(); ++u)
        if (uniq[u] == x) {
          ++mult[u];
          found = true;
        }
      if (!found) {
        uniq.push_back(x);
        ++mult[uniq.size() - 1];
      }
    }
    std::vector<int> part;
    for (size_t u = 0; u < uniq.size(); ++u) part.push_back(mult[u]);
    std::sort(part.rbegin(), part.rend());
    RootProfile expect;
    if (part == std::vector<int>{1, 1, 1, 1}) expect = RootProfile::r1111;
    else if (part == std::vector<int>{2, 1, 1}) expect = RootProfile::r211;
    else if (part == std::vector<int>{2, 2}) expect = RootProfile::r22;
    else if (part == std::vector<int>{3, 1}) expect = RootProfile::r31;
    else expect = RootProfile::r4;
    REQUIRE(qslocc4::root_profile(q, ctx) == expect);
    // Numeric clustering reproduces the same partition.
    std::vector<std::complex<double>> centers;
    std::vector<int> ncount;
    for (const auto& root : roots) {
      bool found = false;
      for (size_t u = 0; u < centers.size(); ++u)
        if (std::abs(root - centers[u]) < 1e-5 * (1.0 + std::abs(centers[u]))) {
          ++ncount[u];
          found = true;
          break;
        }
      if (!found) {
        centers.push_back(root);
        ncount.push_back(1);
      }
    }
    std::sort(ncount.rbegin(), ncount.rend());
    REQUIRE(ncount == part);
    ++checked;
  }
}

TEST_CASE("float backend profiles match the exact backend", "[quartics]") {
  using C = std::complex<double>;
  std::mt19937_64 rng(30310);
  std::uniform_int_distribution<int> v(-5, 5);
  ZeroCtx<GR> xctx;
  for (int iter = 0; iter < 100; ++iter) {
    GR a(v(rng)), b(v(rng)), c(v(rng)), d(v(rng));
    State<GR> s = qslocc4::gen_G(a, b, c, d);
    if (s.all_zero()) continue;
    State<C> sf;
    double sc = 0.0;
    for (int m = 0; m < 16; ++m) {
      sf.a[static_cast<size_t>(m)] =
          qslocc4::FieldTraits<GR>::to_complex(s.a[static_cast<size_t>(m)]);
      sc = std::max(sc, std::abs(sf.a[static_cast<size_t>(m)]));
    }
    ZeroCtx<C> fctx;
    fctx.scale = sc;
    auto iv = qslocc4::invariants(s);
    auto ivf = qslocc4::invariants(sf);
    auto q = qslocc4::build_quartics(iv);
    auto qf = qslocc4::build_quartics(ivf);
    for (int k = 0; k < 3; ++k) {
      REQUIRE(qslocc4::root_profile(qf[static_cast<size_t>(k)], fctx) ==
              qslocc4::root_profile(q[static_cast<size_t>(k)], xctx));
      REQUIRE(qslocc4::zero_root_multiplicity(k, ivf, fctx) ==
              qslocc4::zero_root_multiplicity(k, iv, xctx));
    }
  }
}
