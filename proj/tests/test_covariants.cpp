#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <random>

#include "qslocc4/invariants.hpp"
#include "qslocc4/multiform.hpp"
#include "qslocc4/normal_forms.hpp"
#include "qslocc4/state.hpp"

using qslocc4::GaussianRational;
using qslocc4::MultiForm;
using qslocc4::Rational;
using qslocc4::State;
using GR = GaussianRational;
using MF = MultiForm<GR>;

TEST_CASE("ground form round trip and derivatives", "[multiform]") {
  State<GR> s;
  s.amp(0, 1, 0, 1) = GR(3);
  s.amp(1, 0, 0, 0) = GR(-2);
  MF f = MF::ground(s);
  REQUIRE(f.md == (std::array<int, 4>{1, 1, 1, 1}));
  REQUIRE(f.coef.size() == 2);
  // d/dv_0 keeps only terms with the second variable in slot 0.
  MF d = f.derivative(0, 1);
  REQUIRE(d.coef.size() == 1);
  REQUIRE(d.coef.begin()->second == GR(-2));
  // d/du_0 keeps the complementary terms.
  MF e = f.derivative(0, 0);
  REQUIRE(e.coef.size() == 1);
  REQUIRE(e.coef.begin()->second == GR(3));
}

TEST_CASE("products multiply degrees and convolve terms", "[multiform]") {
  // (u0 v1 + v0 u1)^2 in slots 0, 1.
  State<GR> s;
  s.amp(0, 1, 0, 0) = GR(1);
  s.amp(1, 0, 0, 0) = GR(1);
  MF f = MF::ground(s);
  // The ground form has z-, w-degrees too; differentiate them away.
  f = f.derivative(2, 0).derivative(3, 0);
  MF p = f * f;
  REQUIRE(p.md == (std::array<int, 4>{2, 2, 0, 0}));
  // u0^2 v1^2 + 2 u0 v0 u1 v1 + v0^2 u1^2.
  REQUIRE(p.coef.size() == 3);
  REQUIRE(p.coef.at(MF::key(0, 2, 0, 0)) == GR(1));
  REQUIRE(p.coef.at(MF::key(1, 1, 0, 0)) == GR(2));
  REQUIRE(p.coef.at(MF::key(2, 0, 0, 0)) == GR(1));
}

TEST_CASE("full transvectant of the ground form with itself is 2B",
          "[multiform]") {
  std::mt19937_64 rng(40401);
  for (int iter = 0; iter < 50; ++iter) {
    State<GR> s = qslocc4::random_state<GR>(rng, 9);
    MF f = MF::ground(s);
    MF b = transvect(f, f, {1, 1, 1, 1});
    REQUIRE(b.md == (std::array<int, 4>{0, 0, 0, 0}));
    GR val = b.coef.empty() ? GR(0) : b.coef.begin()->second;
    REQUIRE(val == GR(2) * qslocc4::inv_B(s));
  }
}

TEST_CASE("quartic covariant of the G family matches its closed form",
          "[multiform]") {
  std::mt19937_64 rng(40402);
  std::uniform_int_distribution<int> v(-9, 9);
  for (int iter = 0; iter < 30; ++iter) {
    GR a(v(rng)), b(v(rng)), c(v(rng)), d(v(rng));
    State<GR> s = qslocc4::gen_G(a, b, c, d);
    MF f = MF::ground(s);
    MF b34 = transvect(f, f, {0, 0, 1, 1});
    REQUIRE(b34.md == (std::array<int, 4>{2, 2, 0, 0}));
    MF q1 = transvect(b34, b34, {0, 2, 0, 0});
    REQUIRE(q1.md == (std::array<int, 4>{4, 0, 0, 0}));
    GR A = a * a - d * d;
    GR Bq = b * b - c * c;
    GR C = a * a + d * d - b * b - c * c;
    // q1 = s * (-A Bq u^4 + (A^2 + Bq^2 - C^2) u^2 v^2 - A Bq v^4) for a
    // fixed overall rational scale s determined by the normalization.
    auto get = [&](int i) {
      auto it = q1.coef.find(MF::key(i, 0, 0, 0));
      return it == q1.coef.end() ? GR(0) : it->second;
    };
    GR t0 = get(0), t2 = get(2), t4 = get(4);
    REQUIRE(get(1) == GR(0));
    REQUIRE(get(3) == GR(0));
    REQUIRE(t0 == t4);
    // Cross-multiplied proportionality against the closed form.
    GR u0 = GR(0) - A * Bq;
    GR u2 = A * A + Bq * Bq - C * C;
    REQUIRE(t0 * u2 == t2 * u0);
  }
}
