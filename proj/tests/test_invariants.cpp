#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <complex>
#include <random>
#include <vector>

#include "qslocc4/invariants.hpp"
#include "qslocc4/normal_forms.hpp"
#include "qslocc4/state.hpp"

using qslocc4::FamilyId;
using qslocc4::GaussianRational;
using qslocc4::InvariantVector;
using qslocc4::Rational;
using qslocc4::State;
using GR = GaussianRational;

namespace {

GR rnd_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-100, 100);
  std::uniform_int_distribution<int> den(1, 100);
  return GR(Rational(num(rng), den(rng)));
}

struct Tuple4 {
  GR a, b, c, d;
};

Tuple4 rnd_tuple(std::mt19937_64& rng) {
  return {rnd_rational(rng), rnd_rational(rng), rnd_rational(rng),
          rnd_rational(rng)};
}

GR sq(const GR& v) { return v * v; }

// Closed forms of the five generators on the G family.
GR cf_B(const Tuple4& t) {
  return (sq(t.a) + sq(t.b) + sq(t.c) + sq(t.d)) / GR(2);
}
GR cf_L(const Tuple4& t) { return t.a * t.b * t.c * t.d; }
GR cf_M(const Tuple4& t) {
  return (t.a + t.b + t.c + t.d) * (t.c + t.d - t.a - t.b) *
         (t.a - t.b + t.c - t.d) * (t.a - t.b + t.d - t.c) / GR(16);
}
GR cf_N(const Tuple4& t) {
  return (t.a + t.b + t.c - t.d) * (t.a - t.b - t.c - t.d) *
         (t.a - t.b + t.c + t.d) * (t.a + t.b - t.c + t.d) / GR(16);
}
GR cf_D(const Tuple4& t) {
  return (sq(t.b) - sq(t.a) + sq(t.c) - sq(t.d)) *
         (sq(t.a) - sq(t.b) + sq(t.c) - sq(t.d)) *
         (sq(t.a) + sq(t.b) - sq(t.c) - sq(t.d)) / GR(32);
}

std::array<GR, 5> gen5(const State<GR>& s) {
  auto iv = qslocc4::invariants(s);
  return {iv.B, iv.L, iv.M, iv.N, iv.Dxy};
}

// Qubit permutations act on the G parameters through a quotient of order six:
// the double transpositions act trivially, each transposition class swaps one
// pair of the half-sum coordinates (p,q,r,s) = ((a+d)/2,(a-d)/2,(b+c)/2,
// (b-c)/2), and the two 3-cycle classes rotate them.  These five maps plus the
// identity therefore cover the whole S4 action.
std::vector<Tuple4> parameter_orbit(const Tuple4& t) {
  const GR h = GR(Rational(1, 2));
  const GR &a = t.a, &b = t.b, &c = t.c, &d = t.d;
  std::vector<Tuple4> out;
  out.push_back(t);
  // swaps within a pairing, e.g. qubits (0 1) or (2 3): r <-> s
  out.push_back({a, b, -c, d});
  // qubits (0 2) or (1 3): q <-> s
  out.push_back({(a + b - c + d) * h, (a + b + c - d) * h, (-a + b + c + d) * h,
                 (a - b + c + d) * h});
  // qubits (1 2) or (0 3): q <-> r
  out.push_back({(a + b + c + d) * h, (a + b - c - d) * h, (a - b + c - d) * h,
                 (a - b - c + d) * h});
  // 3-cycle class of 0231: (q,r,s) -> (s,q,r)
  out.push_back({(a + b - c + d) * h, (a + b + c - d) * h, (a - b - c - d) * h,
                 (a - b + c + d) * h});
  // 3-cycle class of 0312: (q,r,s) -> (r,s,q)
  out.push_back({(a + b + c + d) * h, (a + b - c - d) * h, (-a + b - c + d) * h,
                 (a - b - c + d) * h});
  return out;
}

}  // namespace

TEST_CASE("generator closed forms on the G family", "[invariants]") {
  std::mt19937_64 rng(20251);
  for (int iter = 0; iter < 100; ++iter) {
    Tuple4 t = rnd_tuple(rng);
    State<GR> s = qslocc4::gen_G(t.a, t.b, t.c, t.d);
    auto iv = qslocc4::invariants(s);
    REQUIRE(iv.B == cf_B(t));
    REQUIRE(iv.L == cf_L(t));
    REQUIRE(iv.M == cf_M(t));
    REQUIRE(iv.N == cf_N(t));
    REQUIRE(iv.Dxy == cf_D(t));
  }
}

TEST_CASE("frozen values at (a,b,c,d)=(1,2,3,4)", "[invariants]") {
  State<GR> s = qslocc4::gen_G(GR(1), GR(2), GR(3), GR(4));
  auto iv = qslocc4::invariants(s);
  CHECK(iv.B == GR(15));
  CHECK(iv.L == GR(24));
  CHECK(iv.M == GR(0));
  CHECK(iv.N == GR(-24));
  CHECK(iv.Dxy == GR(-25));
  CHECK(iv.P == GR(-25));
  CHECK(iv.S1 == GR(225));
  CHECK(iv.S2 == GR(225 - 96));
  CHECK(iv.S3 == GR(225));
  CHECK(iv.I2 == GR(Rational(2547, 4)));
  CHECK(iv.I3 == GR(Rational(-20007, 8)));
  CHECK(iv.Delta == GR(89302500));
}

TEST_CASE("L + M + N vanishes identically", "[invariants]") {
  std::mt19937_64 rng(20252);
  for (int iter = 0; iter < 100; ++iter) {
    State<GR> s = qslocc4::random_state<GR>(rng, 9);
    auto iv = qslocc4::invariants(s);
    REQUIRE(iv.L + iv.M + iv.N == GR(0));
  }
}

TEST_CASE("first quartic vanishes at the squared parameters", "[invariants]") {
  std::mt19937_64 rng(20253);
  for (int iter = 0; iter < 20; ++iter) {
    Tuple4 t = rnd_tuple(rng);
    State<GR> s = qslocc4::gen_G(t.a, t.b, t.c, t.d);
    auto iv = qslocc4::invariants(s);
    GR c3 = GR(-2) * iv.B;
    GR c2 = iv.B * iv.B + GR(2) * iv.L + GR(4) * iv.M;
    GR c1 = GR(4) * iv.Dxy - GR(4) * iv.B * iv.M - GR(2) * iv.B * iv.L;
    GR c0 = iv.L * iv.L;
    for (const GR& root : {sq(t.a), sq(t.b), sq(t.c), sq(t.d)}) {
      GR v = ((((root + c3) * root + c2) * root + c1) * root) + c0;
      REQUIRE(v == GR(0));
    }
  }
}

TEST_CASE("invariance under determinant-one local operators", "[invariants]") {
  std::mt19937_64 rng(20254);
  for (int iter = 0; iter < 30; ++iter) {
    State<GR> s = qslocc4::random_state<GR>(rng, 9);
    auto op = qslocc4::random_sl2_quadruple<GR>(9000 + iter, 3);
    State<GR> s2 = qslocc4::apply_local(s, op);
    REQUIRE(gen5(s) == gen5(s2));
  }
}

TEST_CASE("scaling degrees of the generators", "[invariants]") {
  std::mt19937_64 rng(20255);
  const std::array<GR, 3> lambdas = {GR(2), GR::i(), GR(Rational(-3, 5))};
  for (int iter = 0; iter < 20; ++iter) {
    State<GR> s = qslocc4::random_state<GR>(rng, 9);
    auto iv = qslocc4::invariants(s);
    for (const GR& lam : lambdas) {
      auto iv2 = qslocc4::invariants(lam * s);
      REQUIRE(iv2.B == lam.pow(2) * iv.B);
      REQUIRE(iv2.L == lam.pow(4) * iv.L);
      REQUIRE(iv2.M == lam.pow(4) * iv.M);
      REQUIRE(iv2.N == lam.pow(4) * iv.N);
      REQUIRE(iv2.Dxy == lam.pow(6) * iv.Dxy);
      REQUIRE(iv2.I2 == lam.pow(8) * iv.I2);
      REQUIRE(iv2.I3 == lam.pow(12) * iv.I3);
      REQUIRE(iv2.Delta == lam.pow(24) * iv.Delta);
    }
  }
}

TEST_CASE("qubit permutations of G land on the parameter orbit",
          "[invariants]") {
  std::mt19937_64 rng(20256);
  for (int iter = 0; iter < 20; ++iter) {
    Tuple4 t = rnd_tuple(rng);
    State<GR> s = qslocc4::gen_G(t.a, t.b, t.c, t.d);
    std::vector<std::array<GR, 5>> orbit_vectors;
    for (const Tuple4& u : parameter_orbit(t))
      orbit_vectors.push_back(gen5(qslocc4::gen_G(u.a, u.b, u.c, u.d)));
    for (const auto& sigma : qslocc4::all_qubit_permutations()) {
      auto v = gen5(qslocc4::permute_qubits(s, sigma));
      bool found = false;
      for (const auto& w : orbit_vectors)
        if (v == w) {
          found = true;
          break;
        }
      INFO("permutation " << sigma[0] << sigma[1] << sigma[2] << sigma[3]);
      REQUIRE(found);
    }
  }
}

TEST_CASE("floating backend matches the exact backend", "[invariants]") {
  using C = std::complex<double>;
  std::mt19937_64 rng(20257);
  for (int iter = 0; iter < 10; ++iter) {
    State<GR> s = qslocc4::random_state<GR>(rng, 9);
    State<C> sf;
    for (int m = 0; m < 16; ++m)
      sf.a[static_cast<size_t>(m)] =
          qslocc4::FieldTraits<GR>::to_complex(s.a[static_cast<size_t>(m)]);
    auto iv = qslocc4::invariants(s);
    auto ivf = qslocc4::invariants(sf);
    auto close = [](const C& x, const GR& y) {
      C yc = qslocc4::FieldTraits<GR>::to_complex(y);
      return std::abs(x - yc) <= 1e-9 * (1.0 + std::abs(yc));
    };
    CHECK(close(ivf.B, iv.B));
    CHECK(close(ivf.L, iv.L));
    CHECK(close(ivf.M, iv.M));
    CHECK(close(ivf.N, iv.N));
    CHECK(close(ivf.Dxy, iv.Dxy));
    CHECK(close(ivf.Delta, iv.Delta));
  }
}

TEST_CASE("family generators have the expected quadratic invariant",
          "[normal-forms]") {
  GR a(3), b(5), c(7);
  auto B_of = [](const State<GR>& s) { return qslocc4::inv_B(s); };
  CHECK(B_of(qslocc4::gen_family<GR>(FamilyId::L_abc2, {a, b, c})) ==
        (a * a + b * b) / GR(2) + c * c);
  CHECK(B_of(qslocc4::gen_family<GR>(FamilyId::L_a2b2, {a, b})) == a * a + b * b);
  CHECK(B_of(qslocc4::gen_family<GR>(FamilyId::L_ab3, {a, b})) ==
        (GR(3) * a * a + b * b) / GR(2));
  CHECK(B_of(qslocc4::gen_family<GR>(FamilyId::L_a4, {a})) == GR(2) * a * a);
  CHECK(B_of(qslocc4::gen_family<GR>(FamilyId::L_a2_03p1, {a})) == a * a);
  for (FamilyId nil : {FamilyId::L_05p3, FamilyId::L_07p1,
                       FamilyId::L_03p1_03p1}) {
    auto iv = qslocc4::invariants(qslocc4::gen_family<GR>(nil, {}));
    CHECK(iv.B == GR(0));
    CHECK(iv.L == GR(0));
    CHECK(iv.M == GR(0));
    CHECK(iv.Dxy == GR(0));
  }
}

TEST_CASE("specialization constraint parser", "[normal-forms]") {
  using qslocc4::Specialization;
  auto sp = Specialization::parse({"c=d", "d=0"}, 4);
  State<GR> s = qslocc4::specialize<GR>(FamilyId::G_abcd, sp, {GR(4), GR(7)});
  REQUIRE(s == qslocc4::gen_G(GR(4), GR(7), GR(0), GR(0)));

  sp = Specialization::parse({"b=a", "c=-2a", "d=0"}, 4);
  s = qslocc4::specialize<GR>(FamilyId::G_abcd, sp, {GR(3)});
  REQUIRE(s == qslocc4::gen_G(GR(3), GR(3), GR(-6), GR(0)));

  sp = Specialization::parse({"a=0", "c=b/2"}, 3);
  s = qslocc4::specialize<GR>(FamilyId::L_abc2, sp, {GR(10)});
  REQUIRE(s == qslocc4::gen_family<GR>(FamilyId::L_abc2,
                                   std::vector<GR>{GR(0), GR(10), GR(5)}));

  REQUIRE_THROWS_AS(Specialization::parse({"e=0"}, 4), std::invalid_argument);
  REQUIRE_THROWS_AS(Specialization::parse({"a=x"}, 4), std::invalid_argument);
  REQUIRE_THROWS_AS(
      qslocc4::specialize<GR>(FamilyId::G_abcd, Specialization::parse({"a=0"}, 4),
                          std::vector<GR>{GR(1)}),
      std::invalid_argument);
}
