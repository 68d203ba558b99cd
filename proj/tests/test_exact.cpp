#include <doctest.h>

#include "hecke/exact.hpp"

using namespace hecke;
using Vec = std::vector<Rational>;

namespace {

Rational R(const char *s) { return Rational::parse(s); }

// h(x0, x1) = x0^3 x1 - 2 x0 x1^2 + 5 x1 - 7
template <class T>
T cubic(const T &x0, const T &x1, const T &k2, const T &k5, const T &k7) {
  return x0 * x0 * x0 * x1 - k2 * x0 * x1 * x1 + k5 * x1 - k7;
}

// g(x0, x1) = x0 x1 + 3 x0 - 1
template <class T>
T quad(const T &x0, const T &x1, const T &k3, const T &k1) {
  return x0 * x1 + k3 * x0 - k1;
}

Rational h_val(const Rational &a, const Rational &b) { return cubic(a, b, Rational(2), Rational(5), Rational(7)); }
Rational g_val(const Rational &a, const Rational &b) { return quad(a, b, Rational(3), Rational(1)); }

// partial derivative of a polynomial of degree <= 3 in the shifted variable:
// the difference quotient is a polynomial of degree <= 2 in eps, so three
// samples determine it and its value at eps = 0 is the derivative
template <class F>
Rational difference_quotient_partial(F f, Rational x0, Rational x1, int var) {
  const Rational eps[3] = {Rational(1, 3), Rational(-2, 5), Rational(7, 2)};
  Rational dq[3];
  for (int k = 0; k < 3; ++k) {
    Rational a = x0, b = x1;
    (var == 0 ? a : b) += eps[k];
    dq[k] = (f(a, b) - f(x0, x1)) / eps[k];
  }
  Rational at0;
  for (int k = 0; k < 3; ++k) {
    Rational w(1);
    for (int m = 0; m < 3; ++m)
      if (m != k) w *= (Rational(0) - eps[m]) / (eps[k] - eps[m]);
    at0 += w * dq[k];
  }
  return at0;
}

}  // namespace

TEST_CASE("rational arithmetic examples") {
  CHECK(rat_arith(R("1/2"), R("1/3"), ArithOp::add) == R("5/6"));
  Rational z = rat_arith(R("2/4"), R("0/1"), ArithOp::mul);
  CHECK(z.is_zero());
  CHECK(z.den() == 1);
  CHECK(z.str() == "0");
  CHECK_THROWS_WITH_AS(rat_arith(R("1"), R("0"), ArithOp::div), doctest::Contains("division by zero"), MathError);
}

TEST_CASE("rational parsing and canonical form") {
  CHECK(R("-6/4").str() == "-3/2");
  CHECK_THROWS_AS(R("6/-4"), MathError);
  CHECK(R("-10/5").str() == "-2");
  CHECK(R("7").str() == "7");
  CHECK(R("2/4") == R("1/2"));
  CHECK_THROWS_AS(R("1/0"), MathError);
  CHECK_THROWS_AS(R("x"), MathError);
  CHECK_THROWS_AS(R("1.5"), MathError);
  CHECK(R("3/2").pow(-2) == R("4/9"));
  CHECK(R("-3/2").abs() == R("3/2"));
}

TEST_CASE("associativity and distributivity on random triples") {
  Rng rng(2024);
  for (int k = 0; k < 1000; ++k) {
    Rational a = rng.rational(), b = rng.rational(), c = rng.rational();
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a - a == Rational(0));
    if (!b.is_zero()) REQUIRE((a / b) * b == a);
  }
}

TEST_CASE("jet seeds") {
  Vec p = {Rational(2), Rational(3)};
  Jet a = Jet::var(p, 0), b = Jet::var(p, 1);
  CHECK(a.value() == 2);
  CHECK(a.partials() == Vec{1, 0});
  CHECK(b.value() == 3);
  CHECK(b.partials() == Vec{0, 1});
  CHECK_THROWS_WITH_AS(Jet::var(p, 5), doctest::Contains("index out of range"), MathError);
}

TEST_CASE("jet arithmetic examples") {
  Jet a(Rational(2), Vec{1, 0}), b(Rational(3), Vec{0, 1});
  CHECK(jet_arith(a, b, ArithOp::mul) == Jet(Rational(6), Vec{3, 2}));
  CHECK(jet_arith(a, a, ArithOp::sub) == Jet(Rational(0), Vec{0, 0}));
  Jet c(Rational(1), Vec{1, 0}), d(Rational(2), Vec{0, 1});
  CHECK(jet_arith(c, d, ArithOp::div) == Jet(R("1/2"), Vec{R("1/2"), R("-1/4")}));
  CHECK_THROWS_AS(jet_arith(c, Jet(Rational(0), Vec{1, 1}), ArithOp::div), MathError);
  CHECK_THROWS_AS(a + Jet(Rational(1), 3), MathError);
}

TEST_CASE("jet partials agree with an interpolated difference quotient") {
  Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    Rational x0 = rng.rational(), x1 = rng.rational();
    Vec p = {x0, x1};
    Jet j0 = Jet::var(p, 0), j1 = Jet::var(p, 1);
    auto cst = [](long v) { return Jet::constant(Rational(v), 2); };
    Jet h = cubic(j0, j1, cst(2), cst(5), cst(7));
    Jet g = quad(j0, j1, cst(3), cst(1));
    for (int var = 0; var < 2; ++var) {
      Rational dh = difference_quotient_partial(h_val, x0, x1, var);
      REQUIRE(h.d(var) == dh);
      Rational gv = g_val(x0, x1);
      if (gv.is_zero()) continue;
      // rational function h / g, oracle assembled from polynomial oracles
      Rational dg = difference_quotient_partial(g_val, x0, x1, var);
      Jet q = h / g;
      REQUIRE(q.value() == h_val(x0, x1) / gv);
      REQUIRE(q.d(var) == (dh * gv - h_val(x0, x1) * dg) / (gv * gv));
    }
  }
}

TEST_CASE("rng is reproducible and splits into distinct streams") {
  Rng a(7), b(7), c(8);
  for (int k = 0; k < 50; ++k) {
    auto x = a.next();
    CHECK(x == b.next());
    CHECK(x != c.next());
  }
  Rng s1 = Rng(7).split(1), s1b = Rng(7).split(1), s2 = Rng(7).split(2);
  auto v = s1.next();
  CHECK(v == s1b.next());
  CHECK(v != s2.next());
  Rng r(3);
  for (int k = 0; k < 2000; ++k) {
    auto u = r.uniform(-3, 4);
    REQUIRE(u >= -3);
    REQUIRE(u <= 4);
    Rational q = r.rational();
    REQUIRE(q.den() <= 1000);
    REQUIRE(q.abs() <= Rational(10000));
    REQUIRE(!r.nonzero_rational().is_zero());
  }
}
