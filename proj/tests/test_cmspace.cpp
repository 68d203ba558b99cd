#include <doctest.h>

#include <algorithm>

#include "hecke/cmspace.hpp"

using namespace hecke;

namespace {

Rational R(const char *s) { return Rational::parse(s); }

CMCoords random_coords(int n, const Rational &tau, Rng &rng) {
  while (true) {
    CMCoords c{Vec(n), Vec(n)};
    for (int i = 0; i < n; ++i) {
      c.lambda[i] = rng.nonzero_rational();
      c.q[i] = rng.nonzero_rational();
    }
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (i != j && (c.lambda[i] == c.lambda[j] || tau * c.lambda[i] == tau.inv() * c.lambda[j])) ok = false;
    if (ok) return c;
  }
}

Matrix random_unimodular(std::size_t n, Rng &rng) {
  Matrix l = Matrix::identity(n), u = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = Rational(rng.uniform(-3, 3));
      u(j, i) = Rational(rng.uniform(-3, 3));
    }
  return l * u;
}

Matrix sylvester_apply(const Matrix &j, const Matrix &f, const Rational &tau) {
  return tau * j * f - tau.inv() * f * j;
}

Rational lambda_avoiding(const Rational &tau, const std::vector<Rational> &used, Rng &rng, int n) {
  while (true) {
    Rational l = rng.nonzero_rational();
    bool ok = true;
    for (const auto &u : used)
      for (int c = -n; c <= n && ok; ++c)
        if (l / u == tau.pow(2 * c)) ok = false;
    if (ok) return l;
  }
}

}  // namespace

TEST_CASE("chart point n = 1") {
  CMPoint p = point_from_coords(Rational(2), {{5}, {3}});
  CHECK(p.X == Matrix::diag({5}));
  CHECK(p.Y == Matrix::diag({3}));
  CHECK(p.U == Vec{R("3/10")});
  CHECK(p.V == Vec{5});
  CHECK(p.satisfies_cmeq());
}

TEST_CASE("chart point n = 2") {
  CMPoint p = point_from_coords(Rational(2), {{1, 3}, {1, 1}});
  Matrix y(2, 2);
  y(0, 0) = 1;
  y(0, 1) = 9;
  y(1, 0) = R("3/11");
  y(1, 1) = 1;
  CHECK(p.Y == y);
  Matrix d = Rational(2) * p.X * p.Y - R("1/2") * p.Y * p.X;
  Matrix expected(2, 2);
  expected(0, 0) = expected(1, 0) = R("3/2");
  expected(0, 1) = expected(1, 1) = R("9/2");
  CHECK(d == expected);
  CHECK(rank(d) == 1);
  CHECK(p.satisfies_cmeq());
}

TEST_CASE("chart errors") {
  CHECK_THROWS_WITH_AS(point_from_coords(Rational(2), {{1, 1}, {1, 1}}),
                       "coordinates outside chart: repeated eigenvalue", MathError);
  CHECK_THROWS_AS(point_from_coords(Rational(2), {{1, 4}, {1, 1}}), MathError);
}

TEST_CASE("cauchy determinant") {
  CHECK(cauchy_det({2}, {1}) == 1);
  CHECK(cauchy_det({1, 2}, {3, 5}) == R("-1/12"));
  CHECK(cauchy_det_bruteforce({1, 2}, {3, 5}) == R("-1/12"));
  CHECK_THROWS_AS(cauchy_det({1, 2}, {1, 4}), MathError);
  Rng rng(17);
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k < 5; ++k) {
      Vec a(n), b(n);
      for (int i = 0; i < n; ++i) {
        a[i] = rng.rational();
        b[i] = rng.rational();
      }
      bool clash = false;
      for (auto &x : a)
        for (auto &y : b) clash = clash || x == y;
      if (clash) continue;
      REQUIRE(cauchy_det(a, b) == cauchy_det_bruteforce(a, b));
    }
}

TEST_CASE("canonicalize examples") {
  CMPoint p = point_from_coords(Rational(2), {{1, 3}, {1, 1}});
  Matrix g(2, 2);
  g(0, 0) = g(0, 1) = g(1, 1) = 1;
  CMCoords c = canonicalize(conjugate(p, g));
  CHECK(c.lambda == Vec{1, 3});
  CHECK(c.q == Vec{1, 1});

  CMPoint d = point_from_coords(Rational(2), {{-2, 5, 7}, {R("1/3"), 4, -1}});
  CMCoords cd = canonicalize(d);
  CHECK(cd.q == Vec{d.Y(0, 0), d.Y(1, 1), d.Y(2, 2)});

  CMPoint rot = p;
  rot.X = Matrix(2, 2);
  rot.X(0, 1) = 1;
  rot.X(1, 0) = -1;
  CHECK_THROWS_WITH_AS(canonicalize(rot), doctest::Contains("outside chart"), MathError);
}

TEST_CASE("chart round trip on random points") {
  Rng base(99);
  for (int n = 2; n <= 5; ++n)
    for (int k = 0; k < 50; ++k) {
      Rng rng = base.split(100 * n + k);
      Rational tau = k % 2 ? Rational(2) : R("-5/7");
      CMCoords c = random_coords(n, tau, rng);
      CMPoint p = point_from_coords(tau, c);
      REQUIRE(p.satisfies_cmeq());
      REQUIRE(rank(tau * p.X * p.Y - tau.inv() * p.Y * p.X) == 1);
      CMCoords back = canonicalize(conjugate(p, random_unimodular(n, rng)));
      std::vector<std::size_t> idx(n);
      for (int i = 0; i < n; ++i) idx[i] = i;
      std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return c.lambda[a] < c.lambda[b]; });
      for (int i = 0; i < n; ++i) {
        REQUIRE(back.lambda[i] == c.lambda[idx[i]]);
        REQUIRE(back.q[i] == c.q[idx[i]]);
      }
    }
}

TEST_CASE("free action on chart points") {
  Rng rng(123);
  for (int n = 2; n <= 4; ++n)
    for (int k = 0; k < 5; ++k) {
      CMPoint p = point_from_coords(Rational(3), random_coords(n, Rational(3), rng));
      REQUIRE(joint_commutant_dim(p.X, p.Y) == 1);
    }
  CHECK(joint_commutant_dim(Matrix::identity(2), Matrix::identity(2)) == 4);
}

TEST_CASE("epsilon on the matrix model") {
  CMPoint one = point_from_coords(Rational(2), {{5}, {3}});
  CMPoint e1 = epsilon_cm(one);
  CHECK(e1.X == one.Y);
  CHECK(e1.Y == one.X);
  CHECK(e1.U == Vec{-one.U[0]});
  CHECK(e1.V == one.V);
  CHECK(e1.satisfies_cmeq());

  CMPoint p = point_from_coords(Rational(2), {{1, 3}, {1, 1}});
  CMPoint e = epsilon_cm(p);
  CHECK(e.tau == R("1/2"));
  CHECK(e.satisfies_cmeq());
  CMPoint ee = epsilon_cm(e);
  CHECK(ee.X == p.X);
  CHECK(ee.Y == p.Y);
  CHECK(ee.tau == p.tau);

  Rng rng(8);
  for (int k = 0; k < 20; ++k) {
    CMPoint q = point_from_coords(R("3/2"), random_coords(4, R("3/2"), rng));
    REQUIRE(epsilon_cm(q).satisfies_cmeq());
    REQUIRE(epsilon_cm(epsilon_cm(q)).X == q.X);
  }
}

TEST_CASE("jordan matrix examples") {
  JordanData one{{{Rational(1), {{2}}}}};
  CHECK(jordan_matrix(one, Rational(2)) == jordan_block(2, Rational(1)));
  Matrix j2(2, 2);
  j2(0, 0) = j2(0, 1) = j2(1, 1) = 1;
  CHECK(jordan_block(2, Rational(1)) == j2);
  JordanData str{{{Rational(1), {{1}, {1}}}}};
  CHECK(jordan_matrix(str, Rational(2)) == Matrix::diag({1, 4}));
  JordanData two{{{Rational(1), {{1}}}, {Rational(3), {{1}}}}};
  CHECK_NOTHROW(two.validate(Rational(2)));
  CHECK(jordan_matrix(two, Rational(2)) == Matrix::diag({1, 3}));
  JordanData clash{{{Rational(1), {{1}}}, {Rational(4), {{1}}}}};
  CHECK_THROWS_AS(clash.validate(Rational(2)), MathError);
  JordanData bad{{{Rational(1), {{1, 2}}}}};
  CHECK_THROWS_AS(bad.validate(Rational(2)), MathError);
}

TEST_CASE("sylvester kernel examples") {
  CHECK(ker_dim_bruteforce(jordan_block(2, Rational(1)), Rational(2)) == 0);
  CHECK(ker_dim_bruteforce(Matrix::diag({1, 4}), Rational(2)) == 1);
  CHECK(ker_dim_bruteforce(Matrix::identity(3), Rational(2)) == 0);
  CHECK(ker_dim_formula({{{Rational(1), {{2}}}}}) == 0);
  CHECK(ker_dim_formula({{{Rational(1), {{1}, {1}}}}}) == 1);
  JordanData d{{{Rational(1), {{2, 1}, {1}}}}};
  CHECK(ker_dim_formula(d) == 2);
  CHECK(ker_dim_bruteforce(jordan_matrix(d, Rational(2)), Rational(2)) == 2);
  // the row-major vec convention of the Sylvester matrix
  Rng rng(2);
  Matrix j = jordan_matrix(d, Rational(2)), f(4, 4);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) f(a, b) = rng.rational();
  CHECK(unvec(sylvester_matrix(j, Rational(2)).apply(vec(f)), 4) == sylvester_apply(j, f, Rational(2)));
}

TEST_CASE("stabilizer and inequality examples") {
  CHECK(stab_dim_formula({1}) == 1);
  CHECK(stab_dim_formula({2, 1}) == 5);
  CHECK(stab_dim_formula({1, 1}) == 4);
  CHECK(stab_dim_bruteforce({2, 1}, R("7/3")) == 5);
  auto i1 = ineq_check({Rational(1), {{1}}});
  CHECK(i1.lhs == 1);
  CHECK(i1.positive);
  CHECK(ineq_check({Rational(1), {{1}, {1}}}).lhs == 1);
  CHECK(ineq_check({Rational(1), {{2, 1}, {2, 1}}}).lhs == 5);
}

TEST_CASE("shape enumeration") {
  CHECK(partitions(4).size() == 5);
  CHECK(partitions(5).size() == 7);
  // compositions of m into string sizes, each filled by a partition
  CHECK(string_shapes(1).size() == 1);
  CHECK(string_shapes(2).size() == 3);
  CHECK(string_shapes(3).size() == 8);
  CHECK(jordan_shapes(1).size() == 1);
  CHECK(jordan_shapes(2).size() == 4);
}

TEST_CASE("dimension formulas agree with brute force for every shape up to size 5") {
  Rng base(2718);
  const Rational tau(2);
  std::size_t idx = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto &shape : jordan_shapes(n)) {
      Rng rng = base.split(idx++);
      JordanData d;
      std::vector<Rational> used;
      for (const auto &strings : shape) {
        Rational l = lambda_avoiding(tau, used, rng, n);
        used.push_back(l);
        d.entries.push_back({l, strings});
      }
      REQUIRE_NOTHROW(d.validate(tau));
      REQUIRE(jordan_matrix(d, tau).rows() == static_cast<std::size_t>(n));
      REQUIRE(ker_dim_formula(d) == ker_dim_bruteforce(jordan_matrix(d, tau), tau));
      for (const auto &e : d.entries) {
        for (const auto &k : e.strings) REQUIRE(stab_dim_formula(k) == stab_dim_bruteforce(k, e.lambda));
        REQUIRE(ineq_check(e).positive);
      }
    }
  CHECK(idx > 100);
}

TEST_CASE("image membership examples") {
  const Rational tau(2);
  Matrix j = Matrix::diag({1, 4});
  // S_J scales F_ab by tau j_a - j_b / tau: zero only in the (1,2) slot, so
  // the image is exactly {Z_12 = 0}
  CHECK(im_membership(Matrix::identity(2), j, tau));
  CHECK(im_membership_closed_form(Matrix::identity(2), {{{Rational(1), {{1}, {1}}}}}, tau));
  Matrix e12(2, 2);
  e12(0, 1) = 1;
  CHECK_FALSE(im_membership(e12, j, tau));
  Rng rng(3);
  Matrix f(2, 2);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) f(a, b) = rng.rational();
  CHECK(im_membership(sylvester_apply(j, f, tau), j, tau));
}

TEST_CASE("closed-form image conditions match brute force on two-string data") {
  Rng rng(404);
  const Rational tau = R("3/2");
  std::vector<std::vector<Partition>> shapes = {{{1}, {1}}, {{2}, {1}}, {{1}, {2}}, {{2}, {2}},
                                                {{2, 1}, {1}}, {{1}, {2, 1}}, {{2, 1}, {2}}, {{3}, {2}}};
  for (const auto &strings : shapes) {
    JordanData d{{{rng.nonzero_rational(), strings}}};
    Matrix j = jordan_matrix(d, tau);
    std::size_t n = j.rows();
    for (int k = 0; k < 12; ++k) {
      Matrix f(n, n), z(n, n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          f(a, b) = rng.rational();
          if (rng.uniform(0, 3) == 0) z(a, b) = Rational(rng.uniform(-2, 2));
        }
      // half the samples are in the image by construction
      Matrix s = sylvester_apply(j, f, tau);
      if (k % 2 == 0) z = s;
      else z = s + z;
      bool bf = im_membership(z, j, tau);
      REQUIRE(bf == im_membership_closed_form(z, d, tau));
      if (k % 2 == 0) REQUIRE(bf);
    }
  }
}
