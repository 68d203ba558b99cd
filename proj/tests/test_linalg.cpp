#include <doctest.h>

#include "hecke/linalg.hpp"

using namespace hecke;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, Rng &rng, int zero_bias = 0) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (rng.uniform(0, 9) >= zero_bias) m(i, j) = Rational(rng.uniform(-9, 9), rng.uniform(1, 5));
  return m;
}

// Laplace expansion along the first row
Rational cofactor_det(const Matrix &m) {
  std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  Rational s;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != j) minor(i - 1, kk++) = m(i, k);
    Rational term = m(0, j) * cofactor_det(minor);
    s += (j % 2 ? -term : term);
  }
  return s;
}

// rank as the largest nonvanishing minor, only for tiny matrices
std::size_t minor_rank(const Matrix &m) {
  std::size_t r = m.rows(), c = m.cols(), best = 0;
  for (unsigned rows = 1; rows < (1u << r); ++rows)
    for (unsigned cols = 1; cols < (1u << c); ++cols) {
      std::size_t k = __builtin_popcount(rows);
      if (k != static_cast<std::size_t>(__builtin_popcount(cols)) || k <= best) continue;
      Matrix s(k, k);
      std::size_t a = 0;
      for (std::size_t i = 0; i < r; ++i) {
        if (!(rows >> i & 1)) continue;
        std::size_t b = 0;
        for (std::size_t j = 0; j < c; ++j)
          if (cols >> j & 1) s(a, b++) = m(i, j);
        ++a;
      }
      if (!cofactor_det(s).is_zero()) best = k;
    }
  return best;
}

}  // namespace

TEST_CASE("determinant agrees with cofactor expansion") {
  Rng rng(5);
  for (int k = 0; k < 60; ++k) {
    std::size_t n = rng.uniform(1, 5);
    Matrix m = random_matrix(n, n, rng, k % 3 == 0 ? 5 : 0);
    REQUIRE(det(m) == cofactor_det(m));
  }
}

TEST_CASE("rank agrees with the largest nonvanishing minor") {
  Rng rng(6);
  for (int k = 0; k < 60; ++k) {
    Matrix m = random_matrix(rng.uniform(1, 4), rng.uniform(1, 4), rng, 6);
    REQUIRE(rank(m) == minor_rank(m));
  }
  Matrix outer(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) outer(i, j) = Rational((i + 1) * (j + 2));
  CHECK(rank(outer) == 1);
  CHECK(rank(Matrix(2, 3)) == 0);
}

TEST_CASE("inverse, solve and nullspace") {
  Rng rng(9);
  for (int k = 0; k < 30; ++k) {
    std::size_t n = rng.uniform(1, 5);
    Matrix m = random_matrix(n, n, rng);
    if (det(m).is_zero()) continue;
    REQUIRE(inverse(m) * m == Matrix::identity(n));
    Vec b(n);
    for (auto &x : b) x = rng.rational();
    REQUIRE(m.apply(solve(m, b)) == b);
  }
  for (int k = 0; k < 30; ++k) {
    Matrix m = random_matrix(rng.uniform(1, 4), rng.uniform(1, 5), rng, 5);
    Matrix ns = nullspace(m);
    REQUIRE(ns.cols() + rank(m) == m.cols());
    if (ns.cols()) REQUIRE((m * ns).is_zero());
    if (ns.cols()) REQUIRE(rank(ns) == ns.cols());
  }
  CHECK_THROWS_AS(inverse(Matrix(2, 2)), MathError);
}

TEST_CASE("column space membership") {
  Matrix m(3, 2);
  m(0, 0) = 1;
  m(1, 1) = 1;
  CHECK(in_column_space(m, Vec{2, 3, 0}));
  CHECK_FALSE(in_column_space(m, Vec{0, 0, 1}));
}

TEST_CASE("characteristic polynomial and rational spectrum") {
  Rng rng(12);
  for (int k = 0; k < 20; ++k) {
    std::size_t n = rng.uniform(1, 4);
    Matrix m = random_matrix(n, n, rng);
    Poly p = charpoly(m);
    REQUIRE(p.size() == n + 1);
    REQUIRE(p.back() == 1);
    for (int t = 0; t < 3; ++t) {
      Rational x = rng.rational();
      REQUIRE(poly_eval(p, x) == det(Matrix::scalar(n, x) - m));
    }
  }
  // triangular: spectrum is the sorted diagonal
  Matrix t(3, 3);
  t(0, 0) = Rational(5, 2);
  t(1, 1) = -3;
  t(2, 2) = Rational(5, 2);
  t(0, 1) = 7;
  t(1, 2) = Rational(1, 3);
  CHECK(rational_spectrum(t) == std::vector<Rational>{-3, Rational(5, 2), Rational(5, 2)});
  Matrix rot(2, 2);
  rot(0, 1) = 1;
  rot(1, 0) = -1;
  CHECK_FALSE(rational_spectrum(rot).has_value());
  // x^2 - 2 does not split
  CHECK_FALSE(rational_roots(Poly{-2, 0, 1}).has_value());
  CHECK(rational_roots(Poly{Rational(-1, 4), 0, 1}) == std::vector<Rational>{Rational(-1, 2), Rational(1, 2)});
}

TEST_CASE("vec and unvec are row-major inverses") {
  Rng rng(1);
  Matrix m = random_matrix(3, 3, rng);
  Vec v = vec(m);
  CHECK(v[1] == m(0, 1));
  CHECK(unvec(v, 3) == m);
}
