#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hecke/exact.hpp"

namespace hecke {

using Vec = std::vector<Rational>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix diag(const Vec &d);
  static Matrix scalar(std::size_t n, const Rational &s);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }

  Rational &operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Rational &operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  Matrix &operator+=(const Matrix &o);
  Matrix &operator-=(const Matrix &o);
  Matrix &operator*=(const Rational &s);
  friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational &s) { return a *= s; }
  friend Matrix operator*(const Rational &s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix &a, const Matrix &b);
  friend bool operator==(const Matrix &a, const Matrix &b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

  Matrix transpose() const;
  Vec apply(const Vec &v) const;
  Vec column(std::size_t j) const;
  bool is_diagonal() const;
  bool is_zero() const;
  std::size_t nonzeros() const;

  // first entry where *this and o differ, if any
  std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Matrix &o) const;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Rational> a_;
};

Matrix commutator(const Matrix &a, const Matrix &b);

// fraction-free (Bareiss) elimination after clearing row denominators
std::size_t rank(const Matrix &m);
Rational det(const Matrix &m);
Matrix inverse(const Matrix &m);
// basis of {v : m v = 0}, as columns of the result (cols may be 0)
Matrix nullspace(const Matrix &m);
// solve m x = b for square invertible m
Vec solve(const Matrix &m, const Vec &b);
// is b in the column space of m
bool in_column_space(const Matrix &m, const Vec &b);

Matrix hstack(const std::vector<Vec> &columns);
// row-major vec of an n x n matrix
Vec vec(const Matrix &m);
Matrix unvec(const Vec &v, std::size_t n);

// dense univariate polynomial, coefficient k multiplies x^k
using Poly = std::vector<Rational>;

Poly charpoly(const Matrix &m);  // monic, det(x I - m)
Rational poly_eval(const Poly &p, const Rational &x);
// roots of p with multiplicity in ascending order, or nullopt if p does not
// split over the rationals
std::optional<std::vector<Rational>> rational_roots(const Poly &p);
// spectrum of a square matrix, ascending with multiplicity; nullopt when the
// characteristic polynomial does not split over Q
std::optional<std::vector<Rational>> rational_spectrum(const Matrix &m);

}  // namespace hecke
