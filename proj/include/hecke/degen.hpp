#pragma once

#include <functional>
#include <map>
#include <vector>

#include "hecke/linalg.hpp"
#include "hecke/report.hpp"
#include "hecke/symgroup.hpp"

namespace hecke {

enum class Flavor { rational, trigonometric };

using Exponent = std::vector<int>;

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::size_t nvars, Flavor f) : n_(nvars), flavor_(f) {}
  static LaurentPoly monomial(const Exponent &e, Flavor f, Rational coeff = Rational(1));

  std::size_t nvars() const { return n_; }
  Flavor flavor() const { return flavor_; }
  const std::map<Exponent, Rational> &terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  void add_term(const Exponent &e, const Rational &c);
  LaurentPoly &operator+=(const LaurentPoly &o);
  LaurentPoly &operator-=(const LaurentPoly &o);
  LaurentPoly &operator*=(const Rational &s);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
  friend LaurentPoly operator*(const Rational &s, LaurentPoly a) { return a *= s; }
  friend bool operator==(const LaurentPoly &a, const LaurentPoly &b) { return a.t_ == b.t_; }

  // multiply by x_i^k (k may be negative in the Laurent flavor)
  LaurentPoly shift(std::size_t i, int k) const;
  LaurentPoly swap(std::size_t i, std::size_t j) const;  // s_ij, 0-based
  LaurentPoly act(const Permutation &w) const;          // (w f)(x) = f(x_{w(1)}, ...)

 private:
  std::size_t n_ = 0;
  Flavor flavor_ = Flavor::rational;
  std::map<Exponent, Rational> t_;
};

struct DegenParams {
  int n = 2;
  Rational t{1}, c{1};
  Flavor flavor = Flavor::rational;
  // fixtures only
  bool drop_reflection_terms = false;
  bool trig_shift = true;  // constant c (i-1) added to trig y_i
};

// g with (x_i - x_j) g = (s_ij - 1) f; indices 1-based
LaurentPoly divided_difference(const LaurentPoly &f, int i, int j);
LaurentPoly dunkl_apply(const DegenParams &p, int i, const LaurentPoly &f);

enum class RelationList { verbatim, consistent_core };
std::vector<Exponent> monomial_window(int n, int degree_bound, Flavor f);
RelationReport verify_degenerate_relations(const DegenParams &p, int degree_bound,
                                           RelationList list = RelationList::verbatim);
// w y_i w^{-1} == y_{w(i)} on the window, for every w in S_n
RelationReport check_equivariance(const DegenParams &p, int degree_bound);

bool degenerate_cm_predicate(Flavor f, const Matrix &x, const Matrix &y);

struct DualTrigRep {
  int n = 0;
  Rational c;
  std::vector<Permutation> basis;
  std::vector<Matrix> X, y, Tbar;
  Matrix W, P1;
  // S_ij from Tbar along the word i, ..., j-1, ..., i
  Matrix S(int i, int j) const;
};

DualTrigRep trig_dual_rep(int n, const Rational &c, const Vec &alpha, const Vec &beta);
RelationReport verify_dual_relations(const DualTrigRep &rep, RelationList list = RelationList::verbatim);

// n = 2: d/dh of (X_1/X_2 - 1) T_1 at tau = 1 + c h, nu_i = 1 + h beta_i,
// compared with diag(beta o w^{-1} differences) Tbar_1 at parameter 2c
CheckResult degeneration_shadow(const Rational &c, const Vec &beta);

json to_json(const LaurentPoly &p);

}  // namespace hecke
