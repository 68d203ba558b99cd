#pragma once

#include <vector>

#include "hecke/linalg.hpp"
#include "hecke/report.hpp"

namespace hecke {

struct CMPoint {
  Rational tau;
  Matrix X, Y;
  Vec U, V;

  // X^{-1} Y^{-1} X Y tau - tau^{-1} == U (x) V
  bool satisfies_cmeq() const;
  // recovers U, V from a pair with rank-one defect; throws otherwise
  static CMPoint from_pair(const Rational &tau, const Matrix &x, const Matrix &y);
};

Matrix cm_defect(const Rational &tau, const Matrix &x, const Matrix &y);

struct CMCoords {
  Vec lambda, q;
};

CMPoint point_from_coords(const Rational &tau, const CMCoords &c);
CMCoords canonicalize(const CMPoint &p);
CMPoint epsilon_cm(const CMPoint &p);
Rational cauchy_det(const Vec &a, const Vec &b);
Rational cauchy_det_bruteforce(const Vec &a, const Vec &b);
// dimension of {R : [R,X] = [R,Y] = 0}
std::size_t joint_commutant_dim(const Matrix &x, const Matrix &y);
// g X g^{-1} etc.
CMPoint conjugate(const CMPoint &p, const Matrix &g);

using Partition = std::vector<int>;

struct JordanEntry {
  Rational lambda;
  std::vector<Partition> strings;  // eigenvalues lambda, lambda tau^2, ...
  int size() const;
};

struct JordanData {
  std::vector<JordanEntry> entries;
  int size() const;
  // partitions valid and no two entries tau^2-related up to |c| <= n
  void validate(const Rational &tau) const;
};

Matrix jordan_block(int k, const Rational &lambda);
Matrix jordan_matrix(const JordanData &d, const Rational &tau);
// matrix of F -> tau J F - tau^{-1} F J on row-major vec(F)
Matrix sylvester_matrix(const Matrix &j, const Rational &tau);
std::size_t ker_dim_bruteforce(const Matrix &j, const Rational &tau);
std::size_t ker_dim_formula(const JordanData &d);
std::size_t stab_dim_formula(const Partition &k);
std::size_t stab_dim_bruteforce(const Partition &k, const Rational &lambda);

struct IneqResult {
  long lhs;
  bool positive;
};
IneqResult ineq_check(const JordanEntry &e);

bool im_membership(const Matrix &z, const Matrix &j, const Rational &tau);
// diagonal-sum conditions on the (s, s+1) string blocks
bool im_membership_closed_form(const Matrix &z, const JordanData &d, const Rational &tau);

std::vector<Partition> partitions(int m);
// every list of nonempty partitions with total size m
std::vector<std::vector<Partition>> string_shapes(int m);
// every multiset of string shapes with total size n
std::vector<std::vector<std::vector<Partition>>> jordan_shapes(int n);

json to_json(const CMPoint &p);
json to_json(const CMCoords &c);
json to_json(const JordanData &d);

}  // namespace hecke
