#pragma once

#include <optional>
#include <vector>

#include "hecke/linalg.hpp"
#include "hecke/report.hpp"
#include "hecke/symgroup.hpp"

namespace hecke {

struct DahaParams {
  int n = 1;
  Rational tau{2};

  // rejects tau in {0, 1, -1} and n outside 1..8
  static DahaParams make(int n, const Rational &tau);
  // skips the tau check; only for degenerate fixtures such as tau = 1
  static DahaParams unchecked(int n, const Rational &tau);
};

struct Character {
  Vec mu, nu;

  static Character make(Vec mu, Vec nu);  // validates nonzero entries, distinct nu
  bool strongly_generic(const Rational &tau) const;
  static Character random(int n, const Rational &tau, Rng &rng);  // strongly generic
};

struct RepBundle {
  DahaParams params;
  Character chi;
  std::vector<Permutation> basis;
  std::vector<Matrix> X, T;  // X_1..X_n, T_1..T_{n-1} stored 0-based
  Matrix Pi, PiInv;
  std::vector<Matrix> Y;

  int n() const { return params.n; }
  std::size_t dim() const { return basis.size(); }
};

// matrix of the permutation u acting by w -> u w on the basis
Matrix perm_matrix(const Permutation &u, const std::vector<Permutation> &basis);

RepBundle build_rep(const DahaParams &p, const Character &chi);
// same construction without genericity checks; tau - 1/tau = 0 drops the
// Demazure term so repeated nu is allowed there
RepBundle build_rep_unchecked(const DahaParams &p, const Character &chi);

// T^{-1} from the quadratic relation, falling back to elimination
Matrix hecke_inverse(const Matrix &t, const Rational &tau);
// Y_i = T_i .. T_{n-1} pi^{-1} T_1^{-1} .. T_{i-1}^{-1}
std::vector<Matrix> derive_Y(const RepBundle &rep);
Matrix y_inverse(const RepBundle &rep, int i);

RelationReport verify_relations(const RepBundle &rep);

// e_i = sum over w' fixing 1 of (w' s_{1i}), as columns of an N x n matrix
Matrix invariant_basis(const RepBundle &rep);
// nullspace of the stacked T_k - tau, 2 <= k <= n-1
Matrix invariant_nullspace(const RepBundle &rep);
// matrix R with M E = E R; throws if span(E) is not preserved
Matrix restrict_to(const Matrix &m, const Matrix &e);

struct CmCertificate {
  Matrix xbar, ybar;
  RelationReport checks;
};
CmCertificate cm_map(const RepBundle &rep);
Vec ybar_diagonal_formula(const Rational &tau, const Character &chi);

struct ZResult {
  Matrix z;
  std::optional<std::vector<Rational>> spectrum;  // on the invariant space
  std::vector<Rational> expected;
  RelationReport checks;
};
ZResult z_element(const RepBundle &rep);

// the tau = 1 companion: sum_{i>=2} s_{1i} on invariants of the group algebra
std::optional<std::vector<Rational>> tau1_companion_spectrum(int n);

Matrix t_word(const RepBundle &rep, const std::vector<int> &word);
Matrix symmetrizer(const RepBundle &rep);
struct SymmetrizerChecks {
  Matrix e;
  RelationReport checks;
};
// words are 1-based generator lists: +i = T_i, -i = T_i^{-1}, 100+i = X_i, 200+i = Y_i
SymmetrizerChecks symmetrizer_checks(const RepBundle &rep, const std::vector<std::vector<int>> &words, Rng &rng);
Matrix generator_word(const RepBundle &rep, const std::vector<int> &word);

bool regularity_check(const RepBundle &rep);
std::size_t commutant_dimension(const RepBundle &rep);

enum class Twist { sigma, epsilon };
RepBundle gl2z_twist(const RepBundle &rep, Twist gen);

}  // namespace hecke
