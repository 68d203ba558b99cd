#pragma once

#include <optional>

#include "hecke/cmspace.hpp"
#include "hecke/linalg.hpp"
#include "hecke/report.hpp"

namespace hecke {

struct BracketTable {
  std::size_t n = 0;
  Matrix LL, LQ, QQ;  // {lambda_i, lambda_j}, {lambda_i, q_j}, {q_i, q_j}
};

// q_i = mu_i prod_{j != i} (tau^{-1} nu_j - tau nu_i) / (nu_j - nu_i)
std::vector<Jet> q_jets(const Rational &tau, const Vec &nu, const Vec &mu);
// base bracket {nu_i, mu_j} = delta_ij nu_i mu_j on jets over (nu, mu)
Rational base_bracket(const Jet &f, const Jet &g, const Vec &nu, const Vec &mu);

BracketTable chain_rule_brackets(const Rational &tau, const Vec &nu, const Vec &mu);
BracketTable fr_brackets(const Rational &tau, const CMCoords &c);

struct PoissonMatch {
  bool match = true;
  json witness;  // {pair, i, j, lhs, rhs} on mismatch
};
PoissonMatch poisson_match(const Rational &tau, const Vec &nu, const Vec &mu);

bool antisymmetric(const Matrix &m);
json to_json(const BracketTable &t);

}  // namespace hecke
