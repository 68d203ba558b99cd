#include "hecke/poisson.hpp"

namespace hecke {

namespace {

void check_point(const Rational &tau, const Vec &nu, const Vec &mu) {
  if (nu.size() != mu.size() || nu.empty()) throw MathError("poisson: nu and mu need equal nonzero length");
  Rational ti = tau.inv();
  for (std::size_t i = 0; i < nu.size(); ++i) {
    if (nu[i].is_zero() || mu[i].is_zero()) throw MathError("poisson: zero coordinate");
    for (std::size_t j = 0; j < nu.size(); ++j) {
      if (i == j) continue;
      if (nu[i] == nu[j]) throw MathError("poisson: repeated nu (outside chart)");
      if ((tau * nu[i] - ti * nu[j]).is_zero()) throw MathError("poisson: point on divisor D_tau");
    }
  }
}

}  // namespace

std::vector<Jet> q_jets(const Rational &tau, const Vec &nu, const Vec &mu) {
  std::size_t n = nu.size();
  Vec point = nu;
  point.insert(point.end(), mu.begin(), mu.end());
  Jet t = Jet::constant(tau, 2 * n), ti = Jet::constant(tau.inv(), 2 * n);
  std::vector<Jet> q;
  for (std::size_t i = 0; i < n; ++i) {
    Jet v = Jet::var(point, n + i);
    Jet ni = Jet::var(point, i);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      Jet nj = Jet::var(point, j);
      v = v * (ti * nj - t * ni) / (nj - ni);
    }
    q.push_back(std::move(v));
  }
  return q;
}

Rational base_bracket(const Jet &f, const Jet &g, const Vec &nu, const Vec &mu) {
  std::size_t n = nu.size();
  Rational s;
  for (std::size_t k = 0; k < n; ++k)
    s += nu[k] * mu[k] * (f.d(k) * g.d(n + k) - f.d(n + k) * g.d(k));
  return s;
}

BracketTable chain_rule_brackets(const Rational &tau, const Vec &nu, const Vec &mu) {
  check_point(tau, nu, mu);
  std::size_t n = nu.size();
  Vec point = nu;
  point.insert(point.end(), mu.begin(), mu.end());
  std::vector<Jet> lam;
  for (std::size_t i = 0; i < n; ++i) lam.push_back(Jet::var(point, i));
  auto q = q_jets(tau, nu, mu);
  BracketTable t{n, Matrix(n, n), Matrix(n, n), Matrix(n, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      t.LL(i, j) = base_bracket(lam[i], lam[j], nu, mu);
      t.LQ(i, j) = base_bracket(lam[i], q[j], nu, mu);
      t.QQ(i, j) = base_bracket(q[i], q[j], nu, mu);
    }
  return t;
}

BracketTable fr_brackets(const Rational &tau, const CMCoords &c) {
  check_point(tau, c.lambda, c.q);
  std::size_t n = c.lambda.size();
  const Vec &l = c.lambda, &q = c.q;
  Rational ti = tau.inv();
  Rational g2 = (tau - ti) * (tau - ti);
  BracketTable t{n, Matrix(n, n), Matrix(n, n), Matrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    t.LQ(i, i) = l[i] * q[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      t.QQ(i, j) = g2 * q[i] * q[j] * (l[i] + l[j]) * l[i] * l[j] /
                   ((tau * l[i] - ti * l[j]) * (tau * l[j] - ti * l[i]) * (l[i] - l[j]));
    }
  }
  return t;
}

PoissonMatch poisson_match(const Rational &tau, const Vec &nu, const Vec &mu) {
  BracketTable lhs = chain_rule_brackets(tau, nu, mu);
  auto q = q_jets(tau, nu, mu);
  CMCoords c{nu, Vec(nu.size())};
  for (std::size_t i = 0; i < nu.size(); ++i) c.q[i] = q[i].value();
  BracketTable rhs = fr_brackets(tau, c);
  PoissonMatch m;
  const std::pair<const char *, std::pair<const Matrix *, const Matrix *>> tables[] = {
      {"LL", {&lhs.LL, &rhs.LL}}, {"LQ", {&lhs.LQ, &rhs.LQ}}, {"QQ", {&lhs.QQ, &rhs.QQ}}};
  for (const auto &[name, pr] : tables)
    if (auto d = pr.first->first_difference(*pr.second)) {
      m.match = false;
      m.witness = {{"pair", name},
                   {"i", d->first + 1},
                   {"j", d->second + 1},
                   {"lhs", (*pr.first)(d->first, d->second).str()},
                   {"rhs", (*pr.second)(d->first, d->second).str()},
                   {"point", {{"nu", to_json(nu)}, {"mu", to_json(mu)}}}};
      return m;
    }
  return m;
}

bool antisymmetric(const Matrix &m) { return m + m.transpose() == Matrix(m.rows(), m.cols()); }

json to_json(const BracketTable &t) {
  return {{"n", t.n}, {"LL", to_json(t.LL)}, {"LQ", to_json(t.LQ)}, {"QQ", to_json(t.QQ)}};
}

}  // namespace hecke
