#include "hecke/cmspace.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace hecke {

Matrix cm_defect(const Rational &tau, const Matrix &x, const Matrix &y) {
  std::size_t n = x.rows();
  return tau * (inverse(x) * inverse(y) * x * y) - Matrix::scalar(n, tau.inv());
}

namespace {

Matrix outer(const Vec &u, const Vec &v) {
  Matrix m(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * v[j];
  return m;
}

}  // namespace

bool CMPoint::satisfies_cmeq() const {
  if (X.rows() != U.size() || X.rows() != V.size()) return false;
  return cm_defect(tau, X, Y) == outer(U, V);
}

CMPoint CMPoint::from_pair(const Rational &tau, const Matrix &x, const Matrix &y) {
  Matrix m = cm_defect(tau, x, y);
  if (rank(m) != 1) throw MathError("pair is not in the CM space: defect rank != 1");
  std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!m(i, j).is_zero()) {
        CMPoint p{tau, x, y, m.column(j), Vec(n)};
        for (std::size_t k = 0; k < n; ++k) p.V[k] = m(i, k) / m(i, j);
        return p;
      }
  throw MathError("unreachable");
}

CMPoint point_from_coords(const Rational &tau, const CMCoords &c) {
  std::size_t n = c.lambda.size();
  if (c.q.size() != n || n == 0) throw MathError("coordinates: lambda and q need equal nonzero length");
  Rational ti = tau.inv();
  for (std::size_t i = 0; i < n; ++i) {
    if (c.lambda[i].is_zero() || c.q[i].is_zero()) throw MathError("coordinates outside chart: zero entry");
    for (std::size_t j = 0; j < i; ++j)
      if (c.lambda[i] == c.lambda[j]) throw MathError("coordinates outside chart: repeated eigenvalue");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && (tau * c.lambda[i] - ti * c.lambda[j]).is_zero())
        throw MathError("coordinates on divisor D_tau");
  Rational gap = tau - ti;
  CMPoint p;
  p.tau = tau;
  p.X = Matrix::diag(c.lambda);
  p.Y = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      p.Y(i, j) = i == j ? c.q[i] : gap * c.q[i] * c.lambda[j] / (tau * c.lambda[i] - ti * c.lambda[j]);
  Vec u = inverse(p.Y * p.X).apply(c.q);
  for (auto &x : u) x *= gap;
  p.U = u;
  p.V = c.lambda;
  if (!p.satisfies_cmeq()) throw MathError("internal: chart point violates CMeq");
  return p;
}

CMCoords canonicalize(const CMPoint &p) {
  std::size_t n = p.X.rows();
  auto spec = rational_spectrum(p.X);
  if (!spec) throw MathError("outside chart: spectrum of X does not split over Q");
  for (std::size_t i = 1; i < n; ++i)
    if ((*spec)[i] == (*spec)[i - 1]) throw MathError("outside chart: repeated eigenvalue");
  Rational ti = p.tau.inv();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && (p.tau * (*spec)[i] - ti * (*spec)[j]).is_zero()) throw MathError("on divisor D_tau");
  std::vector<Vec> cols;
  for (const auto &l : *spec) cols.push_back(nullspace(p.X - Matrix::scalar(n, l)).column(0));
  Matrix w = hstack(cols);
  Matrix yw = inverse(w) * p.Y * w;
  CMCoords c{*spec, Vec(n)};
  for (std::size_t i = 0; i < n; ++i) c.q[i] = yw(i, i);
  return c;
}

CMPoint epsilon_cm(const CMPoint &p) {
  Matrix m = inverse(p.Y) * inverse(p.X) * p.Y * p.X;
  CMPoint out{p.tau.inv(), p.Y, p.X, m.apply(p.U), p.V};
  for (auto &x : out.U) x = -x;
  if (!out.satisfies_cmeq()) throw MathError("epsilon_cm: output violates CMeq");
  return out;
}

CMPoint conjugate(const CMPoint &p, const Matrix &g) {
  Matrix gi = inverse(g);
  CMPoint out{p.tau, g * p.X * gi, g * p.Y * gi, g.apply(p.U), gi.transpose().apply(p.V)};
  return out;
}

Rational cauchy_det(const Vec &a, const Vec &b) {
  std::size_t n = a.size();
  if (b.size() != n) throw MathError("cauchy_det: length mismatch");
  Rational num(1), den(1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational d = a[i] - b[j];
      if (d.is_zero()) throw MathError("cauchy_det: a_i = b_j");
      den *= d;
      if (i < j) num *= (a[i] - a[j]) * (b[j] - b[i]);
    }
  return num / den;
}

Rational cauchy_det_bruteforce(const Vec &a, const Vec &b) {
  std::size_t n = a.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational d = a[i] - b[j];
      if (d.is_zero()) throw MathError("cauchy_det: a_i = b_j");
      m(i, j) = d.inv();
    }
  return det(m);
}

namespace {

// rows of F -> A F - F B on row-major vec(F), with scalar weights
Matrix vec_operator(const Matrix &a, const Matrix &b, const Rational &wa, const Rational &wb) {
  std::size_t n = a.rows();
  Matrix s(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (!a(i, k).is_zero()) s(i * n + j, k * n + j) += wa * a(i, k);
        if (!b(k, j).is_zero()) s(i * n + j, i * n + k) -= wb * b(k, j);
      }
  return s;
}

}  // namespace

std::size_t joint_commutant_dim(const Matrix &x, const Matrix &y) {
  std::size_t n = x.rows();
  Matrix sx = vec_operator(x, x, Rational(1), Rational(1));
  Matrix sy = vec_operator(y, y, Rational(1), Rational(1));
  Matrix st(2 * n * n, n * n);
  for (std::size_t i = 0; i < n * n; ++i)
    for (std::size_t j = 0; j < n * n; ++j) {
      st(i, j) = sx(i, j);
      st(n * n + i, j) = sy(i, j);
    }
  return n * n - rank(st);
}

int JordanEntry::size() const {
  int s = 0;
  for (const auto &p : strings) s += std::accumulate(p.begin(), p.end(), 0);
  return s;
}

int JordanData::size() const {
  int s = 0;
  for (const auto &e : entries) s += e.size();
  return s;
}

void JordanData::validate(const Rational &tau) const {
  int n = size();
  for (const auto &e : entries) {
    if (e.lambda.is_zero()) throw MathError("jordan data: zero eigenvalue");
    if (e.strings.empty()) throw MathError("jordan data: entry without strings");
    for (const auto &p : e.strings) {
      if (p.empty()) throw MathError("jordan data: empty string");
      for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] <= 0 || (i > 0 && p[i] > p[i - 1])) throw MathError("jordan data: not a partition");
    }
  }
  Rational t2 = tau * tau;
  for (std::size_t a = 0; a < entries.size(); ++a)
    for (std::size_t b = 0; b < entries.size(); ++b) {
      if (a == b) continue;
      Rational ratio = entries[a].lambda / entries[b].lambda;
      for (int c = -n; c <= n; ++c)
        if (ratio == t2.pow(c)) throw MathError("jordan data: entries are tau^2-related");
    }
}

Matrix jordan_block(int k, const Rational &lambda) {
  Matrix m(k, k);
  for (int i = 0; i < k; ++i) {
    m(i, i) = lambda;
    if (i + 1 < k) m(i, i + 1) = 1;
  }
  return m;
}

Matrix jordan_matrix(const JordanData &d, const Rational &tau) {
  int n = d.size();
  if (n == 0) throw MathError("jordan data: size mismatch (empty)");
  Matrix j(n, n);
  int off = 0;
  for (const auto &e : d.entries)
    for (std::size_t s = 0; s < e.strings.size(); ++s)
      for (int k : e.strings[s]) {
        Matrix b = jordan_block(k, e.lambda * tau.pow(2 * static_cast<long>(s)));
        for (int r = 0; r < k; ++r)
          for (int c = 0; c < k; ++c) j(off + r, off + c) = b(r, c);
        off += k;
      }
  return j;
}

Matrix sylvester_matrix(const Matrix &j, const Rational &tau) { return vec_operator(j, j, tau, tau.inv()); }

std::size_t ker_dim_bruteforce(const Matrix &j, const Rational &tau) {
  return j.rows() * j.rows() - rank(sylvester_matrix(j, tau));
}

namespace {

std::size_t cross_min(const Partition &a, const Partition &b) {
  std::size_t s = 0;
  for (int x : a)
    for (int y : b) s += std::min(x, y);
  return s;
}

}  // namespace

std::size_t ker_dim_formula(const JordanData &d) {
  std::size_t s = 0;
  for (const auto &e : d.entries)
    for (std::size_t k = 0; k + 1 < e.strings.size(); ++k) s += cross_min(e.strings[k], e.strings[k + 1]);
  return s;
}

std::size_t stab_dim_formula(const Partition &k) { return cross_min(k, k); }

std::size_t stab_dim_bruteforce(const Partition &k, const Rational &lambda) {
  JordanData d{{JordanEntry{lambda, {k}}}};
  Matrix j = jordan_matrix(d, Rational(2));
  std::size_t n = j.rows();
  return n * n - rank(vec_operator(j, j, Rational(1), Rational(1)));
}

IneqResult ineq_check(const JordanEntry &e) {
  long lhs = 0;
  for (const auto &p : e.strings) lhs += static_cast<long>(cross_min(p, p));
  for (std::size_t k = 0; k + 1 < e.strings.size(); ++k)
    lhs -= static_cast<long>(cross_min(e.strings[k], e.strings[k + 1]));
  return {lhs, lhs > 0};
}

bool im_membership(const Matrix &z, const Matrix &j, const Rational &tau) {
  return in_column_space(sylvester_matrix(j, tau), vec(z));
}

bool im_membership_closed_form(const Matrix &z, const JordanData &d, const Rational &tau) {
  struct Block {
    std::size_t entry, string;
    int size, offset;
  };
  std::vector<Block> blocks;
  int off = 0;
  for (std::size_t e = 0; e < d.entries.size(); ++e)
    for (std::size_t s = 0; s < d.entries[e].strings.size(); ++s)
      for (int k : d.entries[e].strings[s]) {
        blocks.push_back({e, s, k, off});
        off += k;
      }
  Rational t2 = tau * tau;
  // only blocks from string s into string s+1 of one entry have a cokernel
  for (const auto &x : blocks)
    for (const auto &y : blocks) {
      if (x.entry != y.entry || y.string != x.string + 1) continue;
      int a = x.size, b = y.size;
      for (int u = 1; u <= std::min(a, b); ++u) {
        Rational sum, w(1);
        for (int l = 0; l < u; ++l, w *= t2) sum += z(x.offset + a - u + l, y.offset + l) * w;
        if (!sum.is_zero()) return false;
      }
    }
  return true;
}

std::vector<Partition> partitions(int m) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(left, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  if (m > 0) rec(m, m);
  return out;
}

std::vector<std::vector<Partition>> string_shapes(int m) {
  std::vector<std::vector<Partition>> out;
  if (m == 0) return {{}};
  for (int a = 1; a <= m; ++a)
    for (const auto &p : partitions(a))
      for (auto rest : (a == m ? std::vector<std::vector<Partition>>{{}} : string_shapes(m - a))) {
        rest.insert(rest.begin(), p);
        out.push_back(std::move(rest));
      }
  return out;
}

std::vector<std::vector<std::vector<Partition>>> jordan_shapes(int n) {
  std::vector<std::vector<Partition>> all;
  std::vector<int> sizes;
  for (int m = 1; m <= n; ++m)
    for (auto &s : string_shapes(m)) {
      all.push_back(s);
      sizes.push_back(m);
    }
  std::vector<std::vector<std::vector<Partition>>> out;
  std::vector<std::vector<Partition>> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < all.size(); ++i)
      if (sizes[i] <= left) {
        cur.push_back(all[i]);
        rec(i, left - sizes[i]);
        cur.pop_back();
      }
  };
  rec(0, n);
  return out;
}

json to_json(const CMPoint &p) {
  return {{"tau", p.tau.str()}, {"X", to_json(p.X)}, {"Y", to_json(p.Y)}, {"U", to_json(p.U)}, {"V", to_json(p.V)}};
}

json to_json(const CMCoords &c) { return {{"lambda", to_json(c.lambda)}, {"q", to_json(c.q)}}; }

json to_json(const JordanData &d) {
  json a = json::array();
  for (const auto &e : d.entries) a.push_back({{"lambda", e.lambda.str()}, {"strings", e.strings}});
  return a;
}

}  // namespace hecke
