#include "hecke/linalg.hpp"

#include <algorithm>

namespace hecke {

Matrix Matrix::identity(std::size_t n) { return scalar(n, Rational(1)); }

Matrix Matrix::scalar(std::size_t n, const Rational &s) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

Matrix Matrix::diag(const Vec &d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix &Matrix::operator+=(const Matrix &o) {
  if (r_ != o.r_ || c_ != o.c_) throw MathError("matrix shape mismatch in +");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

Matrix &Matrix::operator-=(const Matrix &o) {
  if (r_ != o.r_ || c_ != o.c_) throw MathError("matrix shape mismatch in -");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

Matrix &Matrix::operator*=(const Rational &s) {
  for (auto &x : a_) x *= s;
  return *this;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
  if (a.c_ != b.r_) throw MathError("matrix shape mismatch in *");
  // row nonzero lists of b; most generator matrices have two entries per row
  std::vector<std::vector<std::size_t>> nz(b.r_);
  for (std::size_t k = 0; k < b.r_; ++k)
    for (std::size_t j = 0; j < b.c_; ++j)
      if (!b(k, j).is_zero()) nz[k].push_back(j);
  Matrix out(a.r_, b.c_);
  mpq_class t;
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t k = 0; k < a.c_; ++k) {
      const Rational &x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j : nz[k]) {
        t = x.raw() * b(k, j).raw();
        out(i, j) += Rational(t);
      }
    }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vec Matrix::apply(const Vec &v) const {
  if (v.size() != c_) throw MathError("matrix-vector shape mismatch");
  Vec out(r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j)
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

Vec Matrix::column(std::size_t j) const {
  Vec v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

bool Matrix::is_diagonal() const {
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational &x) { return x.is_zero(); });
}

std::size_t Matrix::nonzeros() const {
  return std::count_if(a_.begin(), a_.end(), [](const Rational &x) { return !x.is_zero(); });
}

std::optional<std::pair<std::size_t, std::size_t>> Matrix::first_difference(const Matrix &o) const {
  if (r_ != o.r_ || c_ != o.c_) return std::make_pair(std::size_t(0), std::size_t(0));
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j)
      if (!((*this)(i, j) == o(i, j))) return std::make_pair(i, j);
  return std::nullopt;
}

Matrix commutator(const Matrix &a, const Matrix &b) { return a * b - b * a; }

namespace {

using ZMat = std::vector<std::vector<mpz_class>>;

ZMat integer_rows(const Matrix &m, mpq_class *scale = nullptr) {
  ZMat z(m.rows(), std::vector<mpz_class>(m.cols()));
  mpq_class total(1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l(1);
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).raw().get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) z[i][j] = m(i, j).raw().get_num() * (l / m(i, j).raw().get_den());
    total *= l;
  }
  if (scale) *scale = total;
  return z;
}

// Bareiss elimination in place; returns rank, sign tracks row swaps
std::size_t bareiss(ZMat &z, std::size_t cols, int &sign) {
  std::size_t rows = z.size(), r = 0;
  mpz_class prev(1);
  sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && z[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(z[p], z[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        z[i][j] = z[r][c] * z[i][j] - z[i][c] * z[r][j];
        mpz_divexact(z[i][j].get_mpz_t(), z[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      z[i][c] = 0;
    }
    prev = z[r][c];
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const Matrix &m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  ZMat z = integer_rows(m);
  int sign;
  return bareiss(z, m.cols(), sign);
}

Rational det(const Matrix &m) {
  if (!m.square()) throw MathError("det of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  mpq_class scale;
  ZMat z = integer_rows(m, &scale);
  int sign;
  if (bareiss(z, n, sign) < n) return Rational(0);
  // with the column skipping never triggered, the last pivot is the determinant
  return Rational(mpq_class(z[n - 1][n - 1] * sign) / scale);
}

namespace {

// reduced row echelon form over Q, returns pivot columns
std::vector<std::size_t> rref(Matrix &a) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Rational inv = a(r, c).inv();
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

}  // namespace

Matrix inverse(const Matrix &m) {
  if (!m.square()) throw MathError("inverse of non-square matrix");
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv.back() >= n) throw MathError("matrix is singular");
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

Matrix nullspace(const Matrix &m) {
  Matrix a = m;
  auto piv = rref(a);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a(r, f);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return Matrix(m.cols(), 0);
  return hstack(basis);
}

Vec solve(const Matrix &m, const Vec &b) {
  std::size_t n = m.rows();
  if (!m.square() || b.size() != n) throw MathError("solve: shape mismatch");
  Matrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv.back() >= n) throw MathError("matrix is singular");
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

bool in_column_space(const Matrix &m, const Vec &b) {
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  return rank(aug) == rank(m);
}

Matrix hstack(const std::vector<Vec> &columns) {
  if (columns.empty()) return Matrix();
  Matrix m(columns[0].size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t i = 0; i < columns[j].size(); ++i) m(i, j) = columns[j][i];
  return m;
}

Vec vec(const Matrix &m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

Matrix unvec(const Vec &v, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v.at(i * n + j);
  return m;
}

// ---- polynomials

namespace {

void trim(Poly &p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly derivative(const Poly &p) {
  Poly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Rational(static_cast<long>(k)));
  trim(d);
  return d;
}

// p = q*d + r
std::pair<Poly, Poly> divmod(Poly p, const Poly &d) {
  trim(p);
  if (d.empty()) throw MathError("polynomial division by zero");
  if (p.size() < d.size()) return {Poly{}, p};
  Poly q(p.size() - d.size() + 1);
  Rational lead = d.back().inv();
  for (std::size_t k = p.size(); k-- >= d.size();) {
    Rational f = p[k] * lead;
    q[k - d.size() + 1] = f;
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < d.size(); ++j) p[k - d.size() + 1 + j] -= f * d[j];
  }
  trim(q);
  p.resize(d.size() - 1);
  trim(p);
  return {q, p};
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational l = a.back().inv();
    for (auto &x : a) x *= l;
  }
  return a;
}

int sign_at(const Poly &p, const Rational &x) { return poly_eval(p, x).sign(); }

std::size_t sign_changes(const std::vector<Poly> &seq, const Rational &x) {
  std::size_t ch = 0;
  int last = 0;
  for (const auto &s : seq) {
    int v = sign_at(s, x);
    if (v == 0) continue;
    if (last != 0 && v != last) ++ch;
    last = v;
  }
  return ch;
}

}  // namespace

Rational poly_eval(const Poly &p, const Rational &x) {
  Rational acc;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

Poly charpoly(const Matrix &m) {
  if (!m.square()) throw MathError("charpoly of non-square matrix");
  std::size_t n = m.rows();
  // Faddeev-LeVerrier
  Poly c(n + 1);
  c[n] = 1;
  Matrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    Matrix am = m * mk;
    Rational tr;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return c;
}

std::optional<std::vector<Rational>> rational_roots(const Poly &p0) {
  Poly p = p0;
  trim(p);
  if (p.empty()) throw MathError("roots of the zero polynomial");
  std::vector<Rational> roots;
  while (p.size() > 1 && p[0].is_zero()) {
    roots.push_back(Rational(0));
    p.erase(p.begin());
  }
  if (p.size() > 1) {
    Poly g = divmod(p, gcd(p, derivative(p))).first;  // squarefree part
    // clear denominators so every rational root has the form k / lead
    mpz_class l(1);
    for (auto &x : g) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.raw().get_den_mpz_t());
    for (auto &x : g) x *= Rational(l);
    Rational lead = g.back().abs();

    std::vector<Poly> sturm{g, derivative(g)};
    while (sturm.back().size() > 1) {
      auto r = divmod(sturm[sturm.size() - 2], sturm.back()).second;
      if (r.empty()) break;
      for (auto &x : r) x = -x;
      sturm.push_back(r);
    }
    Rational bound(1);
    for (std::size_t k = 0; k + 1 < g.size(); ++k) {
      Rational q = (g[k] / g.back()).abs() + Rational(1);
      if (bound < q) bound = q;
    }

    std::vector<Rational> simple;
    bool split = true;
    struct Iv { Rational lo, hi; std::size_t vlo, vhi; };
    std::vector<Iv> stack{{-bound, bound, sign_changes(sturm, -bound), sign_changes(sturm, bound)}};
    while (!stack.empty() && split) {
      Iv iv = stack.back();
      stack.pop_back();
      std::size_t count = iv.vlo - iv.vhi;  // roots in (lo, hi]
      if (count == 0) continue;
      if (count == 1 && (iv.hi - iv.lo) * lead < Rational(1)) {
        Rational a = iv.lo * lead, b = iv.hi * lead;
        mpz_class k0 = a.num() / a.den() - 1, k1 = b.num() / b.den() + 1;
        bool found = false;
        for (mpz_class k = k0; k <= k1; ++k) {
          Rational x = Rational(k) / lead;
          if (iv.lo < x && x <= iv.hi && poly_eval(g, x).is_zero()) {
            simple.push_back(x);
            found = true;
            break;
          }
        }
        if (!found) split = false;  // the only root here is irrational
        continue;
      }
      Rational mid = (iv.lo + iv.hi) / Rational(2);
      std::size_t vm = sign_changes(sturm, mid);
      stack.push_back({iv.lo, mid, iv.vlo, vm});
      stack.push_back({mid, iv.hi, vm, iv.vhi});
    }
    if (!split) return std::nullopt;
    for (const auto &r : simple) {
      Poly lin{-r, Rational(1)};
      while (true) {
        auto [q, rem] = divmod(p, lin);
        if (!rem.empty()) break;
        p = q;
        roots.push_back(r);
      }
    }
    if (p.size() > 1) return std::nullopt;  // complex pair left over
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::optional<std::vector<Rational>> rational_spectrum(const Matrix &m) {
  return rational_roots(charpoly(m));
}

}  // namespace hecke
