#include "hecke/degen.hpp"

#include <algorithm>
#include <functional>

namespace hecke {

LaurentPoly LaurentPoly::monomial(const Exponent &e, Flavor f, Rational coeff) {
  LaurentPoly p(e.size(), f);
  p.add_term(e, coeff);
  return p;
}

void LaurentPoly::add_term(const Exponent &e, const Rational &c) {
  if (e.size() != n_) throw MathError("laurent: exponent length mismatch");
  if (flavor_ == Flavor::rational)
    for (int x : e)
      if (x < 0) throw MathError("laurent: negative exponent in polynomial flavor");
  if (c.is_zero()) return;
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &o) {
  if (o.n_ != n_ || o.flavor_ != flavor_) throw MathError("laurent: flavor mismatch");
  for (const auto &[e, c] : o.t_) add_term(e, c);
  return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &o) {
  if (o.n_ != n_ || o.flavor_ != flavor_) throw MathError("laurent: flavor mismatch");
  for (const auto &[e, c] : o.t_) add_term(e, -c);
  return *this;
}

LaurentPoly &LaurentPoly::operator*=(const Rational &s) {
  if (s.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto &[e, c] : t_) c *= s;
  return *this;
}

LaurentPoly LaurentPoly::shift(std::size_t i, int k) const {
  LaurentPoly r(n_, flavor_);
  for (const auto &[e0, c] : t_) {
    Exponent e = e0;
    e[i] += k;
    r.add_term(e, c);
  }
  return r;
}

LaurentPoly LaurentPoly::swap(std::size_t i, std::size_t j) const {
  LaurentPoly r(n_, flavor_);
  for (const auto &[e0, c] : t_) {
    Exponent e = e0;
    std::swap(e[i], e[j]);
    r.t_.emplace(std::move(e), c);
  }
  return r;
}

LaurentPoly LaurentPoly::act(const Permutation &w) const {
  LaurentPoly r(n_, flavor_);
  for (const auto &[e, c] : t_) {
    Exponent f(n_);
    for (std::size_t k = 0; k < n_; ++k) f[w(static_cast<int>(k) + 1) - 1] = e[k];
    r.t_.emplace(std::move(f), c);
  }
  return r;
}

LaurentPoly divided_difference(const LaurentPoly &f, int i1, int j1) {
  if (i1 == j1) throw MathError("divided_difference needs i != j");
  std::size_t i = i1 - 1, j = j1 - 1;
  LaurentPoly g(f.nvars(), f.flavor());
  for (const auto &[e, c] : f.terms()) {
    int a = e[i], b = e[j];
    if (a == b) continue;
    int lo = std::min(a, b), hi = std::max(a, b);
    Rational coef = a > b ? -c : c;
    for (int m = 0; m < hi - lo; ++m) {
      Exponent k = e;
      k[i] = lo + m;
      k[j] = hi - 1 - m;
      g.add_term(k, coef);
    }
  }
  return g;
}

LaurentPoly dunkl_apply(const DegenParams &p, int i1, const LaurentPoly &f) {
  if (f.flavor() != p.flavor) throw MathError("dunkl: flavor mismatch");
  std::size_t i = i1 - 1;
  LaurentPoly r(f.nvars(), f.flavor());
  for (const auto &[e, c] : f.terms()) {
    if (e[i] == 0) continue;
    Exponent k = e;
    if (p.flavor == Flavor::rational) k[i] -= 1;
    r.add_term(k, p.t * c * Rational(e[i]));
  }
  if (p.drop_reflection_terms) return r;
  for (int j1 = 1; j1 <= p.n; ++j1) {
    if (j1 == i1) continue;
    LaurentPoly d = divided_difference(f, i1, j1);
    if (p.flavor == Flavor::trigonometric) d = d.shift(j1 < i1 ? i : j1 - 1, 1);
    r += p.c * d;
  }
  if (p.flavor == Flavor::trigonometric && p.trig_shift) r += (p.c * Rational(i1 - 1)) * f;
  return r;
}

std::vector<Exponent> monomial_window(int n, int d, Flavor f) {
  std::vector<Exponent> out;
  Exponent e(n);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == n) {
      out.push_back(e);
      return;
    }
    int lo = f == Flavor::rational ? 0 : -left;
    for (int v = lo; v <= left; ++v) {
      e[k] = v;
      rec(k + 1, left - std::abs(v));
    }
  };
  rec(0, d);
  return out;
}

namespace {

// Left actions of the trigonometric generators on some carrier E (Laurent
// polynomials, or matrices acting on an identity sample).
template <class E>
struct TrigOps {
  std::function<E(int, const E &)> X, Xinv, y;
  std::function<E(int, int, const E &)> s;
  std::function<E(const Rational &, const E &)> scale;
  std::function<bool(const E &)> zero;
  std::function<json(const E &)> dump;
};

struct Instance {
  std::string id;
  std::vector<int> inst;
};

template <class E>
RelationReport run_relations(const std::vector<Instance> &insts,
                             const std::vector<std::function<E(const E &)>> &diffs,
                             const std::vector<E> &samples, const std::function<json(const E &)> &dump,
                             const std::function<json(const E &)> &sample_id) {
  RelationReport r;
  for (std::size_t k = 0; k < insts.size(); ++k) {
    CheckResult c{insts[k].id, insts[k].inst, true, nullptr};
    for (const auto &f : samples) {
      E d = diffs[k](f);
      if (!dump(d).is_null()) {
        c.pass = false;
        c.witness = {{"sample", sample_id(f)}, {"difference", dump(d)}};
        break;
      }
    }
    r.push_back(std::move(c));
  }
  return r;
}

template <class E>
void trig_list(int n, const Rational &t, const Rational &c, RelationList list, const TrigOps<E> &o,
               std::vector<Instance> &insts, std::vector<std::function<E(const E &)>> &diffs) {
  auto add = [&](std::string id, std::vector<int> inst, std::function<E(const E &)> fn) {
    insts.push_back({std::move(id), std::move(inst)});
    diffs.push_back(std::move(fn));
  };
  bool core = list == RelationList::consistent_core;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      add("trig:Xs", {i, j}, [=](const E &f) { return o.X(i, o.s(i, j, f)) - o.s(i, j, o.X(j, f)); });
      bool adjacent = std::abs(i - j) == 1;
      if (!core || adjacent) {
        // verbatim sign: +c for j > i; the core list uses the sign the
        // other relations force
        Rational sign = (j > i) != core ? c : -c;
        add(core ? "trig:sy/core" : "trig:sy", {i, j}, [=](const E &f) {
          return o.s(i, j, o.y(i, f)) - o.y(j, o.s(i, j, f)) - o.scale(sign, f);
        });
      }
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        add("trig:Xks", {k, i, j}, [=](const E &f) { return o.X(k, o.s(i, j, f)) - o.s(i, j, o.X(k, f)); });
        bool outside = k < std::min(i, j) || k > std::max(i, j);
        if (!core || outside)
          add(core ? "trig:yks/core" : "trig:yks", {k, i, j},
              [=](const E &f) { return o.y(k, o.s(i, j, f)) - o.s(i, j, o.y(k, f)); });
      }
      if (i < j) {
        add("trig:XX", {i, j}, [=](const E &f) { return o.X(i, o.X(j, f)) - o.X(j, o.X(i, f)); });
        add("trig:yy", {i, j}, [=](const E &f) { return o.y(i, o.y(j, f)) - o.y(j, o.y(i, f)); });
      }
      add("trig:XyX", {i, j}, [=](const E &f) {
        E lhs = o.Xinv(j, o.y(i, o.X(j, f))) - o.y(i, f);
        E rhs = j > i ? o.scale(c, o.s(i, j, f)) : o.scale(c, o.X(i, o.Xinv(j, o.s(i, j, f))));
        return lhs - rhs;
      });
    }
  for (int k = 1; k <= n; ++k)
    add("trig:kk", {k}, [=](const E &f) {
      E lhs = o.Xinv(k, o.y(k, o.X(k, f))) - o.y(k, f);
      E rhs = o.scale(t, f);
      for (int i = 1; i <= n; ++i) {
        if (i < k) rhs = rhs - o.scale(c, o.s(i, k, f));
        if (i > k) rhs = rhs - o.scale(c, o.X(i, o.Xinv(k, o.s(i, k, f))));
      }
      return lhs - rhs;
    });
}

json exponent_json(const LaurentPoly &f) { return f.terms().begin()->first; }

}  // namespace

RelationReport verify_degenerate_relations(const DegenParams &p, int degree_bound, RelationList list) {
  if (degree_bound < 1) throw MathError("degree_bound must be >= 1");
  int n = p.n;
  std::vector<LaurentPoly> samples;
  for (const auto &e : monomial_window(n, degree_bound, p.flavor)) samples.push_back(LaurentPoly::monomial(e, p.flavor));
  std::vector<Instance> insts;
  std::vector<std::function<LaurentPoly(const LaurentPoly &)>> diffs;
  auto dump = [](const LaurentPoly &d) { return d.is_zero() ? json(nullptr) : to_json(d); };
  auto y = [p](int i, const LaurentPoly &f) { return dunkl_apply(p, i, f); };
  auto sw = [](int i, int j, const LaurentPoly &f) { return f.swap(i - 1, j - 1); };
  auto scale = [](const Rational &s, const LaurentPoly &f) { return s * f; };

  if (p.flavor == Flavor::trigonometric) {
    TrigOps<LaurentPoly> o{[](int i, const LaurentPoly &f) { return f.shift(i - 1, 1); },
                           [](int i, const LaurentPoly &f) { return f.shift(i - 1, -1); },
                           y, sw, scale,
                           [](const LaurentPoly &f) { return f.is_zero(); },
                           dump};
    trig_list<LaurentPoly>(n, p.t, p.c, list, o, insts, diffs);
  } else {
    auto x = [](int i, const LaurentPoly &f) { return f.shift(i - 1, 1); };
    auto add = [&](std::string id, std::vector<int> inst, std::function<LaurentPoly(const LaurentPoly &)> fn) {
      insts.push_back({std::move(id), std::move(inst)});
      diffs.push_back(std::move(fn));
    };
    Rational t = p.t, c = p.c;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        add("rat:xs", {i, j}, [=](const LaurentPoly &f) { return x(i, sw(i, j, f)) - sw(i, j, x(j, f)); });
        add("rat:ys", {i, j}, [=](const LaurentPoly &f) { return y(i, sw(i, j, f)) - sw(i, j, y(j, f)); });
        for (int k = 1; k <= n; ++k) {
          if (k == i || k == j) continue;
          add("rat:xks", {k, i, j}, [=](const LaurentPoly &f) { return x(k, sw(i, j, f)) - sw(i, j, x(k, f)); });
          add("rat:yks", {k, i, j}, [=](const LaurentPoly &f) { return y(k, sw(i, j, f)) - sw(i, j, y(k, f)); });
        }
        add("rat:yx", {i, j},
            [=](const LaurentPoly &f) { return y(i, x(j, f)) - x(j, y(i, f)) - c * sw(i, j, f); });
        if (i < j) {
          add("rat:xx", {i, j}, [=](const LaurentPoly &f) { return x(i, x(j, f)) - x(j, x(i, f)); });
          add("rat:yy", {i, j}, [=](const LaurentPoly &f) { return y(i, y(j, f)) - y(j, y(i, f)); });
        }
      }
    for (int k = 1; k <= n; ++k)
      add("rat:ykxk", {k}, [=](const LaurentPoly &f) {
        LaurentPoly d = y(k, x(k, f)) - x(k, y(k, f)) - t * f;
        for (int i = 1; i <= n; ++i)
          if (i != k) d += c * sw(i, k, f);
        return d;
      });
  }
  return run_relations<LaurentPoly>(insts, diffs, samples, dump, exponent_json);
}

RelationReport check_equivariance(const DegenParams &p, int degree_bound) {
  RelationReport r;
  int n = p.n;
  auto window = monomial_window(n, degree_bound, p.flavor);
  for (const auto &w : enumerate_sn(n)) {
    Permutation wi = w.inverse();
    for (int i = 1; i <= n; ++i) {
      CheckResult c{"equivariance", {i}, true, nullptr};
      for (int k = 1; k <= n; ++k) c.instance.push_back(w(k));
      for (const auto &e : window) {
        auto f = LaurentPoly::monomial(e, p.flavor);
        auto d = dunkl_apply(p, i, f.act(wi)).act(w) - dunkl_apply(p, w(i), f);
        if (!d.is_zero()) {
          c.pass = false;
          c.witness = {{"sample", e}, {"difference", to_json(d)}};
          break;
        }
      }
      r.push_back(std::move(c));
    }
  }
  return r;
}

bool degenerate_cm_predicate(Flavor f, const Matrix &x, const Matrix &y) {
  std::size_t n = x.rows();
  Matrix id = Matrix::identity(n);
  if (f == Flavor::rational) return rank(commutator(x, y) + id) == 1;
  if (det(x).is_zero()) throw MathError("trigonometric predicate needs invertible X");
  return rank(inverse(x) * y * x - y + id) == 1;
}

Matrix DualTrigRep::S(int i, int j) const {
  if (i == j) throw MathError("S_ii undefined");
  int a = std::min(i, j), b = std::max(i, j);
  std::vector<int> word;
  for (int k = a; k < b; ++k) word.push_back(k);
  for (int k = b - 2; k >= a; --k) word.push_back(k);
  Matrix m = Matrix::identity(basis.size());
  for (int k : word) m = m * Tbar[k - 1];
  return m;
}

namespace {

template <class F>
Matrix diag_eval(const std::vector<Permutation> &basis, const Vec &alpha, const Vec &beta, F f) {
  Matrix m(basis.size(), basis.size());
  int n = static_cast<int>(alpha.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    Permutation wi = basis[k].inverse();
    Vec a(n), b(n);
    for (int j = 0; j < n; ++j) {
      a[j] = alpha[wi(j + 1) - 1];
      b[j] = beta[wi(j + 1) - 1];
    }
    m(k, k) = f(a, b);
  }
  return m;
}

Matrix perm_on(const Permutation &u, const std::vector<Permutation> &basis) {
  Matrix m(basis.size(), basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) m(lex_index(u * basis[k]), k) = 1;
  return m;
}

}  // namespace

DualTrigRep trig_dual_rep(int n, const Rational &c, const Vec &alpha, const Vec &beta) {
  if (static_cast<int>(alpha.size()) != n || static_cast<int>(beta.size()) != n)
    throw MathError("dual rep: alpha and beta need length n");
  for (int i = 0; i < n; ++i) {
    if (alpha[i].is_zero()) throw MathError("dual rep: alpha entries must be nonzero");
    for (int j = 0; j < i; ++j)
      if (beta[i] == beta[j]) throw MathError("dual rep: beta entries must be distinct");
  }
  DualTrigRep r;
  r.n = n;
  r.c = c;
  r.basis = enumerate_sn(n);
  Matrix id = Matrix::identity(r.basis.size());
  for (int i = 0; i < n; ++i) r.y.push_back(diag_eval(r.basis, alpha, beta, [i](const Vec &, const Vec &b) { return b[i]; }));
  r.P1 = diag_eval(r.basis, alpha, beta, [](const Vec &a, const Vec &) { return a[0]; });
  for (int i = 0; i + 1 < n; ++i) {
    Matrix s = perm_on(Permutation::simple(n, i + 1), r.basis);
    Matrix f = diag_eval(r.basis, alpha, beta, [&](const Vec &, const Vec &b) { return c / (b[i] - b[i + 1]); });
    r.Tbar.push_back(s + f * (s - id));
  }
  std::vector<int> w(n);
  w[0] = n;
  for (int i = 1; i < n; ++i) w[i] = i;
  r.W = perm_on(Permutation(w), r.basis);
  for (int i = 1; i <= n; ++i) {
    Matrix m = id;
    for (int k = i; k <= n - 1; ++k) m = m * r.Tbar[k - 1];
    m = m * r.W * r.P1;
    for (int k = 1; k <= i - 1; ++k) m = m * r.Tbar[k - 1];
    r.X.push_back(std::move(m));
  }
  return r;
}

RelationReport verify_dual_relations(const DualTrigRep &rep, RelationList list) {
  int n = rep.n;
  std::vector<Matrix> xinv;
  for (const auto &x : rep.X) xinv.push_back(inverse(x));
  std::vector<std::vector<Matrix>> S(n + 1, std::vector<Matrix>(n + 1));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) S[i][j] = rep.S(i, j);
  TrigOps<Matrix> o{[&](int i, const Matrix &f) { return rep.X[i - 1] * f; },
                    [&](int i, const Matrix &f) { return xinv[i - 1] * f; },
                    [&](int i, const Matrix &f) { return rep.y[i - 1] * f; },
                    [&](int i, int j, const Matrix &f) { return S[i][j] * f; },
                    [](const Rational &s, const Matrix &f) { return s * f; },
                    [](const Matrix &f) { return f.is_zero(); },
                    [](const Matrix &f) { return f.is_zero() ? json(nullptr) : json{{"nonzeros", f.nonzeros()}}; }};
  std::vector<Instance> insts;
  std::vector<std::function<Matrix(const Matrix &)>> diffs;
  trig_list<Matrix>(n, Rational(0), rep.c, list, o, insts, diffs);
  std::vector<Matrix> samples{Matrix::identity(rep.basis.size())};
  return run_relations<Matrix>(insts, diffs, samples, o.dump, [](const Matrix &) { return json("identity"); });
}

CheckResult degeneration_shadow(const Rational &c, const Vec &beta) {
  const int n = 2;
  auto basis = enumerate_sn(n);
  auto h = [](const Rational &v, const Rational &d) { return Jet(v, std::vector<Rational>{d}); };
  Jet tau = h(1, c), one = h(1, 0);
  Jet gap = tau - one / tau;
  Matrix s = perm_on(Permutation::simple(n, 1), basis);
  Matrix deriv(2, 2), diffs(2, 2);
  for (std::size_t a = 0; a < 2; ++a) {
    Permutation wi = basis[a].inverse();
    Jet n1 = h(1, beta[wi(1) - 1]), n2 = h(1, beta[wi(2) - 1]);
    Jet r = n1 / n2 - one;
    diffs(a, a) = beta[wi(1) - 1] - beta[wi(2) - 1];
    for (std::size_t b = 0; b < 2; ++b) {
      Jet sab = h(s(a, b), 0);
      Jet delta = h(a == b ? 1 : 0, 0);
      Jet entry = r * tau * sab + gap * (sab - delta);
      if (!entry.value().is_zero()) throw MathError("shadow: h^0 term should vanish");
      deriv(a, b) = entry.d(0);
    }
  }
  DualTrigRep dual = trig_dual_rep(n, Rational(2) * c, Vec{Rational(1), Rational(1)}, beta);
  return check_equal("degen:shadow", {n}, deriv, diffs * dual.Tbar[0]);
}

json to_json(const LaurentPoly &p) {
  json a = json::array();
  for (const auto &[e, c] : p.terms()) a.push_back({{"exponents", e}, {"coeff", c.str()}});
  return a;
}

}  // namespace hecke
