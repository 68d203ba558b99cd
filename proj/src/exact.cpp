#include "hecke/exact.hpp"

namespace hecke {

Rational::Rational(long num, long den) {
  if (den == 0) throw MathError("division by zero");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(const std::string &s) {
  auto bad = [&] { return MathError("malformed rational '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto digits = [](const std::string &t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string a = s.substr(0, slash);
  std::string b = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits(a, true) || !digits(b, false)) throw bad();
  if (a[0] == '+') a = a.substr(1);
  mpz_class n(a), d(b);
  if (d == 0) throw MathError("division by zero");
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero()) throw MathError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  mpq_class r(1), b(q_);
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return Rational(r);
}

Rational rat_arith(const Rational &a, const Rational &b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div:
      if (b.is_zero()) throw MathError("division by zero in rat_arith(div)");
      return a / b;
  }
  throw MathError("unknown op");
}

Jet Jet::var(const std::vector<Rational> &point, std::size_t index) {
  if (index >= point.size()) throw MathError("jet_var: index out of range");
  Jet j(point[index], point.size());
  j.d_[index] = 1;
  return j;
}

void Jet::check(const Jet &o) const {
  if (o.d_.size() != d_.size()) throw MathError("jet: incompatible variable sets");
}

Jet &Jet::operator+=(const Jet &o) {
  check(o);
  value_ += o.value_;
  for (std::size_t k = 0; k < d_.size(); ++k) d_[k] += o.d_[k];
  return *this;
}

Jet &Jet::operator-=(const Jet &o) {
  check(o);
  value_ -= o.value_;
  for (std::size_t k = 0; k < d_.size(); ++k) d_[k] -= o.d_[k];
  return *this;
}

Jet &Jet::operator*=(const Jet &o) {
  check(o);
  for (std::size_t k = 0; k < d_.size(); ++k) d_[k] = d_[k] * o.value_ + value_ * o.d_[k];
  value_ *= o.value_;
  return *this;
}

Jet &Jet::operator/=(const Jet &o) {
  check(o);
  if (o.value_.is_zero()) throw MathError("jet: division by a jet with zero value");
  Rational g2 = o.value_ * o.value_;
  for (std::size_t k = 0; k < d_.size(); ++k) d_[k] = (d_[k] * o.value_ - value_ * o.d_[k]) / g2;
  value_ /= o.value_;
  return *this;
}

Jet Jet::operator-() const {
  Jet r(-value_, d_.size());
  for (std::size_t k = 0; k < d_.size(); ++k) r.d_[k] = -d_[k];
  return r;
}

Jet jet_arith(const Jet &a, const Jet &b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw MathError("unknown op");
}

std::uint64_t Rng::mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

std::uint64_t Rng::next() {
  constexpr std::uint64_t gamma = 0x9e3779b97f4a7c15ULL;
  return mix(seed_ + gamma * (++counter_) + mix(stream_ + gamma));
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // rejection keeps the draw unbiased
  std::uint64_t lim = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do x = next(); while (x >= lim);
  return lo + static_cast<std::int64_t>(x % span);
}

Rational Rng::rational() {
  long p = uniform(-10000, 10000);
  long q = uniform(1, 1000);
  return Rational(p, q);
}

Rational Rng::nonzero_rational() {
  Rational r;
  do r = rational(); while (r.is_zero());
  return r;
}

}  // namespace hecke
