#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Arbitrary precision rational. Thin wrapper around mpq_class that keeps the
// value canonical after every operation and refuses division by zero.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}
  Rational(int v) : q_(v) {}
  Rational(long num, long den);
  explicit Rational(const mpq_class &q) : q_(q) { q_.canonicalize(); }
  explicit Rational(const mpz_class &z) : q_(z) {}

  static Rational parse(const std::string &s);

  const mpq_class &raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational &operator+=(const Rational &o) { q_ += o.q_; return *this; }
  Rational &operator-=(const Rational &o) { q_ -= o.q_; return *this; }
  Rational &operator*=(const Rational &o) { q_ *= o.q_; return *this; }
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

  friend bool operator==(const Rational &a, const Rational &b) { return a.q_ == b.q_; }
  friend bool operator<(const Rational &a, const Rational &b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational &a, const Rational &b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational &a, const Rational &b) { return a.q_ > b.q_; }

  Rational inv() const { return Rational(1) / *this; }
  Rational pow(long e) const;
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

 private:
  mpq_class q_;
};

enum class ArithOp { add, sub, mul, div };
Rational rat_arith(const Rational &a, const Rational &b, ArithOp op);

// value plus exact first partials with respect to a fixed variable set
class Jet {
 public:
  Jet() = default;
  Jet(Rational value, std::size_t nvars) : value_(std::move(value)), d_(nvars) {}
  Jet(Rational value, std::vector<Rational> partials)
      : value_(std::move(value)), d_(std::move(partials)) {}

  static Jet var(const std::vector<Rational> &point, std::size_t index);
  static Jet constant(const Rational &v, std::size_t nvars) { return Jet(v, nvars); }

  const Rational &value() const { return value_; }
  const std::vector<Rational> &partials() const { return d_; }
  const Rational &d(std::size_t k) const { return d_.at(k); }
  std::size_t nvars() const { return d_.size(); }

  Jet &operator+=(const Jet &o);
  Jet &operator-=(const Jet &o);
  Jet &operator*=(const Jet &o);
  Jet &operator/=(const Jet &o);
  friend Jet operator+(Jet a, const Jet &b) { return a += b; }
  friend Jet operator-(Jet a, const Jet &b) { return a -= b; }
  friend Jet operator*(Jet a, const Jet &b) { return a *= b; }
  friend Jet operator/(Jet a, const Jet &b) { return a /= b; }
  Jet operator-() const;

  friend bool operator==(const Jet &a, const Jet &b) {
    return a.value_ == b.value_ && a.d_ == b.d_;
  }

 private:
  void check(const Jet &o) const;
  Rational value_;
  std::vector<Rational> d_;
};

Jet jet_arith(const Jet &a, const Jet &b, ArithOp op);

// SplitMix64 evaluated in counter mode: draw k of stream s is a pure
// function of (seed, s, k), so trials can be split without shared state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);
  std::uint64_t next();
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);  // inclusive
  Rational rational();  // p/q, p in [-1e4,1e4], q in [1,1e3]
  Rational nonzero_rational();
  Rng split(std::uint64_t stream) const { return Rng(seed_, mix(stream_ ^ (stream + 0x51ed27u))); }

  static std::uint64_t mix(std::uint64_t z);

 private:
  std::uint64_t seed_, stream_, counter_ = 0;
};

}  // namespace hecke
