#pragma once

#include <vector>

namespace hecke {

// One-line notation, 1-based images: w(i) = images()[i-1].
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  static Permutation simple(int n, int i);             // s_i = (i, i+1)
  static Permutation transposition(int n, int i, int j);
  static Permutation cycle(int n);                     // c(i) = i+1, c(n) = 1

  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[i - 1]; }
  const std::vector<int> &images() const { return w_; }

  Permutation inverse() const;
  // (a * b)(i) = a(b(i))
  friend Permutation operator*(const Permutation &a, const Permutation &b);
  friend bool operator==(const Permutation &a, const Permutation &b) { return a.w_ == b.w_; }
  friend bool operator<(const Permutation &a, const Permutation &b) { return a.w_ < b.w_; }

 private:
  std::vector<int> w_;
};

std::vector<Permutation> enumerate_sn(int n);
int coxeter_length(const Permutation &w);
// strips the smallest right descent first, so the word reads left to right
std::vector<int> reduced_word(const Permutation &w);
Permutation from_word(int n, const std::vector<int> &word);
// position of w in enumerate_sn(n)
std::size_t lex_index(const Permutation &w);

}  // namespace hecke
