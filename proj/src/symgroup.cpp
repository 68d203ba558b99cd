#include "hecke/symgroup.hpp"

#include <algorithm>
#include <numeric>

#include "hecke/exact.hpp"

namespace hecke {

Permutation::Permutation(std::vector<int> images) : w_(std::move(images)) {
  std::vector<bool> seen(w_.size() + 1, false);
  for (int x : w_) {
    if (x < 1 || x > size() || seen[x]) throw MathError("not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(w);
}

Permutation Permutation::simple(int n, int i) { return transposition(n, i, i + 1); }

Permutation Permutation::transposition(int n, int i, int j) {
  auto w = identity(n).w_;
  std::swap(w.at(i - 1), w.at(j - 1));
  return Permutation(w);
}

Permutation Permutation::cycle(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = (i + 1) % n + 1;
  return Permutation(w);
}

Permutation Permutation::inverse() const {
  std::vector<int> r(w_.size());
  for (int i = 0; i < size(); ++i) r[w_[i] - 1] = i + 1;
  return Permutation(r);
}

Permutation operator*(const Permutation &a, const Permutation &b) {
  if (a.size() != b.size()) throw MathError("composing permutations of different degree");
  std::vector<int> r(a.w_.size());
  for (int i = 0; i < a.size(); ++i) r[i] = a.w_[b.w_[i] - 1];
  return Permutation(r);
}

std::vector<Permutation> enumerate_sn(int n) {
  if (n < 1 || n > 8) throw MathError("n out of supported range");
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

int coxeter_length(const Permutation &w) {
  int inv = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(i) > w(j)) ++inv;
  return inv;
}

std::vector<int> reduced_word(const Permutation &w0) {
  std::vector<int> word;
  auto w = w0.images();
  int n = w0.size();
  while (true) {
    int i = 1;
    while (i < n && w[i - 1] < w[i]) ++i;
    if (i == n) break;
    // w = w' s_i with l(w') = l(w) - 1
    std::swap(w[i - 1], w[i]);
    word.push_back(i);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

Permutation from_word(int n, const std::vector<int> &word) {
  Permutation p = Permutation::identity(n);
  for (int i : word) p = p * Permutation::simple(n, i);
  return p;
}

std::size_t lex_index(const Permutation &w) {
  int n = w.size();
  std::size_t idx = 0, fact = 1;
  for (int k = 1; k < n; ++k) fact *= k;
  std::vector<bool> used(n + 1, false);
  for (int i = 1; i <= n; ++i) {
    int smaller = 0;
    for (int v = 1; v < w(i); ++v)
      if (!used[v]) ++smaller;
    idx += smaller * fact;
    used[w(i)] = true;
    if (n - i > 0) fact /= (n - i);
  }
  return idx;
}

}  // namespace hecke
