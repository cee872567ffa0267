#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "keypoly/compositions.hpp"

namespace keypoly {

// Permutation of {1..n} in one-line notation. Products compose as functions,
// (u * v)(i) = u(v(i)), so w * s_i swaps the entries in positions i and i+1.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  static Permutation longest(int n);
  static Permutation simple(int n, int i);
  // s_{w[0]} s_{w[1]} ... s_{w[k-1]}; the word need not be reduced.
  static Permutation from_word(int n, std::span<const int> word);
  // Accepts "21534" (n <= 9) or "2,1,5,3,4".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(w_.size()); }
  // Value at 1-based position i.
  int operator()(int i) const { return w_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& one_line() const { return w_; }

  int length() const;
  Permutation inverse() const;
  Permutation operator*(const Permutation& other) const;
  Permutation times_simple(int i) const;
  // Descent positions i (1-based) with w(i) > w(i+1).
  std::vector<int> descents() const;
  // Lexicographically smallest reduced word.
  std::vector<int> reduced_word() const;
  std::vector<std::vector<int>> all_reduced_words() const;

  // w w0: one-line notation reversed.
  Permutation rev() const;
  // w0 w w0.
  Permutation frev() const;

  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> w_;
};

bool is_reduced_word(int n, std::span<const int> word);

// L(w)_i = #{j > i : w_i > w_j}.
WeakComposition lehmer_code(const Permutation& w);
// #{j < i : w_i > w_j}.
WeakComposition young_lehmer_code(const Permutation& w);

bool bruhat_leq(const Permutation& u, const Permutation& v);

std::vector<Permutation> all_permutations(int n);

// Reduced words for the shortest w with a w = sort(a) (to_sort) and with
// a w = revsort(a) (to_revsort). A word [i1,...,ik] denotes s_{i1}...s_{ik}.
struct SortingPermutations {
  std::vector<int> to_sort_word;
  Permutation to_sort;
  std::vector<int> to_revsort_word;
  Permutation to_revsort;
};
SortingPermutations sorting_permutations(const WeakComposition& a);

// Bruhat order on the orbit of sort(a): b <= a iff sort(b) = sort(a) and the
// minimal sorting permutation of b is below that of a.
bool wc_leq(const WeakComposition& b, const WeakComposition& a);

// Distinct rearrangements of a, in decreasing lex order.
std::vector<WeakComposition> rearrangements(const WeakComposition& a);

}  // namespace keypoly
