#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "keypoly/compositions.hpp"
#include "keypoly/polynomial.hpp"
#include "keypoly/tableau.hpp"

namespace keypoly {

// Multiplicity of each basis index in an expansion.
using IndexCounts = std::map<WeakComposition, int>;

// Weakly increasing w with w_k <= b_k, and w_k < w_{k+1} whenever
// b_k < b_{k+1}. Sorted lexicographically.
std::vector<Word> compatible_sequences(std::span<const int> b);
// comp(w)_i = number of letters equal to i.
WeakComposition content(std::span<const int> w, int n);

// The entrywise largest compatible sequence, or nullopt if none exists.
std::optional<Word> max_compatible_sequence(std::span<const int> b);
// content of max_compatible_sequence(b).
std::optional<WeakComposition> maxcomp(std::span<const int> b, int n);

// Sum over b with rev(b) Knuth equivalent to col(key(a)) and over
// b-compatible w of x^{comp(w)}.
Polynomial key_via_compatible(const WeakComposition& a);
// Sum over c with f(c) Knuth equivalent to col(key(a)) and over
// c-compatible w of x^{comp(f(w))}.
Polynomial ykey_via_compatible(const WeakComposition& a);

// key_a = sum of fs_{maxcomp(b)} over rev(b) ~ col(key(a)).
IndexCounts key_to_fundamental_slides(const WeakComposition& a);
// ykey_a = sum of yfs_{rev(maxcomp(b))} over f(b) ~ col(key(a)).
IndexCounts ykey_to_young_fundamental_slides(const WeakComposition& a);

// Compatible sequences for 1^{a_1} 2^{a_2} ... whose letter at each distinct
// partial sum p_i equals the row of the i-th nonzero part of a.
std::vector<Word> flag_compatible_sequences(const WeakComposition& a);
Polynomial particle_via_flag(const WeakComposition& a);

// Row-frank words, stored as the full word u = u^(n) ... u^(1) together with
// the length of each piece.
struct RowFrankWord {
  Word word;
  std::vector<Word> pieces;  // pieces[i] is u^(i+1)
  std::string to_string() const;  // "33|222|" style, u^(n) first
  bool operator<(const RowFrankWord& o) const { return word < o.word; }
};
// W(a): |u^(i)| = a_i, pieces weakly increasing, letters of u^(i) at most i,
// and column insertion of u records std(key(a)).
std::vector<RowFrankWord> row_frank_words(const WeakComposition& a);
// YW(a): letters of u^(i) in [i, n], and column insertion of frev(u)
// records std(key(rev(a))).
std::vector<RowFrankWord> young_row_frank_words(const WeakComposition& a);
Polynomial key_via_row_frank(const WeakComposition& a);
Polynomial ykey_via_row_frank(const WeakComposition& a);

// Sums over SSYT of shape sort(a) selected by right or left keys.
Polynomial key_via_right_keys(const WeakComposition& a);   // K+(T) <= key(a)
Polynomial atom_via_right_keys(const WeakComposition& a);  // K+(T) = key(a)
Polynomial ykey_via_left_keys(const WeakComposition& a);   // K-(T) >= key(a)
Polynomial yatom_via_left_keys(const WeakComposition& a);  // K-(T) = key(a)

// Entrywise comparison of two tableaux of the same shape.
bool entrywise_leq(const Tableau& s, const Tableau& t);

}  // namespace keypoly
