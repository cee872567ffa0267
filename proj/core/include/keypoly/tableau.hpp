#pragma once

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "keypoly/compositions.hpp"

namespace keypoly {

using Word = std::vector<int>;

// Tableau in French notation: rows()[0] is the bottom row. Rows are left
// justified and must have weakly decreasing lengths going up.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows);
  static Tableau from_columns(const std::vector<std::vector<int>>& columns);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int num_columns() const { return rows_.empty() ? 0 : static_cast<int>(rows_.front().size()); }
  int size() const;
  int at(int row, int col) const { return rows_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]; }
  Partition shape() const;
  // Entries of column j (0-based), bottom to top.
  std::vector<int> column(int j) const;

  // Rows weakly increase left to right, columns strictly increase upward.
  bool is_semistandard() const;
  // Semistandard, and every column is contained in the column to its left.
  bool is_key() const;
  WeakComposition weight(int n) const;
  int max_entry() const;

  // Rows listed top first, separated by '/', e.g. "23/122".
  std::string to_string() const;
  std::string to_ascii() const;

  auto operator<=>(const Tableau&) const = default;

 private:
  std::vector<std::vector<int>> rows_;
};

// The unique key of weight a: column j holds {i : a_i >= j}.
Tableau key_tableau(const WeakComposition& a);
// Standardization: equal entries are numbered left to right.
Tableau standardize(const Tableau& t);

// Columns read top to bottom, columns taken left to right.
Word column_word(const Tableau& t);
// Columns read top to bottom, columns taken right to left.
Word column_word_right(const Tableau& t);
// Rows read left to right, top row first.
Word row_word(const Tableau& t);

std::vector<Tableau> semistandard_tableaux(const Partition& shape, int n);

// Row insertion of the word read left to right.
Tableau schensted_insert(std::span<const int> word);
// Insertion and recording tableaux for row insertion.
std::pair<Tableau, Tableau> rsk(std::span<const int> word);
// Column insertion of the letters read right to left: each letter enters the
// first column, displacing the smallest entry >= it, which moves on to the
// next column. Returns (insertion, recording). The insertion tableau agrees
// with schensted_insert.
std::pair<Tableau, Tableau> column_insert(std::span<const int> word);

// All words reachable by elementary Knuth moves, sorted.
std::vector<Word> knuth_class(std::span<const int> word);
// Lengths of the maximal strictly decreasing runs (a new run starts at every
// weak ascent).
std::vector<int> colform(std::span<const int> word);
std::vector<Word> column_factors(std::span<const int> word);
// colform(word) rearranges the column lengths of the shape of P(word).
bool is_column_frank(std::span<const int> word);

Tableau right_key(const Tableau& t);
Tableau left_key(const Tableau& t);

// f(w): i -> n+1-i letterwise.
Word flip_word(std::span<const int> word, int n);
// Reverse and flip.
Word frev_word(std::span<const int> word, int n);
// Key whose columns are the flips of the columns of k.
Tableau frev_key(const Tableau& k, int n);

std::string word_to_string(std::span<const int> word);

}  // namespace keypoly
