#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "keypoly/permutation.hpp"
#include "keypoly/polynomial.hpp"

namespace keypoly {

// Crosses inside the staircase {(i, j) : i + j <= n}, rows numbered 1..n
// from the bottom, columns 1..n from the left. Every other tile is an elbow.
struct PipeDream {
  int n = 0;
  std::vector<std::pair<int, int>> crosses;  // sorted (row, column)
  // Young labelling: row i counts toward x_{n+1-i}.
  bool young = false;

  bool has_cross(int row, int col) const;
  // Follows each pipe from the row-i edge to its column exit. Returns nullopt
  // if some pair of pipes crosses twice.
  std::optional<Permutation> trace() const;
  // Crosses per row, row 1 first; with the Young labelling the top row
  // counts first.
  WeakComposition weight() const;
  std::string to_ascii() const;
  std::string to_json() const;

  auto operator<=>(const PipeDream&) const = default;
};

// Reduced pipe dreams of w, found by placing crosses in reading order and
// keeping only placements that extend a reduced prefix of w.
std::vector<PipeDream> enumerate_pd(const Permutation& w);
// Every subset of the staircase, kept when tracing gives w; reference oracle.
std::vector<PipeDream> enumerate_pd_naive(const Permutation& w);
Polynomial schubert_pd(const Permutation& w);

// PD(rev(w)) with the Young labelling.
std::vector<PipeDream> enumerate_ypd(const Permutation& w);
Polynomial yschubert_pd(const Permutation& w);

// Avoids the pattern 2143.
bool is_vexillary(const Permutation& w);
// sch_w = key_{L(w)} by pipe dreams against both the operator and the
// filling construction of the key polynomial.
bool vexillary_identity_check(const Permutation& w);

}  // namespace keypoly
