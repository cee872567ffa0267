#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "keypoly/compositions.hpp"
#include "keypoly/permutation.hpp"
#include "keypoly/polynomial.hpp"
#include "keypoly/tableau.hpp"

namespace keypoly {

// Kashiwara operators on words by the bracket rule: each i+1 opens and each
// i closes; f_i raises the rightmost unmatched i, e_i lowers the leftmost
// unmatched i+1.
std::optional<Word> crystal_f(int i, std::span<const int> word);
std::optional<Word> crystal_e(int i, std::span<const int> word);

struct CrystalEdge {
  int from;
  int to;
  int color;
  auto operator<=>(const CrystalEdge&) const = default;
};

// Vertices with labels and weights, and f_i edges between them.
struct CrystalGraph {
  int n = 0;
  std::vector<std::string> labels;
  std::vector<WeakComposition> weights;
  std::vector<CrystalEdge> edges;

  Polynomial character() const;
  std::string to_dot(const std::string& name = "crystal") const;
  std::string to_json() const;
};

// B(lambda) on SSYT_n(lambda), operators acting through the column word.
class TableauCrystal {
 public:
  TableauCrystal(Partition shape, int n);

  const Partition& shape() const { return shape_; }
  int n() const { return n_; }
  const std::vector<Tableau>& vertices() const { return vertices_; }

  std::optional<Tableau> f(int i, const Tableau& t) const;
  std::optional<Tableau> e(int i, const Tableau& t) const;
  // Row i holds only the letter i.
  Tableau highest_weight() const;
  // Column of height h holds n-h+1..n.
  Tableau lowest_weight() const;

  CrystalGraph graph() const;
  CrystalGraph subgraph(const std::vector<Tableau>& subset) const;

  // D_{i1} ... D_{ik} {highest}, with D_i X = {b : e_i^r b in X for some r}.
  std::vector<Tableau> demazure_from_highest(std::span<const int> reduced_word) const;
  // Same with f_i, starting from the lowest weight element.
  std::vector<Tableau> demazure_from_lowest(std::span<const int> reduced_word) const;

 private:
  Tableau rebuild(const Tableau& shape_of, const Word& column_word) const;
  Partition shape_;
  int n_;
  std::vector<Tableau> vertices_;
};

CrystalGraph build_crystal(const Partition& shape, int n);
// Demazure crystal whose character is key_a (a w = sort(a) for the word).
CrystalGraph demazure_from_highest(const Partition& shape, int n, std::span<const int> reduced_word);
// Demazure crystal whose character is ykey_a (a w = revsort(a)).
CrystalGraph demazure_from_lowest(const Partition& shape, int n, std::span<const int> reduced_word);
CrystalGraph key_crystal(const WeakComposition& a);
CrystalGraph young_key_crystal(const WeakComposition& a);

// Blocks of a reduced word, each strictly decreasing.
struct ReducedFactorization {
  std::vector<std::vector<int>> blocks;

  // (0,...,0,|r^l|,...,|r^1|) with r^1 the leftmost block.
  WeakComposition weight(int n) const;
  std::string to_string() const;  // "(41)()(3)"
  auto operator<=>(const ReducedFactorization&) const = default;
};

// Position of the rightmost descent of w, 0 for the identity.
int rightmost_descent(const Permutation& w);
std::vector<ReducedFactorization> enumerate_rf(const Permutation& w, int ell);
// Factorizations in RF^l(w), l the rightmost descent, whose i-th block has
// all entries at least i.
std::vector<ReducedFactorization> rfyc(const Permutation& w);
// Sum over RFYC(rev(w)) of x^{wt(r)}.
Polynomial ysch_via_rfyc(const Permutation& w);
// Vertex-only graph on a set of reduced factorizations.
CrystalGraph factorization_graph(const std::vector<ReducedFactorization>& rf, int n);

}  // namespace keypoly
