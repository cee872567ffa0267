#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "keypoly/compositions.hpp"
#include "keypoly/polynomial.hpp"
#include "keypoly/tableau.hpp"

namespace keypoly {

// Tableau families. Reverse families have weakly decreasing rows and use
// type A/B triples; Young families have weakly increasing rows and use
// type I/II triples.
enum class Family {
  RCT,    // reverse composition tableaux: qs
  YCT,    // Young composition tableaux: yqs
  FCT,    // fundamental composition tableaux: F
  MCT,    // monomial composition tableaux: M
  YFCT,   // Young fundamental composition tableaux: F
  YMCT,   // Young monomial composition tableaux: M
  KSSF,   // key fillings: key
  YKSSF,  // Young key fillings: ykey
  ASSF,   // atom fillings: atom
  YASSF,  // Young atom fillings: yatom
  QF,     // quasi-key fillings: qk
  YQF,    // Young quasi-key fillings: yqk
  FF,     // fundamental fillings: fs
  YFF,    // Young fundamental fillings: yfs
  MF,     // monomial fillings: ms
  YMF,    // Young monomial fillings: yms
  LF,     // particle fillings: fp
  YLF,    // Young particle fillings: yfp
};

const std::vector<Family>& all_families();
std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);
bool is_young(Family f);
// Indexed by a composition (all parts positive) rather than a weak composition.
bool is_composition_family(Family f);
bool has_basement(Family f);
// The family related to f by theta (reverse <-> Young).
Family young_partner(Family f);

enum class TripleKind { A, B, I, II };

// Boxes (z, x) adjacent in one row and y in another, as in the triple
// pictures. Reverse kinds: inversion iff not z >= y >= x. Young kinds:
// inversion iff not x >= y >= z.
bool is_inversion_triple(TripleKind kind, int x, int y, int z);

struct Filling {
  // rows[0] is row 1 (bottom); rows[i].size() is the diagram row length.
  std::vector<std::vector<int>> rows;
  // Empty, or one basement entry per row.
  std::vector<int> basement;

  std::vector<int> shape() const;
  int num_boxes() const;
  WeakComposition weight(int n) const;
  // Rows left to right, top row first; basement excluded.
  Word reading_word() const;
  std::string to_ascii() const;
  std::string to_json() const;
  static Filling from_json(std::string_view json);

  auto operator<=>(const Filling&) const = default;
};

// Row lengths and basement for family f at index (a weak composition of
// length n, or a composition with at most n parts).
struct Diagram {
  std::vector<int> row_lengths;
  std::vector<int> basement;
};
Diagram family_diagram(Family f, const std::vector<int>& index, int n);

// Definitional membership test, checking every condition of the family.
bool is_member(Family f, const std::vector<int>& index, const Filling& t, int n);

// Backtracking enumeration with incremental pruning, sorted by reading word.
std::vector<Filling> enumerate_family(Family f, const std::vector<int>& index, int n);
// Generate-and-filter over all n^|D| fillings; reference oracle.
std::vector<Filling> enumerate_family_naive(Family f, const std::vector<int>& index, int n);

Polynomial generating_polynomial(Family f, const std::vector<int>& index, int n);

// Row i -> row (rows+1-i), entry j -> n+1-j, basement included.
Filling theta(const Filling& t, int n);

}  // namespace keypoly
