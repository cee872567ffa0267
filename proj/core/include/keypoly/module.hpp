#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "keypoly/compositions.hpp"
#include "keypoly/fillings.hpp"
#include "keypoly/polynomial.hpp"

namespace keypoly {

// Formal integer combination of fillings of one diagram (row i has
// row_lengths[i-1] boxes starting in column 1) with entries in 1..n.
struct FormalFillingVector {
  std::vector<int> row_lengths;
  int n = 0;
  std::map<Filling, mpz_class> terms;  // nonzero coefficients only

  // Weights of the fillings in the support, deduplicated.
  std::vector<WeakComposition> weights() const;
  std::string to_string() const;
};

// Guard on n^|D| for module computations.
inline constexpr long long kModuleSizeLimit = 1'000'000;

// e_T = sum over row permutations alpha and column permutations beta of
// sgn(beta) T alpha beta. Arrangements with a repeated entry in a column
// cancel and are skipped.
FormalFillingVector e_vector(const Filling& t, int n);

// T(u) places u^(j) in row j, for u in YW(a).
std::vector<Filling> ykeymodule_fillings(const WeakComposition& a);
// {e_T(u) : u in YW(a)}.
std::vector<FormalFillingVector> ykeymodule_basis(const WeakComposition& a);
// Exact rank of a set of formal vectors.
int module_rank(const std::vector<FormalFillingVector>& vs);
// Rank of the span of e_T over all fillings of D(a) whose row-i entries are
// at least i; the dimension of the Young key module.
int ykeymodule_dimension(const WeakComposition& a);
// Sum of the weights of the basis vectors.
Polynomial module_trace(const WeakComposition& a);

}  // namespace keypoly
