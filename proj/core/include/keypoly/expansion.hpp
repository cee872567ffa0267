#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "keypoly/basis.hpp"
#include "keypoly/compositions.hpp"
#include "keypoly/polynomial.hpp"

namespace keypoly {

class ExpansionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Expansion {
  BasisId basis = BasisId::Monomial;
  int n = 0;
  std::map<std::vector<int>, mpq_class> coeffs;  // nonzero entries only

  bool integral() const;
  bool nonnegative() const;
  // Sum of coefficient times basis element. Throws ExpansionError when a
  // coefficient is not an integer.
  Polynomial reconstruct() const;
  // "key(0,3,2) + 2*key(1,2,2)", or "0".
  std::string to_string() const;
  std::string to_json() const;
};

// Exact expansion of p in basis b, solved separately on each homogeneous
// component over every index of that degree. Throws ExpansionError("not in
// span") when p lies outside the span. Non-integral solutions are returned
// as rationals; check integral().
Expansion expand(const Polynomial& p, BasisId b, int n);

// key_a = sum of atom_b over b <= a.
Expansion key_to_atoms(const WeakComposition& a);

// s_lambda as the sum of QS_alpha, and of YQS_alpha, over compositions
// alpha with sort(alpha) = lambda and at most n parts.
std::pair<Expansion, Expansion> schur_decompositions(const Partition& lambda, int n);

}  // namespace keypoly
