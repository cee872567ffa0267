#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "keypoly/compositions.hpp"
#include "keypoly/fillings.hpp"
#include "keypoly/polynomial.hpp"

namespace keypoly {

enum class BasisId {
  Key, YKey, Atom, YAtom, QKey, YQKey, FSlide, YFSlide, MSlide, YMSlide,
  Particle, YParticle, Monomial, Schur, F, M, QS, YQS,
};

const std::vector<BasisId>& all_bases();
std::string_view basis_name(BasisId b);
std::optional<BasisId> parse_basis(std::string_view name);
// The filling family generating b, if any (monomial and schur have none).
std::optional<Family> basis_family(BasisId b);
// Indexed by compositions (F, M, QS, YQS) or partitions (schur).
bool is_symmetric_index(BasisId b);

// Indices of degree d for n variables: weak compositions of length n,
// compositions with at most n parts, or partitions with at most n parts.
std::vector<std::vector<int>> basis_indices(BasisId b, int n, int degree);

// s_lambda(x_1..x_n) as the generating function of SSYT_n(lambda).
Polynomial schur_polynomial(const Partition& lambda, int n);

// The basis element at index; memoized.
const Polynomial& basis_polynomial(BasisId b, const std::vector<int>& index, int n);

}  // namespace keypoly
