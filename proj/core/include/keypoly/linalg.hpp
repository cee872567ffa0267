#pragma once

#include <gmpxx.h>

#include <vector>

namespace keypoly {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Rank over Q by fraction-free (Bareiss) elimination.
int rank(IntMatrix m);

enum class SolveStatus { Unique, NotInSpan, NotUnique };

struct SolveResult {
  SolveStatus status = SolveStatus::Unique;
  std::vector<mpq_class> x;  // filled when status is Unique
};

// Solves A x = b exactly. A is rows x cols; b has one entry per row.
SolveResult solve(const IntMatrix& a, const std::vector<mpz_class>& b);

}  // namespace keypoly
