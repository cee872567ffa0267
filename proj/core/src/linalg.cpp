#include "keypoly/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace keypoly {

namespace {

// Bareiss forward elimination in place. Returns the pivot column of each
// pivot row, in order. Entries below and left of pivots become zero.
std::vector<std::size_t> bareiss(IntMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      for (std::size_t j = c + 1; j < m[i].size(); ++j) {
        mpz_class v = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(v);
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(IntMatrix m) {
  if (m.empty()) return 0;
  std::size_t cols = m.front().size();
  for (const auto& row : m)
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");
  return static_cast<int>(bareiss(m, cols).size());
}

SolveResult solve(const IntMatrix& a, const std::vector<mpz_class>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("right-hand side length differs from row count");
  std::size_t cols = a.empty() ? 0 : a.front().size();
  IntMatrix m = a;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != cols) throw std::invalid_argument("ragged matrix");
    m[i].push_back(b[i]);
  }
  auto pivots = bareiss(m, cols + 1);
  SolveResult res;
  if (!pivots.empty() && pivots.back() == cols) {
    res.status = SolveStatus::NotInSpan;
    return res;
  }
  if (pivots.size() < cols) {
    res.status = SolveStatus::NotUnique;
    return res;
  }
  // Square upper-triangular system on the first cols rows.
  res.x.assign(cols, mpq_class(0));
  for (std::size_t k = cols; k-- > 0;) {
    mpq_class acc = m[k][cols];
    for (std::size_t j = k + 1; j < cols; ++j) acc -= mpq_class(m[k][j]) * res.x[j];
    res.x[k] = acc / mpq_class(m[k][k]);
    res.x[k].canonicalize();
  }
  return res;
}

}  // namespace keypoly
