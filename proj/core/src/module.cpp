#include "keypoly/module.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "keypoly/generators.hpp"
#include "keypoly/linalg.hpp"

namespace keypoly {

namespace {

void check_size(const std::vector<int>& row_lengths, int n) {
  long long boxes = 0;
  for (int r : row_lengths) boxes += r;
  long long total = 1;
  for (long long k = 0; k < boxes; ++k) {
    total *= n;
    if (total > kModuleSizeLimit) throw std::invalid_argument("module too large: n^|D| exceeds 1000000");
  }
}

std::vector<int> row_lengths_of(const Filling& t) {
  std::vector<int> r;
  for (const auto& row : t.rows) r.push_back(static_cast<int>(row.size()));
  return r;
}

long long factorial(int k) {
  long long f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Distinct orderings of a row; every ordering is hit by the same number of
// row-group elements, the product of the multiplicity factorials.
std::vector<std::vector<int>> orderings(std::vector<int> row, long long& mult) {
  std::sort(row.begin(), row.end());
  mult = 1;
  for (std::size_t i = 0; i < row.size();) {
    std::size_t j = i;
    while (j < row.size() && row[j] == row[i]) ++j;
    mult *= factorial(static_cast<int>(j - i));
    i = j;
  }
  std::vector<std::vector<int>> out;
  do out.push_back(row);
  while (std::next_permutation(row.begin(), row.end()));
  return out;
}

int sign_of(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

// Signed sum over the column group applied to s, all columns distinct.
void add_column_orbit(const Filling& s, const mpz_class& coeff, std::map<Filling, mpz_class>& acc) {
  std::size_t width = 0;
  for (const auto& row : s.rows) width = std::max(width, row.size());
  // Boxes of each column as row indices, bottom first.
  std::vector<std::vector<std::size_t>> cols(width);
  for (std::size_t r = 0; r < s.rows.size(); ++r)
    for (std::size_t c = 0; c < s.rows[r].size(); ++c) cols[c].push_back(r);

  Filling cur = s;
  auto rec = [&](auto&& self, std::size_t c, int sign) -> void {
    if (c == width) {
      acc[cur] += coeff * sign;
      return;
    }
    std::vector<int> idx(cols[c].size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = static_cast<int>(k);
    do {
      for (std::size_t k = 0; k < idx.size(); ++k)
        cur.rows[cols[c][k]][c] = s.rows[cols[c][static_cast<std::size_t>(idx[k])]][c];
      self(self, c + 1, sign * sign_of(idx));
    } while (std::next_permutation(idx.begin(), idx.end()));
    for (std::size_t k = 0; k < idx.size(); ++k) cur.rows[cols[c][k]][c] = s.rows[cols[c][k]][c];
  };
  rec(rec, 0, 1);
}

bool columns_distinct(const Filling& s) {
  std::size_t width = 0;
  for (const auto& row : s.rows) width = std::max(width, row.size());
  for (std::size_t c = 0; c < width; ++c) {
    std::set<int> seen;
    for (const auto& row : s.rows)
      if (c < row.size() && !seen.insert(row[c]).second) return false;
  }
  return true;
}

}  // namespace

std::vector<WeakComposition> FormalFillingVector::weights() const {
  std::set<WeakComposition> w;
  for (const auto& [t, c] : terms) w.insert(t.weight(n));
  return {w.begin(), w.end()};
}

std::string FormalFillingVector::to_string() const {
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [t, c] : terms) {
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    mpz_class a = abs(c);
    if (a != 1) s += a.get_str() + "*";
    std::string rows;
    for (std::size_t r = t.rows.size(); r-- > 0;) {
      rows += join_ints(t.rows[r], "");
      if (r) rows += "/";
    }
    s += "[" + rows + "]";
    first = false;
  }
  return s;
}

FormalFillingVector e_vector(const Filling& t, int n) {
  if (!t.basement.empty()) throw std::invalid_argument("module fillings carry no basement");
  FormalFillingVector v;
  v.row_lengths = row_lengths_of(t);
  v.n = n;
  check_size(v.row_lengths, n);
  for (const auto& row : t.rows)
    for (int x : row)
      if (x < 1 || x > n) throw std::invalid_argument("filling entry outside 1..n");

  std::vector<std::vector<std::vector<int>>> choices;
  long long mult = 1;
  for (const auto& row : t.rows) {
    long long m = 1;
    choices.push_back(orderings(row, m));
    mult *= m;
  }
  Filling s = t;
  auto rec = [&](auto&& self, std::size_t r) -> void {
    if (r == t.rows.size()) {
      if (columns_distinct(s)) add_column_orbit(s, mpz_class(static_cast<long>(mult)), v.terms);
      return;
    }
    for (const auto& ord : choices[r]) {
      s.rows[r] = ord;
      self(self, r + 1);
    }
  };
  rec(rec, 0);
  for (auto it = v.terms.begin(); it != v.terms.end();)
    it = it->second == 0 ? v.terms.erase(it) : std::next(it);
  return v;
}

std::vector<Filling> ykeymodule_fillings(const WeakComposition& a) {
  std::vector<Filling> out;
  for (const auto& u : young_row_frank_words(a)) {
    Filling t;
    for (const auto& piece : u.pieces) {
      std::vector<int> row = piece;
      std::sort(row.begin(), row.end());
      t.rows.push_back(std::move(row));
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<FormalFillingVector> ykeymodule_basis(const WeakComposition& a) {
  check_size(a.parts(), a.length());
  std::vector<FormalFillingVector> out;
  for (const auto& t : ykeymodule_fillings(a)) out.push_back(e_vector(t, a.length()));
  return out;
}

int module_rank(const std::vector<FormalFillingVector>& vs) {
  std::set<Filling> support;
  for (const auto& v : vs)
    for (const auto& [t, c] : v.terms) support.insert(t);
  // Rows are basis vectors, columns are fillings.
  IntMatrix m;
  for (const auto& v : vs) {
    std::vector<mpz_class> row;
    row.reserve(support.size());
    for (const auto& t : support) {
      auto it = v.terms.find(t);
      row.push_back(it == v.terms.end() ? mpz_class(0) : it->second);
    }
    m.push_back(std::move(row));
  }
  return rank(std::move(m));
}

int ykeymodule_dimension(const WeakComposition& a) {
  const int n = a.length();
  check_size(a.parts(), n);
  std::vector<FormalFillingVector> all;
  Filling t;
  for (int len : a.parts()) t.rows.emplace_back(static_cast<std::size_t>(len), 0);
  auto rec = [&](auto&& self, std::size_t r, std::size_t c) -> void {
    if (r == t.rows.size()) {
      auto v = e_vector(t, n);
      if (!v.terms.empty()) all.push_back(std::move(v));
      return;
    }
    if (c == t.rows[r].size()) {
      self(self, r + 1, 0);
      return;
    }
    // Rows are symmetrized by e_T, so weakly increasing rows suffice.
    int lo = std::max(static_cast<int>(r) + 1, c ? t.rows[r][c - 1] : 1);
    for (int x = lo; x <= n; ++x) {
      t.rows[r][c] = x;
      self(self, r, c + 1);
    }
  };
  rec(rec, 0, 0);
  return module_rank(all);
}

Polynomial module_trace(const WeakComposition& a) {
  Polynomial p(a.length());
  for (const auto& v : ykeymodule_basis(a)) {
    auto w = v.weights();
    if (w.size() != 1) throw std::logic_error("basis vector is not a weight vector");
    p.add_term(w.front().parts(), 1);
  }
  return p;
}

}  // namespace keypoly
