#include "keypoly/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace keypoly {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  for (std::size_t r = 1; r < rows_.size(); ++r)
    if (rows_[r].size() > rows_[r - 1].size()) throw std::invalid_argument("tableau rows must weakly shorten upward");
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (rows_[r].empty()) throw std::invalid_argument("empty row below a nonempty row");
}

Tableau Tableau::from_columns(const std::vector<std::vector<int>>& columns) {
  std::vector<std::vector<int>> rows;
  for (const auto& col : columns) {
    if (col.size() > rows.size()) rows.resize(col.size());
    for (std::size_t r = 0; r < col.size(); ++r) rows[r].push_back(col[r]);
  }
  return Tableau(std::move(rows));
}

int Tableau::size() const {
  int s = 0;
  for (const auto& r : rows_) s += static_cast<int>(r.size());
  return s;
}

Partition Tableau::shape() const {
  std::vector<int> p;
  for (const auto& r : rows_) p.push_back(static_cast<int>(r.size()));
  return Partition(std::move(p));
}

std::vector<int> Tableau::column(int j) const {
  std::vector<int> c;
  for (const auto& r : rows_)
    if (static_cast<int>(r.size()) > j) c.push_back(r[static_cast<std::size_t>(j)]);
  return c;
}

bool Tableau::is_semistandard() const {
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (rows_[r][c] < 1) return false;
      if (c && rows_[r][c - 1] > rows_[r][c]) return false;
      if (r && rows_[r - 1][c] >= rows_[r][c]) return false;
    }
  return true;
}

bool Tableau::is_key() const {
  if (!is_semistandard()) return false;
  for (int j = 1; j < num_columns(); ++j) {
    auto left = column(j - 1);
    for (int v : column(j))
      if (!std::binary_search(left.begin(), left.end(), v)) return false;
  }
  return true;
}

WeakComposition Tableau::weight(int n) const {
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  for (const auto& r : rows_)
    for (int v : r) {
      if (v < 1 || v > n) throw std::invalid_argument("tableau entry outside alphabet");
      ++w[static_cast<std::size_t>(v - 1)];
    }
  return WeakComposition(std::move(w));
}

int Tableau::max_entry() const {
  int m = 0;
  for (const auto& r : rows_)
    for (int v : r) m = std::max(m, v);
  return m;
}

std::string Tableau::to_string() const {
  std::string s;
  for (std::size_t r = rows_.size(); r-- > 0;) {
    s += word_to_string(rows_[r]);
    if (r) s += "/";
  }
  return s;
}

std::string Tableau::to_ascii() const {
  std::string s;
  for (std::size_t r = rows_.size(); r-- > 0;) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) s += ' ';
      s += std::to_string(rows_[r][c]);
    }
    s += '\n';
  }
  return s;
}

Tableau key_tableau(const WeakComposition& a) {
  int width = 0;
  for (int p : a.parts()) width = std::max(width, p);
  std::vector<std::vector<int>> cols(static_cast<std::size_t>(width));
  for (int j = 1; j <= width; ++j)
    for (int i = 1; i <= a.length(); ++i)
      if (a[i - 1] >= j) cols[static_cast<std::size_t>(j - 1)].push_back(i);
  return Tableau::from_columns(cols);
}

Tableau standardize(const Tableau& t) {
  std::vector<std::tuple<int, int, int>> cells;  // value, column, row
  for (int r = 0; r < t.num_rows(); ++r)
    for (int c = 0; c < static_cast<int>(t.rows()[static_cast<std::size_t>(r)].size()); ++c)
      cells.emplace_back(t.at(r, c), c, r);
  std::sort(cells.begin(), cells.end());
  auto rows = t.rows();
  int label = 1;
  for (auto [v, c, r] : cells) rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = label++;
  return Tableau(std::move(rows));
}

Word column_word(const Tableau& t) {
  Word w;
  for (int j = 0; j < t.num_columns(); ++j) {
    auto col = t.column(j);
    w.insert(w.end(), col.rbegin(), col.rend());
  }
  return w;
}

Word column_word_right(const Tableau& t) {
  Word w;
  for (int j = t.num_columns(); j-- > 0;) {
    auto col = t.column(j);
    w.insert(w.end(), col.rbegin(), col.rend());
  }
  return w;
}

Word row_word(const Tableau& t) {
  Word w;
  for (auto r = t.rows().rbegin(); r != t.rows().rend(); ++r) w.insert(w.end(), r->begin(), r->end());
  return w;
}

namespace {

void ssyt_rec(const std::vector<int>& shape, int n, std::size_t r, std::size_t c, std::vector<std::vector<int>>& rows,
              std::vector<Tableau>& out) {
  if (r == shape.size()) {
    out.emplace_back(rows);
    return;
  }
  if (c == static_cast<std::size_t>(shape[r])) {
    ssyt_rec(shape, n, r + 1, 0, rows, out);
    return;
  }
  int lo = 1;
  if (c) lo = std::max(lo, rows[r][c - 1]);
  if (r) lo = std::max(lo, rows[r - 1][c] + 1);
  for (int v = lo; v <= n; ++v) {
    rows[r][c] = v;
    ssyt_rec(shape, n, r, c + 1, rows, out);
  }
}

}  // namespace

std::vector<Tableau> semistandard_tableaux(const Partition& shape, int n) {
  std::vector<Tableau> out;
  if (shape.length() > n) return out;
  std::vector<std::vector<int>> rows;
  for (int p : shape.parts()) rows.emplace_back(static_cast<std::size_t>(p), 0);
  ssyt_rec(shape.parts(), n, 0, 0, rows, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace keypoly
