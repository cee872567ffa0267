#include "keypoly/fillings.hpp"

#include <algorithm>
#include <array>
#include <json.hpp>
#include <stdexcept>

namespace keypoly {

namespace {

enum class Order { Decreasing, Increasing };
enum class Triples { None, Reverse, Young };
enum class Bound { None, AtMostRow, AtLeastRow };

struct Rules {
  Order order;
  Triples triples;
  Bound bound = Bound::None;
  bool basement = false;
  bool first_column_strict = false;
  bool distinct_columns = false;
  bool first_equals_row = false;
  bool separated_rows = false;
  bool constant_rows = false;
  bool composition = false;
};

struct FamilyEntry {
  Family family;
  std::string_view name;
  Family partner;
  Rules rules;
};

constexpr Order kDec = Order::Decreasing;
constexpr Order kInc = Order::Increasing;

const std::array<FamilyEntry, 18>& table() {
  static const std::array<FamilyEntry, 18> t = {{
      {Family::RCT, "RCT", Family::YCT, {kDec, Triples::Reverse, Bound::None, false, true, false, false, false, false, true}},
      {Family::YCT, "YCT", Family::RCT, {kInc, Triples::Young, Bound::None, false, true, false, false, false, false, true}},
      {Family::FCT, "FCT", Family::YFCT, {kDec, Triples::None, Bound::None, false, false, false, false, true, false, true}},
      {Family::MCT, "MCT", Family::YMCT, {kDec, Triples::None, Bound::None, false, false, false, false, true, true, true}},
      {Family::YFCT, "YFCT", Family::FCT, {kInc, Triples::None, Bound::None, false, false, false, false, true, false, true}},
      {Family::YMCT, "YMCT", Family::MCT, {kInc, Triples::None, Bound::None, false, false, false, false, true, true, true}},
      {Family::KSSF, "KSSF", Family::YKSSF, {kDec, Triples::Reverse, Bound::None, true, false, true, false, false, false, false}},
      {Family::YKSSF, "YKSSF", Family::KSSF, {kInc, Triples::Young, Bound::None, true, false, true, false, false, false, false}},
      {Family::ASSF, "ASSF", Family::YASSF, {kDec, Triples::Reverse, Bound::None, false, false, true, true, false, false, false}},
      {Family::YASSF, "YASSF", Family::ASSF, {kInc, Triples::Young, Bound::None, false, false, true, true, false, false, false}},
      {Family::QF, "QF", Family::YQF, {kDec, Triples::Reverse, Bound::AtMostRow, false, true, true, false, false, false, false}},
      {Family::YQF, "YQF", Family::QF, {kInc, Triples::Young, Bound::AtLeastRow, false, true, true, false, false, false, false}},
      {Family::FF, "FF", Family::YFF, {kDec, Triples::None, Bound::AtMostRow, false, false, false, false, true, false, false}},
      {Family::YFF, "YFF", Family::FF, {kInc, Triples::None, Bound::AtLeastRow, false, false, false, false, true, false, false}},
      {Family::MF, "MF", Family::YMF, {kDec, Triples::None, Bound::AtMostRow, false, false, false, false, true, true, false}},
      {Family::YMF, "YMF", Family::MF, {kInc, Triples::None, Bound::AtLeastRow, false, false, false, false, true, true, false}},
      {Family::LF, "LF", Family::YLF, {kDec, Triples::Reverse, Bound::None, false, false, true, true, true, false, false}},
      {Family::YLF, "YLF", Family::LF, {kInc, Triples::Young, Bound::None, false, false, true, true, true, false, false}},
  }};
  return t;
}

const FamilyEntry& entry(Family f) {
  for (const auto& e : table())
    if (e.family == f) return e;
  throw std::logic_error("unknown family");
}

// Filling under construction; 0 marks an empty box.
struct Grid {
  const std::vector<int>& lengths;
  const std::vector<int>& basement;
  const std::vector<std::vector<int>>& rows;

  int num_rows() const { return static_cast<int>(lengths.size()); }
  // Column 0 is the basement when present; boxes occupy columns 1..length.
  bool exists(int r, int c) const {
    if (c == 0) return !basement.empty();
    return c >= 1 && c <= lengths[static_cast<std::size_t>(r)];
  }
  int at(int r, int c) const {
    if (c == 0) return basement[static_cast<std::size_t>(r)];
    return rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)];
  }
};

// Checks every condition whose boxes are all filled. With partial == false
// every box must be filled.
bool satisfies(const Rules& R, const Grid& g, int n) {
  const int nr = g.num_rows();
  auto row_len = [&](int r) { return g.lengths[static_cast<std::size_t>(r)]; };
  auto known = [&](int r, int c) { return g.exists(r, c) && g.at(r, c) != 0; };

  for (int r = 0; r < nr; ++r) {
    const int row_index = r + 1;
    for (int c = 1; c <= row_len(r); ++c) {
      if (!known(r, c)) continue;
      int v = g.at(r, c);
      if (v < 1 || v > n) return false;
      if (R.bound == Bound::AtMostRow && v > row_index) return false;
      if (R.bound == Bound::AtLeastRow && v < row_index) return false;
      if (R.first_equals_row && c == 1 && v != row_index) return false;
      if (c > 1 || R.basement) {
        int lc = c - 1;
        if (known(r, lc)) {
          int u = g.at(r, lc);
          if (R.order == Order::Decreasing && u < v) return false;
          if (R.order == Order::Increasing && u > v) return false;
          if (R.constant_rows && lc >= 1 && u != v) return false;
        }
      }
    }
  }

  const int width = *std::max_element(g.lengths.begin(), g.lengths.end());
  const int c0 = R.basement ? 0 : 1;

  if (R.distinct_columns) {
    for (int c = c0; c <= width; ++c)
      for (int r = 0; r < nr; ++r)
        for (int s = r + 1; s < nr; ++s)
          if (known(r, c) && known(s, c) && g.at(r, c) == g.at(s, c)) return false;
  }

  if (R.first_column_strict) {
    int prev = 0;
    for (int r = 0; r < nr; ++r) {
      if (!g.exists(r, 1)) continue;
      if (!known(r, 1)) {
        prev = 0;
        continue;
      }
      if (prev != 0 && g.at(r, 1) <= prev) return false;
      prev = g.at(r, 1);
    }
  }

  if (R.separated_rows) {
    for (int r = 0; r < nr; ++r)
      for (int s = r + 1; s < nr; ++s)
        for (int c = 1; c <= row_len(r); ++c)
          for (int d = 1; d <= row_len(s); ++d)
            if (known(r, c) && known(s, d) && g.at(r, c) >= g.at(s, d)) return false;
  }

  if (R.triples != Triples::None) {
    for (int i = 0; i < nr; ++i)
      for (int j = i + 1; j < nr; ++j) {
        const int li = row_len(i), lj = row_len(j);
        for (int c = c0; c < width; ++c) {
          // (row of z and x, row of y, column of y)
          int zr, yr, yc;
          TripleKind kind;
          if (R.triples == Triples::Reverse) {
            if (li >= lj) {
              kind = TripleKind::A, zr = i, yr = j, yc = c + 1;
            } else {
              kind = TripleKind::B, zr = j, yr = i, yc = c;
            }
          } else {
            if (lj >= li) {
              kind = TripleKind::I, zr = j, yr = i, yc = c + 1;
            } else {
              kind = TripleKind::II, zr = i, yr = j, yc = c;
            }
          }
          if (!g.exists(zr, c) || !g.exists(zr, c + 1) || !g.exists(yr, yc)) continue;
          if (!known(zr, c) || !known(zr, c + 1) || !known(yr, yc)) continue;
          if (!is_inversion_triple(kind, g.at(zr, c + 1), g.at(yr, yc), g.at(zr, c))) return false;
        }
      }
  }
  return true;
}

void check_index(Family f, const std::vector<int>& index, int n) {
  if (n < 0) throw std::invalid_argument("negative variable count");
  if (entry(f).rules.composition) {
    Composition alpha(index);
    if (alpha.length() > n) throw std::invalid_argument("composition has more parts than variables");
  } else {
    WeakComposition a(index);
    if (a.length() != n) throw std::invalid_argument("weak composition length must equal the variable count");
  }
}

}  // namespace

const std::vector<Family>& all_families() {
  static const std::vector<Family> all = [] {
    std::vector<Family> v;
    for (const auto& e : table()) v.push_back(e.family);
    return v;
  }();
  return all;
}

std::string_view family_name(Family f) { return entry(f).name; }

std::optional<Family> parse_family(std::string_view name) {
  std::string up;
  for (char c : name) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  for (const auto& e : table())
    if (e.name == up) return e.family;
  return std::nullopt;
}

bool is_young(Family f) { return entry(f).rules.order == Order::Increasing; }
bool is_composition_family(Family f) { return entry(f).rules.composition; }
bool has_basement(Family f) { return entry(f).rules.basement; }
Family young_partner(Family f) { return entry(f).partner; }

bool is_inversion_triple(TripleKind kind, int x, int y, int z) {
  if (kind == TripleKind::A || kind == TripleKind::B) return !(z >= y && y >= x);
  return !(x >= y && y >= z);
}

std::vector<int> Filling::shape() const {
  std::vector<int> s;
  for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
  return s;
}

int Filling::num_boxes() const {
  int s = 0;
  for (const auto& r : rows) s += static_cast<int>(r.size());
  return s;
}

WeakComposition Filling::weight(int n) const {
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  for (const auto& r : rows)
    for (int v : r) {
      if (v < 1 || v > n) throw std::invalid_argument("filling entry outside alphabet");
      ++w[static_cast<std::size_t>(v - 1)];
    }
  return WeakComposition(std::move(w));
}

Word Filling::reading_word() const {
  Word w;
  for (auto r = rows.rbegin(); r != rows.rend(); ++r) w.insert(w.end(), r->begin(), r->end());
  return w;
}

std::string Filling::to_ascii() const {
  std::string s;
  for (std::size_t r = rows.size(); r-- > 0;) {
    std::string line;
    if (!basement.empty()) line += std::to_string(basement[r]) + " |";
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (!line.empty()) line += ' ';
      line += std::to_string(rows[r][c]);
    }
    if (line.empty()) line = ".";
    s += line + '\n';
  }
  return s;
}

std::string Filling::to_json() const {
  nlohmann::ordered_json j;
  j["shape"] = shape();
  j["basement"] = !basement.empty();
  auto out_rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<int> row;
    if (!basement.empty()) row.push_back(basement[r]);
    row.insert(row.end(), rows[r].begin(), rows[r].end());
    out_rows.push_back(row);
  }
  j["rows"] = out_rows;
  return j.dump();
}

Filling Filling::from_json(std::string_view json) {
  auto j = nlohmann::json::parse(json);
  auto shape = j.at("shape").get<std::vector<int>>();
  bool with_basement = j.at("basement").get<bool>();
  auto in_rows = j.at("rows").get<std::vector<std::vector<int>>>();
  if (in_rows.size() != shape.size()) throw std::invalid_argument("row count does not match shape");
  Filling t;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    auto row = in_rows[r];
    std::size_t expect = static_cast<std::size_t>(shape[r]) + (with_basement ? 1 : 0);
    if (row.size() != expect) throw std::invalid_argument("row length does not match shape");
    if (with_basement) {
      t.basement.push_back(row.front());
      row.erase(row.begin());
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Diagram family_diagram(Family f, const std::vector<int>& index, int n) {
  check_index(f, index, n);
  Diagram d;
  if (has_basement(f)) {
    d.row_lengths.assign(index.rbegin(), index.rend());
    for (int i = 1; i <= n; ++i) d.basement.push_back(n + 1 - i);
  } else {
    d.row_lengths = index;
  }
  return d;
}

bool is_member(Family f, const std::vector<int>& index, const Filling& t, int n) {
  Diagram d = family_diagram(f, index, n);
  if (t.shape() != d.row_lengths || t.basement != d.basement) return false;
  for (const auto& r : t.rows)
    for (int v : r)
      if (v < 1 || v > n) return false;
  if (d.row_lengths.empty()) return true;
  Grid g{d.row_lengths, d.basement, t.rows};
  return satisfies(entry(f).rules, g, n);
}

std::vector<Filling> enumerate_family(Family f, const std::vector<int>& index, int n) {
  Diagram d = family_diagram(f, index, n);
  const Rules& R = entry(f).rules;
  std::vector<std::vector<int>> rows;
  for (int len : d.row_lengths) rows.emplace_back(static_cast<std::size_t>(len), 0);
  // Fill column by column, bottom to top, so column and triple conditions
  // become checkable as early as possible.
  std::vector<std::pair<int, int>> order;
  int width = d.row_lengths.empty() ? 0 : *std::max_element(d.row_lengths.begin(), d.row_lengths.end());
  for (int c = 0; c < width; ++c)
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
      if (c < d.row_lengths[static_cast<std::size_t>(r)]) order.emplace_back(r, c);

  std::vector<Filling> out;
  Grid g{d.row_lengths, d.basement, rows};
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == order.size()) {
      out.push_back(Filling{rows, d.basement});
      return;
    }
    auto [r, c] = order[k];
    int lo = 1, hi = n;
    if (R.bound == Bound::AtMostRow) hi = std::min(hi, r + 1);
    if (R.bound == Bound::AtLeastRow) lo = std::max(lo, r + 1);
    if (R.first_equals_row && c == 0) lo = hi = r + 1;
    for (int v = lo; v <= hi; ++v) {
      rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      if (satisfies(R, g, n)) self(self, k + 1);
    }
    rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
  };
  if (d.row_lengths.empty()) {
    out.push_back(Filling{rows, d.basement});
  } else {
    rec(rec, 0);
  }
  std::sort(out.begin(), out.end(),
            [](const Filling& a, const Filling& b) { return a.reading_word() < b.reading_word(); });
  return out;
}

std::vector<Filling> enumerate_family_naive(Family f, const std::vector<int>& index, int n) {
  Diagram d = family_diagram(f, index, n);
  Filling t{{}, d.basement};
  for (int len : d.row_lengths) t.rows.emplace_back(static_cast<std::size_t>(len), 1);
  std::vector<int*> cells;
  for (auto& r : t.rows)
    for (int& v : r) cells.push_back(&v);
  std::vector<Filling> out;
  if (n < 1 && !cells.empty()) return out;
  while (true) {
    if (is_member(f, index, t, n)) out.push_back(t);
    std::size_t k = 0;
    while (k < cells.size() && *cells[k] == n) *cells[k++] = 1;
    if (k == cells.size()) break;
    ++*cells[k];
  }
  std::sort(out.begin(), out.end(),
            [](const Filling& a, const Filling& b) { return a.reading_word() < b.reading_word(); });
  return out;
}

Polynomial generating_polynomial(Family f, const std::vector<int>& index, int n) {
  Polynomial p(n);
  for (const auto& t : enumerate_family(f, index, n)) p.add_term(t.weight(n).parts(), 1);
  return p;
}

Filling theta(const Filling& t, int n) {
  Filling out;
  for (auto r = t.rows.rbegin(); r != t.rows.rend(); ++r) {
    std::vector<int> row;
    for (int v : *r) row.push_back(n + 1 - v);
    out.rows.push_back(std::move(row));
  }
  for (auto b = t.basement.rbegin(); b != t.basement.rend(); ++b) out.basement.push_back(n + 1 - *b);
  return out;
}

}  // namespace keypoly
