#include "keypoly/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace keypoly {

std::vector<Word> compatible_sequences(std::span<const int> b) {
  std::vector<Word> out;
  Word w(b.size());
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == b.size()) {
      out.push_back(w);
      return;
    }
    int lo = 1;
    if (k) lo = b[k - 1] < b[k] ? w[k - 1] + 1 : w[k - 1];
    for (int v = lo; v <= b[k]; ++v) {
      w[k] = v;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return out;
}

WeakComposition content(std::span<const int> w, int n) {
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  for (int v : w) {
    if (v < 1 || v > n) throw std::invalid_argument("letter outside alphabet");
    ++c[static_cast<std::size_t>(v - 1)];
  }
  return WeakComposition(std::move(c));
}

std::optional<Word> max_compatible_sequence(std::span<const int> b) {
  // Split into weakly decreasing runs; each run takes a single value.
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (k == 0 || b[k - 1] < b[k]) runs.emplace_back(k, k);
    runs.back().second = k + 1;
  }
  std::vector<int> value(runs.size());
  for (std::size_t j = runs.size(); j-- > 0;) {
    int m = *std::min_element(b.begin() + static_cast<std::ptrdiff_t>(runs[j].first),
                              b.begin() + static_cast<std::ptrdiff_t>(runs[j].second));
    value[j] = j + 1 == runs.size() ? m : std::min(m, value[j + 1] - 1);
  }
  if (!value.empty() && value.front() <= 0) return std::nullopt;
  Word w;
  for (std::size_t j = 0; j < runs.size(); ++j) w.insert(w.end(), runs[j].second - runs[j].first, value[j]);
  return w;
}

std::optional<WeakComposition> maxcomp(std::span<const int> b, int n) {
  auto w = max_compatible_sequence(b);
  if (!w) return std::nullopt;
  return content(*w, n);
}

Polynomial key_via_compatible(const WeakComposition& a) {
  int n = a.length();
  Polynomial p(n);
  for (const auto& c : knuth_class(column_word(key_tableau(a)))) {
    Word b(c.rbegin(), c.rend());
    for (const auto& w : compatible_sequences(b)) p.add_term(content(w, n).parts(), 1);
  }
  return p;
}

Polynomial ykey_via_compatible(const WeakComposition& a) {
  int n = a.length();
  Polynomial p(n);
  for (const auto& y : knuth_class(column_word(key_tableau(a)))) {
    Word c = flip_word(y, n);
    for (const auto& w : compatible_sequences(c)) p.add_term(content(flip_word(w, n), n).parts(), 1);
  }
  return p;
}

IndexCounts key_to_fundamental_slides(const WeakComposition& a) {
  int n = a.length();
  IndexCounts out;
  for (const auto& c : knuth_class(column_word(key_tableau(a)))) {
    Word b(c.rbegin(), c.rend());
    if (auto m = maxcomp(b, n)) ++out[*m];
  }
  return out;
}

IndexCounts ykey_to_young_fundamental_slides(const WeakComposition& a) {
  int n = a.length();
  IndexCounts out;
  for (const auto& y : knuth_class(column_word(key_tableau(a)))) {
    if (auto m = maxcomp(flip_word(y, n), n)) ++out[m->rev()];
  }
  return out;
}

std::vector<Word> flag_compatible_sequences(const WeakComposition& a) {
  Word base;
  std::vector<std::pair<int, int>> marks;  // (position, required letter)
  for (int i = 1; i <= a.length(); ++i) {
    base.insert(base.end(), static_cast<std::size_t>(a[i - 1]), i);
    if (a[i - 1] > 0) marks.emplace_back(static_cast<int>(base.size()), i);
  }
  std::vector<Word> out;
  for (auto& w : compatible_sequences(base)) {
    bool ok = std::all_of(marks.begin(), marks.end(),
                          [&](auto m) { return w[static_cast<std::size_t>(m.first - 1)] == m.second; });
    if (ok) out.push_back(std::move(w));
  }
  return out;
}

Polynomial particle_via_flag(const WeakComposition& a) {
  Polynomial p(a.length());
  for (const auto& w : flag_compatible_sequences(a)) p.add_term(content(w, a.length()).parts(), 1);
  return p;
}

std::string RowFrankWord::to_string() const {
  std::string s;
  for (std::size_t i = pieces.size(); i-- > 0;) {
    s += word_to_string(pieces[i]);
    if (i) s += "|";
  }
  return s;
}

namespace {

void increasing_words(int len, int lo, int hi, Word& cur, std::vector<Word>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  int start = cur.empty() ? lo : cur.back();
  for (int v = start; v <= hi; ++v) {
    cur.push_back(v);
    increasing_words(len, lo, hi, cur, out);
    cur.pop_back();
  }
}

template <class Accept>
std::vector<RowFrankWord> row_frank_search(const WeakComposition& a, bool young, Accept accept) {
  int n = a.length();
  std::vector<std::vector<Word>> choices(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    Word cur;
    int lo = young ? i : 1, hi = young ? n : i;
    increasing_words(a[i - 1], lo, hi, cur, choices[static_cast<std::size_t>(i - 1)]);
  }
  std::vector<RowFrankWord> out;
  std::vector<Word> pieces(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      RowFrankWord r;
      for (std::size_t k = pieces.size(); k-- > 0;) r.word.insert(r.word.end(), pieces[k].begin(), pieces[k].end());
      r.pieces = pieces;
      if (accept(r.word)) out.push_back(std::move(r));
      return;
    }
    for (const auto& choice : choices[static_cast<std::size_t>(i)]) {
      pieces[static_cast<std::size_t>(i)] = choice;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<RowFrankWord> row_frank_words(const WeakComposition& a) {
  Tableau target = standardize(key_tableau(a));
  return row_frank_search(a, false, [&](const Word& u) { return column_insert(u).second == target; });
}

std::vector<RowFrankWord> young_row_frank_words(const WeakComposition& a) {
  int n = a.length();
  Tableau target = standardize(key_tableau(a.rev()));
  return row_frank_search(a, true, [&](const Word& u) { return column_insert(frev_word(u, n)).second == target; });
}

Polynomial key_via_row_frank(const WeakComposition& a) {
  Polynomial p(a.length());
  for (const auto& u : row_frank_words(a)) p.add_term(content(u.word, a.length()).parts(), 1);
  return p;
}

Polynomial ykey_via_row_frank(const WeakComposition& a) {
  Polynomial p(a.length());
  for (const auto& u : young_row_frank_words(a)) p.add_term(content(u.word, a.length()).parts(), 1);
  return p;
}

bool entrywise_leq(const Tableau& s, const Tableau& t) {
  if (s.shape() != t.shape()) throw std::invalid_argument("tableaux of different shapes");
  for (int r = 0; r < s.num_rows(); ++r)
    for (int c = 0; c < static_cast<int>(s.rows()[static_cast<std::size_t>(r)].size()); ++c)
      if (s.at(r, c) > t.at(r, c)) return false;
  return true;
}

namespace {

template <class Keep>
Polynomial sum_over_ssyt(const WeakComposition& a, Keep keep) {
  int n = a.length();
  Polynomial p(n);
  for (const auto& t : semistandard_tableaux(a.sort(), n))
    if (keep(t)) p.add_term(t.weight(n).parts(), 1);
  return p;
}

}  // namespace

Polynomial key_via_right_keys(const WeakComposition& a) {
  Tableau k = key_tableau(a);
  return sum_over_ssyt(a, [&](const Tableau& t) { return entrywise_leq(right_key(t), k); });
}

Polynomial atom_via_right_keys(const WeakComposition& a) {
  Tableau k = key_tableau(a);
  return sum_over_ssyt(a, [&](const Tableau& t) { return right_key(t) == k; });
}

Polynomial ykey_via_left_keys(const WeakComposition& a) {
  Tableau k = key_tableau(a);
  return sum_over_ssyt(a, [&](const Tableau& t) { return entrywise_leq(k, left_key(t)); });
}

Polynomial yatom_via_left_keys(const WeakComposition& a) {
  Tableau k = key_tableau(a);
  return sum_over_ssyt(a, [&](const Tableau& t) { return left_key(t) == k; });
}

}  // namespace keypoly
