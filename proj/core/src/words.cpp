#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "keypoly/tableau.hpp"

namespace keypoly {

std::pair<Tableau, Tableau> rsk(std::span<const int> word) {
  std::vector<std::vector<int>> p, q;
  int step = 0;
  for (int x : word) {
    ++step;
    std::size_t r = 0;
    while (true) {
      if (r == p.size()) {
        p.push_back({x});
        q.push_back({step});
        break;
      }
      auto& row = p[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        q[r].push_back(step);
        break;
      }
      std::swap(*it, x);
      ++r;
    }
  }
  return {Tableau(std::move(p)), Tableau(std::move(q))};
}

Tableau schensted_insert(std::span<const int> word) { return rsk(word).first; }

std::pair<Tableau, Tableau> column_insert(std::span<const int> word) {
  std::vector<std::vector<int>> p, q;  // columns, bottom to top
  int step = 0;
  for (auto w = word.rbegin(); w != word.rend(); ++w) {
    int x = *w;
    ++step;
    std::size_t c = 0;
    while (true) {
      if (c == p.size()) {
        p.push_back({x});
        q.push_back({step});
        break;
      }
      auto& col = p[c];
      auto it = std::lower_bound(col.begin(), col.end(), x);
      if (it == col.end()) {
        col.push_back(x);
        q[c].push_back(step);
        break;
      }
      std::swap(*it, x);
      ++c;
    }
  }
  return {Tableau::from_columns(p), Tableau::from_columns(q)};
}

std::vector<Word> knuth_class(std::span<const int> word) {
  std::set<Word> seen;
  std::vector<Word> stack{Word(word.begin(), word.end())};
  seen.insert(stack.back());
  while (!stack.empty()) {
    Word w = std::move(stack.back());
    stack.pop_back();
    for (std::size_t k = 0; k + 2 < w.size(); ++k) {
      int a = w[k], b = w[k + 1], c = w[k + 2];
      auto visit = [&](std::size_t i, std::size_t j) {
        Word v = w;
        std::swap(v[i], v[j]);
        if (seen.insert(v).second) stack.push_back(std::move(v));
      };
      // xzy <-> zxy for x <= y < z
      if ((a <= c && c < b) || (b <= c && c < a)) visit(k, k + 1);
      // yxz <-> yzx for x < y <= z
      if ((b < a && a <= c) || (c < a && a <= b)) visit(k + 1, k + 2);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Word> column_factors(std::span<const int> word) {
  std::vector<Word> out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k == 0 || word[k - 1] <= word[k]) out.emplace_back();
    out.back().push_back(word[k]);
  }
  return out;
}

std::vector<int> colform(std::span<const int> word) {
  std::vector<int> out;
  for (const auto& f : column_factors(word)) out.push_back(static_cast<int>(f.size()));
  return out;
}

bool is_column_frank(std::span<const int> word) {
  auto form = colform(word);
  auto cols = schensted_insert(word).shape().conjugate().parts();
  std::sort(form.begin(), form.end());
  std::sort(cols.begin(), cols.end());
  return form == cols;
}

namespace {

// For each column length, the factor of a column-frank word in the class of
// col(t) that sits last (right key) or first (left key).
Tableau key_from_frank_words(const Tableau& t, bool last) {
  if (t.size() == 0) return t;
  auto lengths = t.shape().conjugate().parts();
  std::set<int> needed(lengths.begin(), lengths.end());
  std::map<int, Word> found;
  for (const auto& w : knuth_class(column_word(t))) {
    auto factors = column_factors(w);
    const Word& f = last ? factors.back() : factors.front();
    int len = static_cast<int>(f.size());
    if (!needed.count(len) || found.count(len)) continue;
    if (!is_column_frank(w)) continue;
    found[len] = f;
    if (found.size() == needed.size()) break;
  }
  std::vector<std::vector<int>> cols;
  for (int len : lengths) {
    auto it = found.find(len);
    if (it == found.end()) throw std::logic_error("no column-frank word with the required factor length");
    std::vector<int> col(it->second.rbegin(), it->second.rend());
    cols.push_back(std::move(col));
  }
  return Tableau::from_columns(cols);
}

}  // namespace

Tableau right_key(const Tableau& t) { return key_from_frank_words(t, true); }

Tableau left_key(const Tableau& t) { return key_from_frank_words(t, false); }

Word flip_word(std::span<const int> word, int n) {
  Word out;
  for (int v : word) {
    if (v < 1 || v > n) throw std::invalid_argument("letter outside alphabet");
    out.push_back(n + 1 - v);
  }
  return out;
}

Word frev_word(std::span<const int> word, int n) {
  Word f = flip_word(word, n);
  std::reverse(f.begin(), f.end());
  return f;
}

Tableau frev_key(const Tableau& k, int n) {
  std::vector<std::vector<int>> cols;
  for (int j = 0; j < k.num_columns(); ++j) {
    auto col = k.column(j);
    for (int& v : col) v = n + 1 - v;
    std::sort(col.begin(), col.end());
    cols.push_back(std::move(col));
  }
  return Tableau::from_columns(cols);
}

std::string word_to_string(std::span<const int> word) {
  bool digits = std::all_of(word.begin(), word.end(), [](int v) { return v >= 0 && v <= 9; });
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (digits) {
      s += static_cast<char>('0' + word[i]);
    } else {
      if (i) s += ",";
      s += std::to_string(word[i]);
    }
  }
  return s;
}

}  // namespace keypoly
