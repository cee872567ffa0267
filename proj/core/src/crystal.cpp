#include "keypoly/crystal.hpp"

#include <algorithm>
#include <json.hpp>
#include <map>
#include <set>
#include <stdexcept>

namespace keypoly {

namespace {

struct Brackets {
  std::vector<std::size_t> open_i;       // unmatched letters i, left to right
  std::vector<std::size_t> open_next;    // unmatched letters i+1, left to right
};

Brackets match(int i, std::span<const int> word) {
  Brackets b;
  std::vector<std::size_t> stack;  // pending i+1
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (word[k] == i + 1) {
      stack.push_back(k);
    } else if (word[k] == i) {
      if (!stack.empty()) stack.pop_back();
      else b.open_i.push_back(k);
    }
  }
  b.open_next = std::move(stack);
  return b;
}

}  // namespace

std::optional<Word> crystal_f(int i, std::span<const int> word) {
  auto b = match(i, word);
  if (b.open_i.empty()) return std::nullopt;
  Word w(word.begin(), word.end());
  w[b.open_i.back()] = i + 1;
  return w;
}

std::optional<Word> crystal_e(int i, std::span<const int> word) {
  auto b = match(i, word);
  if (b.open_next.empty()) return std::nullopt;
  Word w(word.begin(), word.end());
  w[b.open_next.front()] = i;
  return w;
}

Polynomial CrystalGraph::character() const {
  Polynomial p(n);
  for (const auto& w : weights) p.add_term(w.parts(), 1);
  return p;
}

std::string CrystalGraph::to_dot(const std::string& name) const {
  static const char* colors[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"};
  std::string s = "digraph " + name + " {\n";
  for (std::size_t v = 0; v < labels.size(); ++v)
    s += "  v" + std::to_string(v) + " [label=\"" + labels[v] + "\\n(" + weights[v].to_string() + ")\"];\n";
  for (const auto& e : edges) {
    const char* color = colors[static_cast<std::size_t>(e.color - 1) % 8];
    s += "  v" + std::to_string(e.from) + " -> v" + std::to_string(e.to) + " [label=\"" + std::to_string(e.color) +
         "\", color=" + color + "];\n";
  }
  s += "}\n";
  return s;
}

std::string CrystalGraph::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  auto vs = nlohmann::ordered_json::array();
  for (std::size_t v = 0; v < labels.size(); ++v) vs.push_back({{"label", labels[v]}, {"weight", weights[v].parts()}});
  j["vertices"] = vs;
  auto es = nlohmann::ordered_json::array();
  for (const auto& e : edges) es.push_back({{"from", e.from}, {"to", e.to}, {"i", e.color}});
  j["edges"] = es;
  return j.dump();
}

TableauCrystal::TableauCrystal(Partition shape, int n)
    : shape_(std::move(shape)), n_(n), vertices_(semistandard_tableaux(shape_, n)) {
  if (shape_.length() > n) throw std::invalid_argument("partition has more parts than variables");
}

Tableau TableauCrystal::rebuild(const Tableau& like, const Word& word) const {
  std::vector<std::vector<int>> cols;
  std::size_t pos = 0;
  for (int j = 0; j < like.num_columns(); ++j) {
    std::size_t h = like.column(j).size();
    std::vector<int> col(word.begin() + static_cast<std::ptrdiff_t>(pos),
                         word.begin() + static_cast<std::ptrdiff_t>(pos + h));
    std::reverse(col.begin(), col.end());
    cols.push_back(std::move(col));
    pos += h;
  }
  return Tableau::from_columns(cols);
}

std::optional<Tableau> TableauCrystal::f(int i, const Tableau& t) const {
  if (i < 1 || i >= n_) throw std::invalid_argument("crystal operator index out of range");
  auto w = crystal_f(i, column_word(t));
  if (!w) return std::nullopt;
  return rebuild(t, *w);
}

std::optional<Tableau> TableauCrystal::e(int i, const Tableau& t) const {
  if (i < 1 || i >= n_) throw std::invalid_argument("crystal operator index out of range");
  auto w = crystal_e(i, column_word(t));
  if (!w) return std::nullopt;
  return rebuild(t, *w);
}

Tableau TableauCrystal::highest_weight() const {
  std::vector<std::vector<int>> rows;
  for (int r = 0; r < shape_.length(); ++r) rows.emplace_back(static_cast<std::size_t>(shape_[r]), r + 1);
  return Tableau(std::move(rows));
}

Tableau TableauCrystal::lowest_weight() const {
  std::vector<std::vector<int>> cols;
  const Partition heights = shape_.conjugate();
  for (int h : heights.parts()) {
    std::vector<int> col;
    for (int k = n_ - h + 1; k <= n_; ++k) col.push_back(k);
    cols.push_back(std::move(col));
  }
  return Tableau::from_columns(cols);
}

CrystalGraph TableauCrystal::subgraph(const std::vector<Tableau>& subset) const {
  CrystalGraph g;
  g.n = n_;
  std::vector<Tableau> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  std::map<Tableau, int> id;
  for (const auto& t : sorted) {
    id.emplace(t, static_cast<int>(g.labels.size()));
    g.labels.push_back(t.to_string());
    g.weights.push_back(t.weight(n_));
  }
  for (const auto& t : sorted)
    for (int i = 1; i < n_; ++i)
      if (auto u = f(i, t))
        if (auto it = id.find(*u); it != id.end()) g.edges.push_back({id.at(t), it->second, i});
  return g;
}

CrystalGraph TableauCrystal::graph() const { return subgraph(vertices_); }

namespace {

template <class Step>
std::vector<Tableau> truncate(const Tableau& start, std::span<const int> word, Step step) {
  std::set<Tableau> x{start};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    std::set<Tableau> next = x;
    for (const auto& t : x) {
      auto cur = step(*it, t);
      while (cur) {
        next.insert(*cur);
        cur = step(*it, *cur);
      }
    }
    x = std::move(next);
  }
  return {x.begin(), x.end()};
}

}  // namespace

std::vector<Tableau> TableauCrystal::demazure_from_highest(std::span<const int> reduced_word) const {
  if (!is_reduced_word(n_, reduced_word)) throw std::invalid_argument("word is not reduced");
  return truncate(highest_weight(), reduced_word, [&](int i, const Tableau& t) { return f(i, t); });
}

std::vector<Tableau> TableauCrystal::demazure_from_lowest(std::span<const int> reduced_word) const {
  if (!is_reduced_word(n_, reduced_word)) throw std::invalid_argument("word is not reduced");
  return truncate(lowest_weight(), reduced_word, [&](int i, const Tableau& t) { return e(i, t); });
}

CrystalGraph build_crystal(const Partition& shape, int n) { return TableauCrystal(shape, n).graph(); }

CrystalGraph demazure_from_highest(const Partition& shape, int n, std::span<const int> reduced_word) {
  TableauCrystal b(shape, n);
  return b.subgraph(b.demazure_from_highest(reduced_word));
}

CrystalGraph demazure_from_lowest(const Partition& shape, int n, std::span<const int> reduced_word) {
  TableauCrystal b(shape, n);
  return b.subgraph(b.demazure_from_lowest(reduced_word));
}

CrystalGraph key_crystal(const WeakComposition& a) {
  return demazure_from_highest(a.sort(), a.length(), sorting_permutations(a).to_sort_word);
}

CrystalGraph young_key_crystal(const WeakComposition& a) {
  return demazure_from_lowest(a.sort(), a.length(), sorting_permutations(a).to_revsort_word);
}

WeakComposition ReducedFactorization::weight(int n) const {
  if (static_cast<int>(blocks.size()) > n) throw std::invalid_argument("more blocks than variables");
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  for (std::size_t k = 0; k < blocks.size(); ++k) w[static_cast<std::size_t>(n) - 1 - k] = static_cast<int>(blocks[k].size());
  return WeakComposition(std::move(w));
}

std::string ReducedFactorization::to_string() const {
  std::string s;
  for (const auto& b : blocks) s += "(" + word_to_string(b) + ")";
  return s;
}

int rightmost_descent(const Permutation& w) {
  auto d = w.descents();
  return d.empty() ? 0 : d.back();
}

std::vector<ReducedFactorization> enumerate_rf(const Permutation& w, int ell) {
  std::set<ReducedFactorization> out;
  if (ell < 0) throw std::invalid_argument("negative block count");
  for (const auto& word : w.all_reduced_words()) {
    if (ell == 0) {
      if (word.empty()) out.insert(ReducedFactorization{});
      continue;
    }
    // cut[k] is where block k ends; blocks must be strictly decreasing.
    std::vector<std::size_t> cut(static_cast<std::size_t>(ell), 0);
    cut.back() = word.size();
    auto rec = [&](auto&& self, std::size_t k, std::size_t start) -> void {
      if (k + 1 == static_cast<std::size_t>(ell)) {
        ReducedFactorization r;
        std::size_t from = 0;
        for (std::size_t b = 0; b < cut.size(); ++b) {
          r.blocks.emplace_back(word.begin() + static_cast<std::ptrdiff_t>(from),
                                word.begin() + static_cast<std::ptrdiff_t>(cut[b]));
          from = cut[b];
        }
        bool ok = std::all_of(r.blocks.begin(), r.blocks.end(), [](const std::vector<int>& blk) {
          return std::adjacent_find(blk.begin(), blk.end(), std::less_equal<>()) == blk.end();
        });
        if (ok) out.insert(std::move(r));
        return;
      }
      for (std::size_t c = start; c <= word.size(); ++c) {
        cut[k] = c;
        self(self, k + 1, c);
      }
    };
    rec(rec, 0, 0);
  }
  return {out.begin(), out.end()};
}

std::vector<ReducedFactorization> rfyc(const Permutation& w) {
  std::vector<ReducedFactorization> out;
  for (auto& r : enumerate_rf(w, rightmost_descent(w))) {
    bool ok = true;
    for (std::size_t k = 0; k < r.blocks.size(); ++k)
      for (int v : r.blocks[k])
        if (v < static_cast<int>(k) + 1) ok = false;
    if (ok) out.push_back(std::move(r));
  }
  return out;
}

Polynomial ysch_via_rfyc(const Permutation& w) {
  int n = w.size();
  Polynomial p(n);
  for (const auto& r : rfyc(w.rev())) p.add_term(r.weight(n).parts(), 1);
  return p;
}

CrystalGraph factorization_graph(const std::vector<ReducedFactorization>& rf, int n) {
  CrystalGraph g;
  g.n = n;
  for (const auto& r : rf) {
    g.labels.push_back(r.to_string());
    g.weights.push_back(r.weight(n));
  }
  return g;
}

}  // namespace keypoly
