#include "keypoly/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace keypoly {

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
  std::vector<bool> seen(w_.size() + 1, false);
  for (int v : w_) {
    if (v < 1 || v > static_cast<int>(w_.size()) || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation in one-line notation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::simple(int n, int i) { return identity(n).times_simple(i); }

Permutation Permutation::from_word(int n, std::span<const int> word) {
  Permutation w = identity(n);
  for (int i : word) w = w.times_simple(i);
  return w;
}

Permutation Permutation::parse(std::string_view text) { return Permutation(parse_int_list(text)); }

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < w_.size(); ++i)
    for (std::size_t j = i + 1; j < w_.size(); ++j)
      if (w_[i] > w_[j]) ++inv;
  return inv;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(w_.size());
  for (std::size_t i = 0; i < w_.size(); ++i) inv[static_cast<std::size_t>(w_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (other.size() != size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> r(w_.size());
  for (std::size_t i = 0; i < w_.size(); ++i) r[i] = w_[static_cast<std::size_t>(other.w_[i] - 1)];
  return Permutation(std::move(r));
}

Permutation Permutation::times_simple(int i) const {
  if (i < 1 || i >= size()) throw std::invalid_argument("simple transposition index out of range");
  Permutation r = *this;
  std::swap(r.w_[static_cast<std::size_t>(i - 1)], r.w_[static_cast<std::size_t>(i)]);
  return r;
}

std::vector<int> Permutation::descents() const {
  std::vector<int> d;
  for (int i = 1; i < size(); ++i)
    if ((*this)(i) > (*this)(i + 1)) d.push_back(i);
  return d;
}

std::vector<int> Permutation::reduced_word() const {
  // Peel off the leftmost factor: s_i w is shorter iff i+1 precedes i in w.
  std::vector<int> word;
  Permutation cur = *this;
  while (true) {
    auto inv = cur.inverse();
    int found = 0;
    for (int i = 1; i < size(); ++i)
      if (inv(i) > inv(i + 1)) {
        found = i;
        break;
      }
    if (!found) break;
    word.push_back(found);
    cur = Permutation::simple(size(), found) * cur;
  }
  return word;
}

std::vector<std::vector<int>> Permutation::all_reduced_words() const {
  if (length() == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int d : descents()) {
    for (auto word : times_simple(d).all_reduced_words()) {
      word.push_back(d);
      out.push_back(std::move(word));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Permutation Permutation::rev() const { return Permutation(std::vector<int>(w_.rbegin(), w_.rend())); }

Permutation Permutation::frev() const {
  int n = size();
  std::vector<int> r(w_.size());
  for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = n + 1 - w_[static_cast<std::size_t>(n - 1 - i)];
  return Permutation(std::move(r));
}

std::string Permutation::to_string() const {
  bool small = size() <= 9;
  if (!small) return join_ints(w_);
  std::string s;
  for (int v : w_) s += static_cast<char>('0' + v);
  return s;
}

bool is_reduced_word(int n, std::span<const int> word) {
  return Permutation::from_word(n, word).length() == static_cast<int>(word.size());
}

WeakComposition lehmer_code(const Permutation& w) {
  std::vector<int> c;
  for (int i = 1; i <= w.size(); ++i) {
    int cnt = 0;
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(i) > w(j)) ++cnt;
    c.push_back(cnt);
  }
  return WeakComposition(std::move(c));
}

WeakComposition young_lehmer_code(const Permutation& w) {
  std::vector<int> c;
  for (int i = 1; i <= w.size(); ++i) {
    int cnt = 0;
    for (int j = 1; j < i; ++j)
      if (w(i) > w(j)) ++cnt;
    c.push_back(cnt);
  }
  return WeakComposition(std::move(c));
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw std::invalid_argument("permutation size mismatch");
  // Tableau criterion: sorted prefixes compare entrywise.
  for (int k = 1; k < u.size(); ++k) {
    std::vector<int> pu(u.one_line().begin(), u.one_line().begin() + k);
    std::vector<int> pv(v.one_line().begin(), v.one_line().begin() + k);
    std::sort(pu.begin(), pu.end());
    std::sort(pv.begin(), pv.end());
    for (int i = 0; i < k; ++i)
      if (pu[static_cast<std::size_t>(i)] > pv[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

namespace {

// Bubble sort recording adjacent swaps. Each swap removes exactly one strict
// inversion, so the recorded word is reduced and its length is minimal.
template <class Before>
std::vector<int> bubble_word(std::vector<int> v, Before out_of_order) {
  std::vector<int> word;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (out_of_order(v[i], v[i + 1])) {
        std::swap(v[i], v[i + 1]);
        word.push_back(static_cast<int>(i) + 1);
        changed = true;
      }
    }
  }
  return word;
}

}  // namespace

SortingPermutations sorting_permutations(const WeakComposition& a) {
  SortingPermutations s;
  int n = a.length();
  s.to_sort_word = bubble_word(a.parts(), [](int x, int y) { return x < y; });
  s.to_revsort_word = bubble_word(a.parts(), [](int x, int y) { return x > y; });
  s.to_sort = Permutation::from_word(n, s.to_sort_word);
  s.to_revsort = Permutation::from_word(n, s.to_revsort_word);
  return s;
}

bool wc_leq(const WeakComposition& b, const WeakComposition& a) {
  if (a.length() != b.length() || a.sorted() != b.sorted()) return false;
  return bruhat_leq(sorting_permutations(b).to_sort, sorting_permutations(a).to_sort);
}

std::vector<WeakComposition> rearrangements(const WeakComposition& a) {
  std::vector<int> v = a.parts();
  std::sort(v.begin(), v.end(), std::greater<>());
  std::vector<WeakComposition> out;
  do {
    out.emplace_back(v);
  } while (std::prev_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace keypoly
