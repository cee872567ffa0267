#include "keypoly/compositions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace keypoly {

std::vector<int> parse_int_list(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c == '(' || c == ')' || c == '[' || c == ']' || std::isspace(static_cast<unsigned char>(c))) continue;
    s.push_back(c);
  }
  std::vector<int> out;
  if (s.empty()) return out;
  if (s.find(',') == std::string::npos) {
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("not a digit string: " + std::string(text));
      out.push_back(c - '0');
    }
    return out;
  }
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    std::string tok = s.substr(pos, comma - pos);
    if (tok.empty()) throw std::invalid_argument("empty entry in list: " + std::string(text));
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad integer: " + tok);
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

std::string join_ints(const std::vector<int>& v, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

// WeakComposition

WeakComposition::WeakComposition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 0) throw std::invalid_argument("weak composition with negative part");
}

WeakComposition WeakComposition::zeros(int n) { return WeakComposition(std::vector<int>(static_cast<std::size_t>(n), 0)); }

WeakComposition WeakComposition::parse(std::string_view text) { return WeakComposition(parse_int_list(text)); }

int WeakComposition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

WeakComposition WeakComposition::rev() const { return WeakComposition(std::vector<int>(parts_.rbegin(), parts_.rend())); }

WeakComposition WeakComposition::sorted() const {
  auto v = parts_;
  std::sort(v.begin(), v.end(), std::greater<>());
  return WeakComposition(std::move(v));
}

WeakComposition WeakComposition::revsorted() const {
  auto v = parts_;
  std::sort(v.begin(), v.end());
  return WeakComposition(std::move(v));
}

Partition WeakComposition::sort() const {
  std::vector<int> v;
  for (int p : parts_)
    if (p > 0) v.push_back(p);
  std::sort(v.begin(), v.end(), std::greater<>());
  return Partition(std::move(v));
}

Composition WeakComposition::flat() const {
  std::vector<int> v;
  for (int p : parts_)
    if (p > 0) v.push_back(p);
  return Composition(std::move(v));
}

bool WeakComposition::is_weakly_increasing() const { return std::is_sorted(parts_.begin(), parts_.end()); }

bool WeakComposition::is_weakly_decreasing() const {
  return std::is_sorted(parts_.begin(), parts_.end(), std::greater<>());
}

std::string WeakComposition::to_string() const { return join_ints(parts_); }

// Composition

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw std::invalid_argument("composition with nonpositive part");
}

Composition Composition::parse(std::string_view text) { return Composition(parse_int_list(text)); }

int Composition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Composition Composition::rev() const { return Composition(std::vector<int>(parts_.rbegin(), parts_.rend())); }

Partition Composition::sort() const {
  auto v = parts_;
  std::sort(v.begin(), v.end(), std::greater<>());
  return Partition(std::move(v));
}

WeakComposition Composition::padded(int n) const {
  if (n < length()) throw std::invalid_argument("composition longer than requested length");
  auto v = parts_;
  v.resize(static_cast<std::size_t>(n), 0);
  return WeakComposition(std::move(v));
}

std::string Composition::to_string() const { return join_ints(parts_); }

// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition with nonpositive part");
    if (i && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must weakly decrease");
  }
}

Partition Partition::parse(std::string_view text) {
  auto v = parse_int_list(text);
  while (!v.empty() && v.back() == 0) v.pop_back();
  return Partition(std::move(v));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (parts_.empty()) return Partition();
  for (int j = 1; j <= parts_.front(); ++j) {
    int cnt = 0;
    for (int p : parts_)
      if (p >= j) ++cnt;
    c.push_back(cnt);
  }
  return Partition(std::move(c));
}

WeakComposition Partition::padded(int n) const {
  if (n < length()) throw std::invalid_argument("partition longer than requested length");
  auto v = parts_;
  v.resize(static_cast<std::size_t>(n), 0);
  return WeakComposition(std::move(v));
}

std::string Partition::to_string() const { return join_ints(parts_); }

// Enumeration

namespace {

void weak_rec(int n, int remaining, std::vector<int>& cur, std::vector<WeakComposition>& out) {
  if (static_cast<int>(cur.size()) == n - 1) {
    cur.push_back(remaining);
    out.emplace_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur.push_back(v);
    weak_rec(n, remaining - v, cur, out);
    cur.pop_back();
  }
}

void comp_rec(int remaining, int max_parts, std::vector<int>& cur, std::vector<Composition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (static_cast<int>(cur.size()) == max_parts) return;
  for (int v = remaining; v >= 1; --v) {
    cur.push_back(v);
    comp_rec(remaining - v, max_parts, cur, out);
    cur.pop_back();
  }
}

void part_rec(int remaining, int max_part, int max_parts, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (static_cast<int>(cur.size()) == max_parts) return;
  for (int v = std::min(remaining, max_part); v >= 1; --v) {
    cur.push_back(v);
    part_rec(remaining - v, v, max_parts, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<WeakComposition> weak_compositions(int n, int size) {
  std::vector<WeakComposition> out;
  if (n < 0 || size < 0) return out;
  if (n == 0) {
    if (size == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur;
  weak_rec(n, size, cur, out);
  return out;
}

std::vector<WeakComposition> weak_compositions_up_to(int n, int max_size) {
  std::vector<WeakComposition> out;
  for (int s = 0; s <= max_size; ++s) {
    auto part = weak_compositions(n, s);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<Composition> compositions(int size, int max_parts) {
  std::vector<Composition> out;
  std::vector<int> cur;
  if (size >= 0 && max_parts >= 0) comp_rec(size, max_parts, cur, out);
  return out;
}

std::vector<Partition> partitions(int size, int max_parts) {
  std::vector<Partition> out;
  std::vector<int> cur;
  if (size >= 0 && max_parts >= 0) part_rec(size, size, max_parts, cur, out);
  return out;
}

}  // namespace keypoly
