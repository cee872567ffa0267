#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace keypoly {

class Partition;
class Composition;

// Finite sequence of nonnegative integers. The length is significant:
// (0,3,2) and (0,3,2,0) are different objects.
class WeakComposition {
 public:
  WeakComposition() = default;
  explicit WeakComposition(std::vector<int> parts);

  static WeakComposition zeros(int n);
  // Accepts "0,3,2", "(0,3,2)" or, when every part is a single digit, "032".
  static WeakComposition parse(std::string_view text);

  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& parts() const { return parts_; }

  WeakComposition rev() const;
  // Weakly decreasing rearrangement, zeros kept.
  WeakComposition sorted() const;
  // Weakly increasing rearrangement, zeros kept.
  WeakComposition revsorted() const;
  // sort(a) with zeros dropped.
  Partition sort() const;
  // a with zeros dropped, order kept.
  Composition flat() const;

  bool is_weakly_increasing() const;
  bool is_weakly_decreasing() const;

  std::string to_string() const;

  auto operator<=>(const WeakComposition&) const = default;

 private:
  std::vector<int> parts_;
};

// Weak composition with strictly positive parts.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  static Composition parse(std::string_view text);

  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& parts() const { return parts_; }

  Composition rev() const;
  Partition sort() const;
  // Pads with trailing zeros to length n.
  WeakComposition padded(int n) const;
  std::string to_string() const;

  auto operator<=>(const Composition&) const = default;

 private:
  std::vector<int> parts_;
};

// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  static Partition parse(std::string_view text);

  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& parts() const { return parts_; }

  Partition conjugate() const;
  WeakComposition padded(int n) const;
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// All weak compositions of length n and the given size, in decreasing lex order.
std::vector<WeakComposition> weak_compositions(int n, int size);
// All weak compositions of length n and size at most max_size.
std::vector<WeakComposition> weak_compositions_up_to(int n, int max_size);
// Compositions of size with at most max_parts parts, decreasing lex order.
std::vector<Composition> compositions(int size, int max_parts);
std::vector<Partition> partitions(int size, int max_parts);

// Parses a comma separated integer list, tolerating surrounding parentheses
// and whitespace. A token without commas is split into single digits.
std::vector<int> parse_int_list(std::string_view text);
std::string join_ints(const std::vector<int>& v, std::string_view sep = ",");

}  // namespace keypoly
