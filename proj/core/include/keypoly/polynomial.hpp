#pragma once

#include <functional>
#include <gmpxx.h>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "keypoly/compositions.hpp"

namespace keypoly {

using Exponent = std::vector<int>;

// Thrown when a division by x_i - x_{i+1} leaves a nonzero remainder.
class NonExactDivision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sparse polynomial in x_1..x_n with arbitrary-precision integer
// coefficients. Terms are kept in decreasing lex order of exponents and zero
// coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Exponent, mpz_class, std::greater<>>;

  explicit Polynomial(int n = 0) : n_(n) {}

  static Polynomial monomial(const Exponent& e, const mpz_class& c = 1);
  static Polynomial monomial(const WeakComposition& a) { return monomial(a.parts()); }
  static Polynomial constant(int n, const mpz_class& c);

  int nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  mpz_class coefficient(const Exponent& e) const;

  void add_term(const Exponent& e, const mpz_class& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const mpz_class& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const mpz_class& c) { return a *= c; }
  friend Polynomial operator*(const mpz_class& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;

  Polynomial multiply_by_monomial(const Exponent& e) const;
  // s_i f: exchange x_i and x_{i+1} (1-based).
  Polynomial swap_variables(int i) const;
  // I(f): x_i -> x_{n+1-i}.
  Polynomial reverse_variables() const;
  // Exact quotient f / (x_i - x_{i+1}) by synthetic division in x_i.
  // Throws NonExactDivision on a nonzero remainder.
  Polynomial divide_by_difference(int i) const;

  bool is_homogeneous() const;
  // Degree of a homogeneous polynomial; nullopt for zero or mixed degree.
  std::optional<int> degree() const;
  std::map<int, Polynomial> homogeneous_components() const;
  bool has_nonnegative_coefficients() const;

  // Canonical text: "c*x^(e1,...,en)" terms joined by " + " / " - ",
  // coefficient omitted when 1, "0" for the zero polynomial.
  std::string to_string() const;
  // {"n":3,"terms":[{"exp":[..],"coeff":1},...]}
  std::string to_json() const;
  // Parses canonical text. n is required only for "0".
  static Polynomial parse(std::string_view text, std::optional<int> n = std::nullopt);
  static Polynomial from_json(std::string_view json);

  bool operator==(const Polynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }

 private:
  void check(const Exponent& e) const;
  int n_;
  Terms terms_;
};

}  // namespace keypoly
