#include "keypoly/polynomial.hpp"

#include <cctype>
#include <json.hpp>
#include <numeric>

namespace keypoly {

Polynomial Polynomial::monomial(const Exponent& e, const mpz_class& c) {
  Polynomial p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::constant(int n, const mpz_class& c) {
  return monomial(Exponent(static_cast<std::size_t>(n), 0), c);
}

void Polynomial::check(const Exponent& e) const {
  if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("exponent length does not match variable count");
  for (int v : e)
    if (v < 0) throw std::invalid_argument("negative exponent");
}

mpz_class Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const mpz_class& c) {
  check(e);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.n_ != n_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.n_ != n_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const mpz_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (o.n_ != n_) throw std::invalid_argument("variable count mismatch");
  Polynomial r(n_);
  Exponent e(static_cast<std::size_t>(n_));
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = e1[k] + e2[k];
      r.add_term(e, c1 * c2);
    }
  return r;
}

Polynomial Polynomial::multiply_by_monomial(const Exponent& m) const {
  check(m);
  Polynomial r(n_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (std::size_t k = 0; k < f.size(); ++k) f[k] += m[k];
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

Polynomial Polynomial::swap_variables(int i) const {
  if (i < 1 || i >= n_) throw std::invalid_argument("variable index out of range");
  Polynomial r(n_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    std::swap(f[static_cast<std::size_t>(i - 1)], f[static_cast<std::size_t>(i)]);
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

Polynomial Polynomial::reverse_variables() const {
  Polynomial r(n_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent(e.rbegin(), e.rend()), c);
  return r;
}

Polynomial Polynomial::divide_by_difference(int i) const {
  if (i < 1 || i >= n_) throw std::invalid_argument("variable index out of range");
  const auto xi = static_cast<std::size_t>(i - 1);
  std::map<int, Polynomial> by_degree;
  int top = -1;
  for (const auto& [e, c] : terms_) {
    Exponent rest = e;
    rest[xi] = 0;
    auto it = by_degree.try_emplace(e[xi], Polynomial(n_)).first;
    it->second.add_term(rest, c);
    top = std::max(top, e[xi]);
  }
  Polynomial quotient(n_);
  if (top < 0) return quotient;
  Exponent next(static_cast<std::size_t>(n_), 0);
  next[xi + 1] = 1;
  // Synthetic division by the root x_i = x_{i+1}.
  Polynomial carry(n_);
  for (int k = top; k >= 1; --k) {
    Polynomial qk = carry.multiply_by_monomial(next);
    if (auto it = by_degree.find(k); it != by_degree.end()) qk += it->second;
    Exponent shift(static_cast<std::size_t>(n_), 0);
    shift[xi] = k - 1;
    quotient += qk.multiply_by_monomial(shift);
    carry = std::move(qk);
  }
  Polynomial remainder = carry.multiply_by_monomial(next);
  if (auto it = by_degree.find(0); it != by_degree.end()) remainder += it->second;
  if (!remainder.is_zero()) throw NonExactDivision("polynomial is not divisible by x_i - x_{i+1}");
  return quotient;
}

bool Polynomial::is_homogeneous() const {
  std::optional<int> d;
  for (const auto& [e, c] : terms_) {
    int s = std::accumulate(e.begin(), e.end(), 0);
    if (d && *d != s) return false;
    d = s;
  }
  return true;
}

std::optional<int> Polynomial::degree() const {
  if (is_zero() || !is_homogeneous()) return std::nullopt;
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

std::map<int, Polynomial> Polynomial::homogeneous_components() const {
  std::map<int, Polynomial> out;
  for (const auto& [e, c] : terms_) {
    int s = std::accumulate(e.begin(), e.end(), 0);
    out.try_emplace(s, Polynomial(n_)).first->second.terms_.emplace(e, c);
  }
  return out;
}

bool Polynomial::has_nonnegative_coefficients() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "x^(" + join_ints(e) + ")";
    first = false;
  }
  return out;
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool at_end() {
    skip();
    return pos >= s.size();
  }
  std::string digits() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return std::string(s.substr(start, pos - start));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos) + ": " + what);
  }
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, std::optional<int> n) {
  Cursor cur{text};
  std::vector<std::pair<Exponent, mpz_class>> parsed;
  std::vector<mpz_class> constants;
  bool first = true;
  while (!cur.at_end()) {
    int sign = 1;
    if (cur.eat('-')) sign = -1;
    else if (!cur.eat('+') && !first) cur.fail("expected + or -");
    first = false;
    mpz_class coeff = 1;
    std::string num = cur.digits();
    bool has_num = !num.empty();
    if (has_num) coeff = mpz_class(num);
    if (has_num && !cur.eat('*')) {
      constants.push_back(sign * coeff);
      continue;
    }
    if (!cur.eat('x')) cur.fail("expected x");
    if (!cur.eat('^')) cur.fail("expected ^");
    if (!cur.eat('(')) cur.fail("expected (");
    Exponent e;
    while (true) {
      std::string d = cur.digits();
      if (d.empty()) cur.fail("expected exponent");
      e.push_back(std::stoi(d));
      if (cur.eat(')')) break;
      if (!cur.eat(',')) cur.fail("expected , or )");
    }
    parsed.emplace_back(std::move(e), sign * coeff);
  }
  int nv = -1;
  if (n) nv = *n;
  for (const auto& [e, c] : parsed) {
    if (nv < 0) nv = static_cast<int>(e.size());
    if (static_cast<int>(e.size()) != nv) throw std::invalid_argument("inconsistent exponent lengths");
  }
  if (nv < 0) throw std::invalid_argument("variable count needed to parse a constant polynomial");
  Polynomial p(nv);
  for (const auto& [e, c] : parsed) p.add_term(e, c);
  for (const auto& c : constants) p.add_term(Exponent(static_cast<std::size_t>(nv), 0), c);
  return p;
}

std::string Polynomial::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n_;
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [e, c] : terms_) {
    nlohmann::ordered_json t;
    t["exp"] = e;
    if (c.fits_slong_p())
      t["coeff"] = c.get_si();
    else
      t["coeff"] = c.get_str();
    j["terms"].push_back(std::move(t));
  }
  return j.dump();
}

Polynomial Polynomial::from_json(std::string_view json) {
  auto j = nlohmann::json::parse(json);
  Polynomial p(j.at("n").get<int>());
  for (const auto& t : j.at("terms")) {
    const auto& c = t.at("coeff");
    mpz_class coeff = c.is_string() ? mpz_class(c.get<std::string>()) : mpz_class(c.get<long>());
    p.add_term(t.at("exp").get<Exponent>(), coeff);
  }
  return p;
}

}  // namespace keypoly
