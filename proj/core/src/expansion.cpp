#include "keypoly/expansion.hpp"

#include <algorithm>
#include <json.hpp>
#include <set>

#include "keypoly/linalg.hpp"
#include "keypoly/permutation.hpp"

namespace keypoly {

bool Expansion::integral() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const auto& kv) { return kv.second.get_den() == 1; });
}

bool Expansion::nonnegative() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const auto& kv) { return kv.second >= 0; });
}

Polynomial Expansion::reconstruct() const {
  if (!integral()) throw ExpansionError("non-integral");
  Polynomial p(n);
  for (const auto& [idx, c] : coeffs) p += basis_polynomial(basis, idx, n) * mpz_class(c.get_num());
  return p;
}

std::string Expansion::to_string() const {
  if (coeffs.empty()) return "0";
  std::string s;
  bool first = true;
  // Largest index first, matching the polynomial term order.
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    mpq_class c = it->second;
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    mpq_class a = abs(c);
    if (a != 1) s += a.get_str() + "*";
    s += std::string(basis_name(basis)) + "(" + join_ints(it->first, ",") + ")";
    first = false;
  }
  return s;
}

std::string Expansion::to_json() const {
  nlohmann::ordered_json j;
  j["basis"] = std::string(basis_name(basis));
  j["n"] = n;
  auto terms = nlohmann::ordered_json::array();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    nlohmann::ordered_json t;
    t["index"] = it->first;
    if (it->second.get_den() == 1) t["coeff"] = it->second.get_num().get_str();
    else t["coeff"] = it->second.get_str();
    terms.push_back(t);
  }
  j["terms"] = terms;
  j["integral"] = integral();
  return j.dump();
}

Expansion expand(const Polynomial& p, BasisId b, int n) {
  if (p.nvars() != n) throw std::invalid_argument("polynomial has a different number of variables");
  Expansion e;
  e.basis = b;
  e.n = n;
  for (const auto& [deg, comp] : p.homogeneous_components()) {
    auto indices = basis_indices(b, n, deg);
    std::vector<const Polynomial*> polys;
    std::set<Exponent> monos;
    for (const auto& t : comp.terms()) monos.insert(t.first);
    for (const auto& idx : indices) {
      polys.push_back(&basis_polynomial(b, idx, n));
      for (const auto& t : polys.back()->terms()) monos.insert(t.first);
    }
    if (indices.empty()) throw ExpansionError("not in span");
    IntMatrix a;
    std::vector<mpz_class> rhs;
    for (const auto& m : monos) {
      std::vector<mpz_class> row;
      row.reserve(polys.size());
      for (const auto* q : polys) row.push_back(q->coefficient(m));
      a.push_back(std::move(row));
      rhs.push_back(comp.coefficient(m));
    }
    auto res = solve(a, rhs);
    if (res.status == SolveStatus::NotInSpan) throw ExpansionError("not in span");
    if (res.status == SolveStatus::NotUnique) throw ExpansionError("basis elements are linearly dependent");
    for (std::size_t k = 0; k < indices.size(); ++k)
      if (res.x[k] != 0) e.coeffs.emplace(indices[k], res.x[k]);
  }
  return e;
}

Expansion key_to_atoms(const WeakComposition& a) {
  Expansion e;
  e.basis = BasisId::Atom;
  e.n = a.length();
  for (const auto& b : weak_compositions(a.length(), a.size()))
    if (wc_leq(b, a)) e.coeffs.emplace(b.parts(), 1);
  return e;
}

std::pair<Expansion, Expansion> schur_decompositions(const Partition& lambda, int n) {
  if (lambda.length() > n) throw std::invalid_argument("partition has more parts than variables");
  Expansion qs, yqs;
  qs.basis = BasisId::QS;
  yqs.basis = BasisId::YQS;
  qs.n = yqs.n = n;
  for (const auto& alpha : rearrangements(WeakComposition(lambda.parts()))) {
    qs.coeffs.emplace(alpha.parts(), 1);
    yqs.coeffs.emplace(alpha.parts(), 1);
  }
  return {qs, yqs};
}

}  // namespace keypoly
