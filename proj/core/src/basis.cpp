#include "keypoly/basis.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "keypoly/tableau.hpp"

namespace keypoly {

namespace {

struct BasisInfo {
  BasisId id;
  std::string_view name;
  std::optional<Family> family;
};

const std::vector<BasisInfo>& table() {
  static const std::vector<BasisInfo> t = {
      {BasisId::Key, "key", Family::KSSF},         {BasisId::YKey, "ykey", Family::YKSSF},
      {BasisId::Atom, "atom", Family::ASSF},       {BasisId::YAtom, "yatom", Family::YASSF},
      {BasisId::QKey, "qkey", Family::QF},         {BasisId::YQKey, "yqkey", Family::YQF},
      {BasisId::FSlide, "fslide", Family::FF},     {BasisId::YFSlide, "yfslide", Family::YFF},
      {BasisId::MSlide, "mslide", Family::MF},     {BasisId::YMSlide, "ymslide", Family::YMF},
      {BasisId::Particle, "particle", Family::LF}, {BasisId::YParticle, "yparticle", Family::YLF},
      {BasisId::Monomial, "monomial", std::nullopt}, {BasisId::Schur, "schur", std::nullopt},
      {BasisId::F, "F", Family::FCT},              {BasisId::M, "M", Family::MCT},
      {BasisId::QS, "QS", Family::RCT},            {BasisId::YQS, "YQS", Family::YCT},
  };
  return t;
}

const BasisInfo& info(BasisId b) {
  for (const auto& i : table())
    if (i.id == b) return i;
  throw std::logic_error("unknown basis");
}

}  // namespace

const std::vector<BasisId>& all_bases() {
  static const std::vector<BasisId> v = [] {
    std::vector<BasisId> out;
    for (const auto& i : table()) out.push_back(i.id);
    return out;
  }();
  return v;
}

std::string_view basis_name(BasisId b) { return info(b).name; }

std::optional<BasisId> parse_basis(std::string_view name) {
  for (const auto& i : table())
    if (i.name == name) return i.id;
  return std::nullopt;
}

std::optional<Family> basis_family(BasisId b) { return info(b).family; }

bool is_symmetric_index(BasisId b) {
  return b == BasisId::Schur || b == BasisId::F || b == BasisId::M || b == BasisId::QS || b == BasisId::YQS;
}

std::vector<std::vector<int>> basis_indices(BasisId b, int n, int degree) {
  std::vector<std::vector<int>> out;
  if (b == BasisId::Schur) {
    for (const auto& p : partitions(degree, n)) out.push_back(p.parts());
  } else if (is_symmetric_index(b)) {
    for (const auto& c : compositions(degree, n)) out.push_back(c.parts());
  } else {
    for (const auto& w : weak_compositions(n, degree)) out.push_back(w.parts());
  }
  return out;
}

Polynomial schur_polynomial(const Partition& lambda, int n) {
  Polynomial p(n);
  if (lambda.length() > n) return p;
  for (const auto& t : semistandard_tableaux(lambda, n)) p.add_term(t.weight(n).parts(), 1);
  return p;
}

const Polynomial& basis_polynomial(BasisId b, const std::vector<int>& index, int n) {
  static std::mutex mu;
  static std::map<std::tuple<BasisId, int, std::vector<int>>, Polynomial> cache;
  auto key = std::make_tuple(b, n, index);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  Polynomial p(n);
  if (b == BasisId::Monomial) {
    if (static_cast<int>(index.size()) != n) throw std::invalid_argument("monomial index must have length n");
    p = Polynomial::monomial(index);
  } else if (b == BasisId::Schur) {
    p = schur_polynomial(Partition(index), n);
  } else {
    p = generating_polynomial(*info(b).family, index, n);
  }
  std::lock_guard lock(mu);
  return cache.emplace(std::move(key), std::move(p)).first->second;
}

}  // namespace keypoly
