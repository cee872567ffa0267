#include "keypoly/classify.hpp"

#include <cstdlib>
#include <set>
#include <stdexcept>

#include "keypoly/basis.hpp"

namespace keypoly {

namespace {

// Nonzero parts form a prefix.
bool zeros_trailing(const std::vector<int>& a) {
  bool seen_zero = false;
  for (int v : a) {
    if (v == 0) seen_zero = true;
    else if (seen_zero) return false;
  }
  return true;
}

bool zeros_leading(const std::vector<int>& a) {
  bool seen_nonzero = false;
  for (int v : a) {
    if (v != 0) seen_nonzero = true;
    else if (seen_nonzero) return false;
  }
  return true;
}

bool adjacent_within_one(const std::vector<int>& a) {
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    if (std::abs(a[i] - a[i + 1]) > 1) return false;
  return true;
}

std::vector<int> nonzero(const std::vector<int>& a) {
  std::vector<int> out;
  for (int v : a)
    if (v) out.push_back(v);
  return out;
}

// The composition-level condition shared by quasisymmetric Schur and
// quasi-key coincidences.
bool qs_condition(const std::vector<int>& alpha, int n) {
  bool all_same = true, ones_twos = true;
  for (int v : alpha) {
    if (v != alpha.front()) all_same = false;
    if (v != 1 && v != 2) ones_twos = false;
  }
  if (alpha.empty() || all_same || ones_twos) return true;
  return static_cast<int>(alpha.size()) == n && adjacent_within_one(alpha);
}

struct Pairing {
  BasisId source;  // the predicate speaks about this family
  BasisId target;  // searched for an equal member
};

Pairing pairing(Classifier c) {
  switch (c) {
    case Classifier::YqsQs: return {BasisId::YQS, BasisId::QS};
    case Classifier::KeyYkey: return {BasisId::Key, BasisId::YKey};
    case Classifier::AtomYatom: return {BasisId::YAtom, BasisId::Atom};
    case Classifier::QkeyYqkey: return {BasisId::YQKey, BasisId::QKey};
    case Classifier::ParticleYparticle: return {BasisId::YParticle, BasisId::Particle};
    case Classifier::FslideYfslide: return {BasisId::FSlide, BasisId::YFSlide};
    case Classifier::MslideYmslide: return {BasisId::MSlide, BasisId::YMSlide};
  }
  throw std::logic_error("unknown classifier");
}

bool predicate(Classifier c, const std::vector<int>& index, int n) {
  switch (c) {
    case Classifier::YqsQs: return yqs_eq_qs(Composition(index), n);
    case Classifier::KeyYkey: return key_inter_ykey(WeakComposition(index));
    case Classifier::AtomYatom: return atom_eq_yatom(WeakComposition(index));
    case Classifier::QkeyYqkey: return qk_eq_yqk(WeakComposition(index));
    case Classifier::ParticleYparticle: return fp_eq_yfp(WeakComposition(index));
    case Classifier::FslideYfslide: return slide_intersection(WeakComposition(index), false);
    case Classifier::MslideYmslide: return slide_intersection(WeakComposition(index), true);
  }
  throw std::logic_error("unknown classifier");
}

}  // namespace

bool yqs_eq_qs(const Composition& alpha, int n) {
  if (alpha.length() > n) throw std::invalid_argument("composition has more parts than variables");
  return qs_condition(alpha.parts(), n);
}

bool key_inter_ykey(const WeakComposition& a) { return a.is_weakly_increasing(); }

bool atom_eq_yatom(const WeakComposition& a) { return adjacent_within_one(a.parts()); }

bool qk_eq_yqk(const WeakComposition& a) {
  if (!zeros_trailing(a.parts())) return false;
  return qs_condition(nonzero(a.parts()), a.length());
}

bool fp_eq_yfp(const WeakComposition& a) {
  const auto& p = a.parts();
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] == 0 && p[i + 1] >= 2) return false;
    if (p[i] >= 2 && p[i + 1] == 0) return false;
  }
  return true;
}

bool slide_intersection(const WeakComposition& a, bool /*monomial*/) { return zeros_leading(a.parts()); }

const std::vector<Classifier>& all_classifiers() {
  static const std::vector<Classifier> v = {Classifier::YqsQs,         Classifier::KeyYkey,
                                            Classifier::AtomYatom,     Classifier::QkeyYqkey,
                                            Classifier::ParticleYparticle, Classifier::FslideYfslide,
                                            Classifier::MslideYmslide};
  return v;
}

std::string_view classifier_name(Classifier c) {
  switch (c) {
    case Classifier::YqsQs: return "yqs-qs";
    case Classifier::KeyYkey: return "key-ykey";
    case Classifier::AtomYatom: return "atom-yatom";
    case Classifier::QkeyYqkey: return "qkey-yqkey";
    case Classifier::ParticleYparticle: return "particle-yparticle";
    case Classifier::FslideYfslide: return "fslide-yfslide";
    case Classifier::MslideYmslide: return "mslide-ymslide";
  }
  throw std::logic_error("unknown classifier");
}

std::optional<Classifier> parse_classifier(std::string_view name) {
  for (auto c : all_classifiers())
    if (classifier_name(c) == name) return c;
  return std::nullopt;
}

std::string ClassifierReport::to_string() const {
  std::string s = std::string(classifier_name(classifier)) + ": " + std::to_string(checked) + " cases, " +
                  std::to_string(mismatches.size()) + " mismatches\n";
  for (const auto& m : mismatches)
    s += "  index (" + join_ints(m.index, ",") + ") n=" + std::to_string(m.n) + " predicate=" +
         (m.predicate ? "true" : "false") + " search=" + (m.truth ? "true" : "false") + "\n";
  return s;
}

ClassifierReport verify_classifier(Classifier c, int max_len, int max_size) {
  ClassifierReport report{c, 0, {}};
  auto [source, target] = pairing(c);
  for (int n = 1; n <= max_len; ++n) {
    for (int d = 0; d <= max_size; ++d) {
      // Equal polynomials share n and degree, so one search set per slice.
      std::set<Polynomial::Terms> targets;
      for (const auto& idx : basis_indices(target, n, d)) targets.insert(basis_polynomial(target, idx, n).terms());
      for (const auto& idx : basis_indices(source, n, d)) {
        ClassifierCase k{idx, n, predicate(c, idx, n), false};
        k.truth = targets.count(basis_polynomial(source, idx, n).terms()) > 0;
        ++report.checked;
        if (k.predicate != k.truth) report.mismatches.push_back(std::move(k));
      }
    }
  }
  return report;
}

}  // namespace keypoly
