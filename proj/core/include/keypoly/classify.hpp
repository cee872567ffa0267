#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "keypoly/compositions.hpp"

namespace keypoly {

// yqs_alpha equals some qs_beta in n variables; then beta = alpha.
bool yqs_eq_qs(const Composition& alpha, int n);
// key_a equals some ykey_b; exactly when key_a is a Schur polynomial.
bool key_inter_ykey(const WeakComposition& a);
// yatom_a equals some atom_b: |a_i - a_{i+1}| <= 1 throughout.
bool atom_eq_yatom(const WeakComposition& a);
// yqk_a equals some qk_b.
bool qk_eq_yqk(const WeakComposition& a);
// yfp_a equals some fp_b: no zero part next to a part of size at least 2.
bool fp_eq_yfp(const WeakComposition& a);
// fs_a (ms_a when monomial) equals some yfs_b (yms_b): exactly when it is
// F_{flat(a)} (M_{flat(a)}), i.e. every zero of a precedes every nonzero part.
bool slide_intersection(const WeakComposition& a, bool monomial = false);

enum class Classifier { YqsQs, KeyYkey, AtomYatom, QkeyYqkey, ParticleYparticle, FslideYfslide, MslideYmslide };

const std::vector<Classifier>& all_classifiers();
std::string_view classifier_name(Classifier c);
std::optional<Classifier> parse_classifier(std::string_view name);

struct ClassifierCase {
  std::vector<int> index;
  int n = 0;
  bool predicate = false;
  bool truth = false;
};

struct ClassifierReport {
  Classifier classifier;
  int checked = 0;
  std::vector<ClassifierCase> mismatches;
  bool ok() const { return mismatches.empty(); }
  std::string to_string() const;
};

// Compares the predicate with a direct search for an equal polynomial in the
// partner family, over every index with at most max_len variables (parts)
// and size at most max_size.
ClassifierReport verify_classifier(Classifier c, int max_len, int max_size);

}  // namespace keypoly
