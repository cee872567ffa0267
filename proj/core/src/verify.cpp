#include "keypoly/verify.hpp"

#include <algorithm>
#include <json.hpp>
#include <set>
#include <tuple>

#include "keypoly/basis.hpp"
#include "keypoly/classify.hpp"
#include "keypoly/crystal.hpp"
#include "keypoly/expansion.hpp"
#include "keypoly/fillings.hpp"
#include "keypoly/generators.hpp"
#include "keypoly/module.hpp"
#include "keypoly/operators.hpp"
#include "keypoly/permutation.hpp"
#include "keypoly/pipe_dream.hpp"
#include "keypoly/tableau.hpp"

namespace keypoly {

namespace {

constexpr std::size_t kMaxCounterexamples = 10;

void expect(TheoremResult& r, bool ok, const std::string& what) {
  ++r.checked;
  if (ok) return;
  ++r.failures;
  if (r.counterexamples.size() < kMaxCounterexamples) r.counterexamples.push_back(what);
}

template <class F>
void for_each_weak(const VerifyRange& g, F f) {
  for (int n = std::max(1, g.min_len); n <= g.max_len; ++n)
    for (int d = 0; d <= g.max_size; ++d)
      for (const auto& a : weak_compositions(n, d)) f(a);
}

template <class F>
void for_each_perm(const VerifyRange& g, F f) {
  for (int n = std::max(1, g.min_len); n <= g.max_len; ++n)
    for (const auto& w : all_permutations(n)) f(w);
}

// Every word of length <= max_size over 1..max_len.
template <class F>
void for_each_word(const VerifyRange& g, F f) {
  Word w;
  auto rec = [&](auto&& self) -> void {
    f(static_cast<const Word&>(w));
    if (static_cast<int>(w.size()) == g.max_size) return;
    for (int x = 1; x <= g.max_len; ++x) {
      w.push_back(x);
      self(self);
      w.pop_back();
    }
  };
  rec(rec);
}

std::string wc(const WeakComposition& a) { return "(" + a.to_string() + ")"; }
std::string ws(const Word& w) { return word_to_string(w); }

const std::vector<std::pair<Family, Family>>& dual_pairs() {
  static const std::vector<std::pair<Family, Family>> v = {
      {Family::YKSSF, Family::KSSF}, {Family::YASSF, Family::ASSF}, {Family::YQF, Family::QF},
      {Family::YFF, Family::FF},     {Family::YMF, Family::MF},     {Family::YLF, Family::LF},
      {Family::YCT, Family::RCT},    {Family::YFCT, Family::FCT},   {Family::YMCT, Family::MCT},
  };
  return v;
}

// Index of a family member as the filling code expects it.
std::vector<int> family_index(Family f, const WeakComposition& a) {
  if (!is_composition_family(f)) return a.parts();
  std::vector<int> c;
  for (int v : a.parts())
    if (v) c.push_back(v);
  return c;
}

// Composition families are indexed by compositions; weak compositions with a
// zero part are skipped for them.
bool index_ok(Family f, const WeakComposition& a) {
  if (!is_composition_family(f)) return true;
  return std::none_of(a.parts().begin(), a.parts().end(), [](int v) { return v == 0; });
}

// ---- core

void lehmer_rev(const VerifyRange& g, TheoremResult& r) {
  for_each_perm(g, [&](const Permutation& w) {
    expect(r, young_lehmer_code(w.rev()) == lehmer_code(w).rev(), w.to_string());
  });
}

void frev_perm(const VerifyRange& g, TheoremResult& r) {
  for_each_perm(g, [&](const Permutation& w) {
    expect(r, w.frev().length() == w.length() && w.frev().frev() == w, w.to_string());
  });
}

void wc_leq_order(const VerifyRange& g, TheoremResult& r) {
  std::set<WeakComposition> seen;
  for_each_weak(g, [&](const WeakComposition& a) {
    if (!seen.insert(a.sorted()).second) return;
    auto cls = rearrangements(a);
    for (const auto& x : cls) {
      expect(r, wc_leq(x, x), "reflexive " + wc(x));
      for (const auto& y : cls) {
        if (x != y) expect(r, !(wc_leq(x, y) && wc_leq(y, x)), "antisymmetric " + wc(x) + " " + wc(y));
        if (!wc_leq(x, y)) continue;
        for (const auto& z : cls)
          if (wc_leq(y, z)) expect(r, wc_leq(x, z), "transitive " + wc(x) + " " + wc(y) + " " + wc(z));
      }
    }
  });
}

void key_tableau_check(const VerifyRange& g, TheoremResult& r) {
  for_each_weak(g, [&](const WeakComposition& a) {
    Tableau k = key_tableau(a);
    expect(r, k.is_key() && k.weight(a.length()) == a, wc(a));
  });
}

void homogeneity(const VerifyRange& g, TheoremResult& r) {
  for (int n = std::max(1, g.min_len); n <= g.max_len; ++n)
    for (int d = 0; d <= g.max_size; ++d)
      for (auto b : all_bases())
        for (const auto& idx : basis_indices(b, n, d)) {
          const auto& p = basis_polynomial(b, idx, n);
          expect(r, p.is_homogeneous() && p.degree() == d,
                 std::string(basis_name(b)) + "(" + join_ints(idx) + ") n=" + std::to_string(n));
        }
}

// ---- tableaux

// Calls f once per Knuth class among words in range.
template <class F>
void for_each_knuth_class(const VerifyRange& g, F f) {
  std::set<Word> seen;
  for_each_word(g, [&](const Word& w) {
    if (seen.count(w)) return;
    auto cls = knuth_class(w);
    seen.insert(cls.begin(), cls.end());
    f(w, cls);
  });
}

void knuth_insertion(const VerifyRange& g, TheoremResult& r) {
  for_each_knuth_class(g, [&](const Word& w, const std::vector<Word>& cls) {
    Tableau p = schensted_insert(w);
    for (const auto& v : cls) expect(r, schensted_insert(v) == p, ws(w) + " ~ " + ws(v));
  });
}

void knuth_frev(const VerifyRange& g, TheoremResult& r) {
  for_each_knuth_class(g, [&](const Word& w, const std::vector<Word>& cls) {
    std::set<Word> image;
    for (const auto& v : cls) image.insert(frev_word(v, g.max_len));
    auto direct = knuth_class(frev_word(w, g.max_len));
    expect(r, image == std::set<Word>(direct.begin(), direct.end()), ws(w));
  });
}

void knuth_key_columns(const VerifyRange& g, TheoremResult& r) {
  for_each_weak(g, [&](const WeakComposition& a) {
    Tableau k = key_tableau(a);
    auto cls = knuth_class(column_word(k));
    expect(r, std::binary_search(cls.begin(), cls.end(), column_word_right(k)), wc(a));
  });
}

void frev_right_to_left(const VerifyRange& g, TheoremResult& r) {
  for_each_weak(g, [&](const WeakComposition& a) {
    int n = a.length();
    expect(r, frev_word(column_word(key_tableau(a)), n) == column_word_right(key_tableau(a.rev())), wc(a));
  });
}

void rightkey_leftkey(const VerifyRange& g, TheoremResult& r) {
  // Shapes inside a max_len x max_len box, entries at most max_len + 1.
  const int side = g.max_len, n = g.max_len + 1;
  for (int d = 1; d <= std::min(g.max_size, side * side); ++d)
    for (const auto& lam : partitions(d, side)) {
      if (lam[0] > side) continue;
      for (const auto& t : semistandard_tableaux(lam, n)) {
        Tableau lhs = left_key(schensted_insert(frev_word(column_word(t), n)));
        expect(r, lhs == frev_key(right_key(t), n), t.to_string());
      }
    }
}

// ---- fillings

void young_reverse_duality(const VerifyRange& g, TheoremResult& r) {
  for_each_weak(g, [&](const WeakComposition& a) {
    int n = a.length();
    for (auto [young, reverse] : dual_pairs()) {
      if (!index_ok(young, a)) continue;
      Polynomial y = generating_polynomial(young, family_index(young, a), n);
      Polynomial x = generating_polynomial(reverse, family_index(reverse, a.rev()), n);
      expect(r, y == x.reverse_variables(), std::string(family_name(young)) + " " + wc(a));
    }
  });
}

void theta_involution(const VerifyRange& g, TheoremResult& r) {
  for_each_weak(g, [&](const WeakComposition& a) {
    int n = a.length();
    for (auto [young, reverse] : dual_pairs()) {
      if (!index_ok(young, a)) continue;
      auto ys = enumerate_family(young, family_index(young, a), n);
      std::set<Filling> image;
      for (const auto& t : enumerate_family(reverse, family_index(reverse, a.rev()), n)) {
        expect(r, theta(theta(t, n), n) == t, "involution " + std::string(family_name(reverse)) + " " + wc(a));
        image.insert(theta(t, n));
      }
      expect(r, image == std::set<Filling>(ys.begin(), ys.end()),
             "image " + std::string(family_name(young)) + " " + wc(a));
    }
  });
}

void monomial_positivity(const VerifyRange& g, TheoremResult& r) {
  for_each_weak(g, [&](const WeakComposition& a) {
    for (auto f : all_families()) {
      if (!index_ok(f, a)) continue;
      auto p = generating_polynomial(f, family_index(f, a), a.length());
      bool ok = std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.second > 0; });
      expect(r, ok, std::string(family_name(f)) + " " + wc(a));
    }
  });
}

void schur_refinement(const VerifyRange& g, TheoremResult& r) {
  for (int n = std::max(1, g.min_len); n <= g.max_len; ++n)
    for (int d = 0; d <= g.max_size; ++d)
      for (const auto& lam : partitions(d, n)) {
        auto [qs, yqs] = schur_decompositions(lam, n);
        Polynomial s = schur_polynomial(lam, n);
        expect(r, qs.reconstruct() == s && yqs.reconstruct() == s,
               "lambda (" + lam.to_string() + ") n=" + std::to_string(n));
      }
}

std::set<std::vector<std::vector<int>>> filling_rows(Family f, const WeakComposition& a) {
  std::set<std::vector<std::vector<int>>> out;
  for (const auto& t : enumerate_family(f, a.parts(), a.length())) out.insert(t.rows);
  return out;
}

void containment_chains(const VerifyRange& g, TheoremResult& r) {
  const std::vector<std::pair<Family, Family>> chains = {
      {Family::LF, Family::ASSF},  {Family::ASSF, Family::QF},  {Family::MF, Family::FF},
      {Family::YLF, Family::YASSF}, {Family::YASSF, Family::YQF}, {Family::YMF, Family::YFF},
  };
  for_each_weak(g, [&](const WeakComposition& a) {
    for (auto [small, large] : chains) {
      auto s = filling_rows(small, a), l = filling_rows(large, a);
      expect(r, std::includes(l.begin(), l.end(), s.begin(), s.end()),
             std::string(family_name(small)) + " in " + std::string(family_name(large)) + " " + wc(a));
    }
  });
}

void pruned_vs_naive(const VerifyRange& g, TheoremResult& r) {
  for_each_weak(g, [&](const WeakComposition& a) {
    for (auto f : all_families()) {
      if (!index_ok(f, a)) continue;
      auto idx = family_index(f, a);
      expect(r, enumerate_family(f, idx, a.length()) == enumerate_family_naive(f, idx, a.length()),
             std::string(family_name(f)) + " " + wc(a));
    }
  });
}

// ---- operators

void reverse_diff(const VerifyRange& g, TheoremResult& r) {
  // Both sides are linear, so monomials suffice.
  for_each_weak(g, [&](const WeakComposition& e) {
    int n = e.length();
    Polynomial f = Polynomial::monomial(e);
    for (int i = 1; i < n; ++i)
      expect(r, pi(i, f).reverse_variables() == pihat(n - i, f.reverse_variables()),
             "i=" + std::to_string(i) + " " + wc(e));
  });
}

void i_partial(const VerifyRange& g, TheoremResult& r) {
  for_each_weak(g, [&](const WeakComposition& e) {
    int n = e.length();
    Polynomial f = Polynomial::monomial(e);
    for (int i = 1; i < n; ++i) {
      expect(r, partial(i, f).reverse_variables() == -partial(n - i, f.reverse_variables()),
             "word " + std::to_string(i) + " " + wc(e));
      for (int j = 1; j < n; ++j) {
        Word word{i, j}, mirrored{n - i, n - j};
        expect(r,
               apply_along(OperatorKind::Partial, word, f).reverse_variables() ==
                   apply_along(OperatorKind::Partial, mirrored, f.reverse_variables()),
               "word " + ws(word) + " " + wc(e));
      }
    }
  });
}

void ops_vs_fillings(const VerifyRange& g, TheoremResult& r) {
  for_each_weak(g, [&](const WeakComposition& a) {
    int n = a.length();
    expect(r, key_ops(a) == generating_polynomial(Family::KSSF, a.parts(), n), "key " + wc(a));
    expect(r, atom_ops(a) == generating_polynomial(Family::ASSF, a.parts(), n), "atom " + wc(a));
    expect(r, ykey_ops(a) == generating_polynomial(Family::YKSSF, a.parts(), n), "ykey " + wc(a));
    expect(r, yatom_ops(a) == generating_polynomial(Family::YASSF, a.parts(), n), "yatom " + wc(a));
  });
}

void reduced_word_independence(const VerifyRange& g, TheoremResult& r) {
  for_each_weak(g, [&](const WeakComposition& a) {
    auto s = sorting_permutations(a);
    Polynomial start = Polynomial::monomial(a.sorted());
    Polynomial ref = key_ops(a);
    for (const auto& w : s.to_sort.all_reduced_words())
      expect(r, apply_along(OperatorKind::Pi, w, start) == ref, wc(a) + " word " + ws(w));
  });
}

// ---- generators

void key_five_way(const VerifyRange& g, TheoremResult& r) {
  for_each_weak(g, [&](const WeakComposition& a) {
    Polynomial p = generating_polynomial(Family::KSSF, a.parts(), a.length());
    expect(r, key_ops(a) == p, "ops " + wc(a));
    expect(r, key_via_compatible(a) == p, "compat " + wc(a));
    expect(r, key_via_right_keys(a) == p, "rkeys " + wc(a));
    expect(r, key_via_row_frank(a) == p, "rowfrank " + wc(a));
  });
}

void ykey_five_way(const VerifyRange& g, TheoremResult& r) {
  for_each_weak(g, [&](const WeakComposition& a) {
    Polynomial p = generating_polynomial(Family::YKSSF, a.parts(), a.length());
    expect(r, ykey_ops(a) == p, "ops " + wc(a));
    expect(r, ykey_via_compatible(a) == p, "compat " + wc(a));
    expect(r, ykey_via_left_keys(a) == p, "lkeys " + wc(a));
    expect(r, ykey_via_row_frank(a) == p, "rowfrank " + wc(a));
  });
}

void fs_expansion(const VerifyRange& g, TheoremResult& r) {
  for_each_weak(g, [&](const WeakComposition& a) {
    int n = a.length();
    Polynomial sum(n);
    for (const auto& [b, c] : key_to_fundamental_slides(a))
      sum += generating_polynomial(Family::FF, b.parts(), n) * mpz_class(c);
    expect(r, sum == key_ops(a), "key " + wc(a));
    Polynomial ysum(n);
    for (const auto& [b, c] : ykey_to_young_fundamental_slides(a))
      ysum += generating_polynomial(Family::YFF, b.parts(), n) * mpz_class(c);
    expect(r, ysum == ykey_ops(a), "ykey " + wc(a));
  });
}

void maxcomp_check(const VerifyRange& g, TheoremResult& r) {
  for_each_word(g, [&](const Word& b) {
    auto all = compatible_sequences(b);
    auto m = max_compatible_sequence(b);
    expect(r, all.empty() == !m.has_value(), "existence " + ws(b));
    if (!m) return;
    expect(r, std::binary_search(all.begin(), all.end(), *m), "compatible " + ws(b));
    for (const auto& w : all) {
      bool below = true;
      for (std::size_t k = 0; k < w.size(); ++k) below = below && w[k] <= (*m)[k];
      expect(r, below, "maximal " + ws(b) + " vs " + ws(w));
    }
  });
}

// ---- crystals

template <class F>
void for_each_crystal(const VerifyRange& g, F f) {
  for (int n = std::max(2, g.min_len); n <= g.max_len; ++n)
    for (int d = 1; d <= g.max_size; ++d)
      for (const auto& lam : partitions(d, n)) f(TableauCrystal(lam, n));
}

void crystal_axioms(const VerifyRange& g, TheoremResult& r) {
  for_each_crystal(g, [&](const TableauCrystal& b) {
    int n = b.n();
    for (const auto& t : b.vertices())
      for (int i = 1; i < n; ++i) {
        std::string where = t.to_string() + " i=" + std::to_string(i);
        if (auto u = b.e(i, t)) {
          auto back = b.f(i, *u);
          expect(r, back && *back == t, "f e " + where);
          auto wt = t.weight(n).parts(), wu = u->weight(n).parts();
          wt[static_cast<std::size_t>(i - 1)] += 1;
          wt[static_cast<std::size_t>(i)] -= 1;
          expect(r, wt == wu && u->is_semistandard(), "weight " + where);
        }
        if (auto u = b.f(i, t)) {
          auto back = b.e(i, *u);
          expect(r, back && *back == t, "e f " + where);
        }
      }
  });
}

void demazure_full(const VerifyRange& g, TheoremResult& r) {
  for_each_crystal(g, [&](const TableauCrystal& b) {
    auto w0 = Permutation::longest(b.n()).reduced_word();
    auto top = b.demazure_from_highest(w0), bottom = b.demazure_from_lowest(w0);
    std::string where = "(" + b.shape().to_string() + ") n=" + std::to_string(b.n());
    expect(r, top == b.vertices(), "highest " + where);
    expect(r, bottom == b.vertices(), "lowest " + where);
  });
}

void demazure_characters(const VerifyRange& g, TheoremResult& r) {
  for_each_weak(g, [&](const WeakComposition& a) {
    int n = a.length();
    if (n < 2) return;
    expect(r, key_crystal(a).character() == generating_polynomial(Family::KSSF, a.parts(), n), "key " + wc(a));
    expect(r, young_key_crystal(a).character() == generating_polynomial(Family::YKSSF, a.parts(), n),
           "ykey " + wc(a));
  });
}

void rf_weight(const VerifyRange& g, TheoremResult& r) {
  for_each_perm(g, [&](const Permutation& w) {
    int n = w.size();
    for (int ell = 1; ell <= n; ++ell)
      for (const auto& f : enumerate_rf(w, ell)) {
        Word flat;
        for (const auto& blk : f.blocks) flat.insert(flat.end(), blk.begin(), blk.end());
        expect(r, f.weight(n).size() == w.length() && Permutation::from_word(n, flat) == w &&
                      is_reduced_word(n, flat),
               w.to_string() + " " + f.to_string());
      }
  });
}

void crystal_b21(const VerifyRange&, TheoremResult& r) {
  auto g = build_crystal(Partition({2, 1}), 3);
  // Edges of B(21), n = 3, as top-row/bottom-row labels.
  const std::set<std::tuple<std::string, std::string, int>> expected = {
      {"2/11", "2/12", 1}, {"3/11", "3/12", 1}, {"3/12", "3/22", 1}, {"3/13", "3/23", 1},
      {"2/11", "3/11", 2}, {"2/12", "2/13", 2}, {"2/13", "3/13", 2}, {"3/22", "3/23", 2},
  };
  std::set<std::tuple<std::string, std::string, int>> got;
  for (const auto& e : g.edges) got.emplace(g.labels[static_cast<std::size_t>(e.from)], g.labels[static_cast<std::size_t>(e.to)], e.color);
  expect(r, g.labels.size() == 8, "vertex count " + std::to_string(g.labels.size()));
  expect(r, got == expected, "edge set");
}

void rfyc_ysch(const VerifyRange& g, TheoremResult& r) {
  for_each_perm(g, [&](const Permutation& w) {
    expect(r, ysch_via_rfyc(w) == yschubert_pd(w) && ysch_via_rfyc(w) == yschubert_ops(w), w.to_string());
  });
}

// ---- schubert

void pd_reduced(const VerifyRange& g, TheoremResult& r) {
  for_each_perm(g, [&](const Permutation& w) {
    for (const auto& d : enumerate_pd(w)) {
      auto traced = d.trace();
      expect(r, static_cast<int>(d.crosses.size()) == w.length() && traced && *traced == w,
             w.to_string() + " " + d.to_json());
    }
  });
}

void schubert_agreement(const VerifyRange& g, TheoremResult& r) {
  for_each_perm(g, [&](const Permutation& w) {
    std::string s = w.to_string();
    expect(r, schubert_pd(w) == schubert_ops(w), "sch " + s);
    expect(r, yschubert_pd(w) == yschubert_ops(w), "ysch " + s);
    expect(r, yschubert_pd(w) == schubert_pd(w.rev()).reverse_variables(), "duality " + s);
    if (w.size() <= 5) expect(r, enumerate_pd(w) == enumerate_pd_naive(w), "pruned vs naive " + s);
  });
}

void staircase_bound(const VerifyRange& g, TheoremResult& r) {
  for_each_perm(g, [&](const Permutation& w) {
    int n = w.size();
    const Polynomial ysch = yschubert_pd(w), sch = schubert_pd(w);
    for (const auto& [e, c] : ysch.terms())
      for (int i = 0; i < n; ++i) expect(r, e[static_cast<std::size_t>(i)] <= i, "ysch " + w.to_string());
    for (const auto& [e, c] : sch.terms())
      for (int i = 0; i < n; ++i) expect(r, e[static_cast<std::size_t>(i)] <= n - 1 - i, "sch " + w.to_string());
  });
}

void vexillary(const VerifyRange& g, TheoremResult& r) {
  for_each_perm(g, [&](const Permutation& w) {
    bool single_key = schubert_pd(w) == key_ops(lehmer_code(w));
    if (is_vexillary(w)) expect(r, vexillary_identity_check(w), "vexillary " + w.to_string());
    else expect(r, !single_key, "non-vexillary " + w.to_string());
  });
}

// ---- analysis

void expand_delta(const VerifyRange& g, TheoremResult& r) {
  for (int n = std::max(1, g.min_len); n <= g.max_len; ++n)
    for (int d = 0; d <= g.max_size; ++d)
      for (auto b : all_bases())
        for (const auto& idx : basis_indices(b, n, d)) {
          auto e = expand(basis_polynomial(b, idx, n), b, n);
          bool ok = e.coeffs.size() == 1 && e.coeffs.begin()->first == idx && e.coeffs.begin()->second == 1;
          expect(r, ok, std::string(basis_name(b)) + "(" + join_ints(idx) + ") n=" + std::to_string(n));
        }
}

const std::vector<std::pair<BasisId, BasisId>>& positive_arrows() {
  static const std::vector<std::pair<BasisId, BasisId>> v = {
      {BasisId::Key, BasisId::QKey},       {BasisId::QKey, BasisId::FSlide},      {BasisId::QKey, BasisId::Atom},
      {BasisId::FSlide, BasisId::MSlide},  {BasisId::FSlide, BasisId::Particle},  {BasisId::MSlide, BasisId::Monomial},
      {BasisId::Atom, BasisId::Particle},  {BasisId::Particle, BasisId::Monomial},
      {BasisId::YKey, BasisId::YQKey},     {BasisId::YQKey, BasisId::YFSlide},    {BasisId::YQKey, BasisId::YAtom},
      {BasisId::YFSlide, BasisId::YMSlide}, {BasisId::YFSlide, BasisId::YParticle}, {BasisId::YMSlide, BasisId::Monomial},
      {BasisId::YAtom, BasisId::YParticle}, {BasisId::YParticle, BasisId::Monomial},
  };
  return v;
}

void expansion_positivity(const VerifyRange& g, TheoremResult& r) {
  for_each_weak(g, [&](const WeakComposition& a) {
    int n = a.length();
    for (auto [src, dst] : positive_arrows()) {
      auto e = expand(basis_polynomial(src, a.parts(), n), dst, n);
      expect(r, e.integral() && e.nonnegative(),
             std::string(basis_name(src)) + " -> " + std::string(basis_name(dst)) + " " + wc(a));
    }
  });
}

void key_equals_atom_sum(const VerifyRange& g, TheoremResult& r) {
  for_each_weak(g, [&](const WeakComposition& a) {
    int n = a.length();
    auto formula = key_to_atoms(a);
    auto solved = expand(key_ops(a), BasisId::Atom, n);
    expect(r, formula.coeffs == solved.coeffs, "expand " + wc(a));
    expect(r, formula.reconstruct() == generating_polynomial(Family::KSSF, a.parts(), n), "reconstruct " + wc(a));
    // Young side: ykey_a = sum of yatom_b over rev(b) <= rev(a).
    auto ysolved = expand(ykey_ops(a), BasisId::YAtom, n);
    Expansion yformula;
    yformula.basis = BasisId::YAtom;
    yformula.n = n;
    for (const auto& b : weak_compositions(n, a.size()))
      if (wc_leq(b.rev(), a.rev())) yformula.coeffs.emplace(b.parts(), 1);
    expect(r, yformula.coeffs == ysolved.coeffs, "young " + wc(a));
  });
}

void classifier_theorem(Classifier c, const VerifyRange& g, TheoremResult& r) {
  // Classifier verification counts n from 1; min_len is not used here.
  auto report = verify_classifier(c, g.max_len, g.max_size);
  r.checked += report.checked;
  for (const auto& m : report.mismatches) {
    ++r.failures;
    if (r.counterexamples.size() < kMaxCounterexamples)
      r.counterexamples.push_back("(" + join_ints(m.index) + ") n=" + std::to_string(m.n) +
                                  " predicate=" + (m.predicate ? "true" : "false"));
  }
}

void ykey_module(const VerifyRange& g, TheoremResult& r) {
  for_each_weak(g, [&](const WeakComposition& a) {
    auto basis = ykeymodule_basis(a);
    auto yw = young_row_frank_words(a);
    expect(r, basis.size() == yw.size() && module_rank(basis) == static_cast<int>(yw.size()), "independent " + wc(a));
    for (const auto& v : basis) expect(r, v.weights().size() == 1, "weight vector " + wc(a));
    expect(r, module_trace(a) == generating_polynomial(Family::YKSSF, a.parts(), a.length()), "trace " + wc(a));
  });
}

void ykey_module_span(const VerifyRange& g, TheoremResult& r) {
  for_each_weak(g, [&](const WeakComposition& a) {
    expect(r, ykeymodule_dimension(a) == static_cast<int>(young_row_frank_words(a).size()), wc(a));
  });
}

// ---- cli

void poly_json_roundtrip(const VerifyRange& g, TheoremResult& r) {
  for_each_weak(g, [&](const WeakComposition& a) {
    for (auto b : {BasisId::Key, BasisId::YKey, BasisId::Atom, BasisId::YAtom}) {
      const auto& p = basis_polynomial(b, a.parts(), a.length());
      expect(r, Polynomial::from_json(p.to_json()) == p, "json " + wc(a));
      expect(r, Polynomial::parse(p.to_string(), a.length()) == p, "text " + wc(a));
      Polynomial mixed = p - Polynomial::monomial(a) * mpz_class(3);
      expect(r, Polynomial::from_json(mixed.to_json()) == mixed, "json signed " + wc(a));
    }
  });
}

std::vector<Theorem> build() {
  std::vector<Theorem> t = {
      {"lehmer-rev", "Young Lehmer code of rev(w) is rev of the Lehmer code of w", {1, 5, 0}, lehmer_rev},
      {"frev-perm", "frev preserves length and is an involution", {1, 5, 0}, frev_perm},
      {"wc-leq-order", "wc_leq is a partial order on each rearrangement class", {1, 3, 4}, wc_leq_order},
      {"key-tableau", "key(a) is a key of weight a", {1, 4, 6}, key_tableau_check},
      {"homogeneity", "every basis polynomial is homogeneous of the index degree", {1, 3, 5}, homogeneity},
      {"knuth-insertion", "Knuth-equivalent words insert to the same tableau", {1, 4, 6}, knuth_insertion},
      {"knuth-frev", "frev maps Knuth classes onto Knuth classes", {1, 4, 6}, knuth_frev},
      {"knuth-key-columns", "col(key(a)) is Knuth equivalent to col_R(key(a))", {1, 4, 6}, knuth_key_columns},
      {"frev-right-to-left", "frev(col(key(a))) = col_R(key(rev(a)))", {1, 4, 6}, frev_right_to_left},
      {"rightkey-leftkey", "left key of insert(frev(col T)) is frev of the right key of T", {1, 3, 9}, rightkey_leftkey},
      {"young-reverse-duality", "Young family at a equals the reversed reverse family at rev(a)", {1, 4, 6}, young_reverse_duality},
      {"theta-involution", "theta is an involution carrying reverse fillings of rev(a) onto Young fillings of a", {1, 3, 5}, theta_involution},
      {"monomial-positivity", "every generating polynomial has positive coefficients", {1, 3, 5}, monomial_positivity},
      {"schur-refinement", "QS and YQS over rearrangements of lambda both sum to s_lambda", {1, 4, 6}, schur_refinement},
      {"containment-chains", "LF in ASSF in QF and MF in FF, with Young analogues", {1, 3, 5}, containment_chains},
      {"pruned-vs-naive", "pruned enumeration equals generate-and-filter for every family", {1, 3, 4}, pruned_vs_naive},
      {"reverse-diff", "I(pi_i f) = pihat_{n-i} I(f)", {1, 4, 5}, reverse_diff},
      {"i-partial", "I(partial_{i1}...partial_{ir} f) = (-1)^r partial_{n-i1}...partial_{n-ir} I(f)", {1, 4, 5}, i_partial},
      {"ops-vs-fillings", "key, atom, ykey and yatom by operators equal the filling models", {1, 4, 6}, ops_vs_fillings},
      {"reduced-word-independence", "pi along any reduced word of w_a gives key_a", {1, 4, 5}, reduced_word_independence},
      {"key-five-way", "fillings, operators, compatible sequences, right keys and W(a) agree on key_a", {1, 3, 6}, key_five_way},
      {"ykey-five-way", "fillings, operators, flipped compatible sequences, left keys and YW(a) agree on ykey_a", {1, 3, 6}, ykey_five_way},
      {"fs-expansion", "key_a and ykey_a equal the sums of their slide expansions", {1, 3, 6}, fs_expansion},
      {"maxcomp", "max compatible sequence is compatible and entrywise largest", {1, 4, 5}, maxcomp_check},
      {"crystal-axioms", "e_i and f_i are inverse partial maps shifting weight by one root", {2, 3, 5}, crystal_axioms},
      {"demazure-full", "truncation along a longest word returns all of B(lambda)", {2, 3, 5}, demazure_full},
      {"demazure-characters", "highest and lowest Demazure truncations have characters key_a and ykey_a", {2, 3, 5}, demazure_characters},
      {"rf-weight", "reduced factorizations have weight size l(w) and multiply to w", {1, 4, 0}, rf_weight},
      {"crystal-b21", "B(21) for n = 3 has exactly the eight expected edges", {1, 1, 0}, crystal_b21},
      {"rfyc-ysch", "RFYC(rev w) weights generate ysch_w", {1, 4, 0}, rfyc_ysch},
      {"pd-reduced", "every pipe dream of w has l(w) crosses and traces to w", {1, 4, 0}, pd_reduced},
      {"schubert-agreement", "pipe dreams equal divided differences; ysch_w = I(sch_rev(w))", {1, 4, 0}, schubert_agreement},
      {"staircase-bound", "exponent of x_i is at most i-1 in ysch and n-i in sch", {1, 4, 0}, staircase_bound},
      {"vexillary", "sch_w = key_{L(w)} exactly for vexillary w", {1, 4, 0}, vexillary},
      {"expand-delta", "each basis element expands to its own delta", {1, 3, 5}, expand_delta},
      {"expansion-positivity", "every arrow of both expansion posets is nonnegative", {1, 3, 5}, expansion_positivity},
      {"key-equals-atom-sum", "key_a is the sum of atom_b over b <= a, and the Young analogue", {1, 3, 5}, key_equals_atom_sum},
      {"ykey-module", "{e_T(u)} is independent, weight-homogeneous and has trace ykey_a", {3, 3, 5}, ykey_module},
      {"ykey-module-span", "the basis spans the whole Young key module", {3, 3, 4}, ykey_module_span},
      {"poly-json-roundtrip", "polynomial JSON and text re-parse to equal polynomials", {1, 3, 5}, poly_json_roundtrip},
  };
  for (auto c : all_classifiers())
    t.push_back({std::string(classifier_name(c)), "coincidence predicate matches exhaustive polynomial search", {1, 4, 6},
                 [c](const VerifyRange& g, TheoremResult& r) { classifier_theorem(c, g, r); }});
  return t;
}

}  // namespace

std::string TheoremResult::to_string() const {
  std::string s = id + ": " + (ok() ? "PASS" : "FAIL") + " (" + std::to_string(checked) + " checks, " +
                  std::to_string(failures) + " failures)\n";
  for (const auto& c : counterexamples) s += "  counterexample: " + c + "\n";
  return s;
}

std::string TheoremResult::to_json() const {
  nlohmann::ordered_json j;
  j["theorem"] = id;
  j["pass"] = ok();
  j["checked"] = checked;
  j["failures"] = failures;
  j["counterexamples"] = counterexamples;
  return j.dump();
}

const std::vector<Theorem>& theorems() {
  static const std::vector<Theorem> t = build();
  return t;
}

const Theorem* find_theorem(std::string_view id) {
  for (const auto& t : theorems())
    if (t.id == id) return &t;
  return nullptr;
}

TheoremResult run_theorem(const Theorem& t, const VerifyRange& range) {
  TheoremResult r;
  r.id = t.id;
  t.run(range, r);
  return r;
}

}  // namespace keypoly
