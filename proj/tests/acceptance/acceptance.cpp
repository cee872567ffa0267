// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "keypoly/basis.hpp"
#include "keypoly/classify.hpp"
#include "keypoly/crystal.hpp"
#include "keypoly/expansion.hpp"
#include "keypoly/fillings.hpp"
#include "keypoly/generators.hpp"
#include "keypoly/module.hpp"
#include "keypoly/operators.hpp"
#include "keypoly/pipe_dream.hpp"
#include "keypoly/tableau.hpp"
#include "oracles.hpp"

using namespace keypoly;
using oracle::digits;

namespace {

using Clock = std::chrono::steady_clock;

struct Tally {
  int checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Word w(std::string_view ds) {
  Word out;
  for (char c : ds) out.push_back(c - '0');
  return out;
}

std::string wc(const WeakComposition& a) { return "(" + a.to_string() + ")"; }

template <class F>
void for_each_weak(int n, int max_size, F f) {
  for (int d = 0; d <= max_size; ++d)
    for (const auto& a : weak_compositions(n, d)) f(a);
}

// Criterion 2 and 3 share this range: n = 3 with |a| <= 6, n = 4 with |a| <= 4.
template <class F>
void for_each_main_range(F f) {
  for (int n = 1; n <= 3; ++n) for_each_weak(n, 6, f);
  for_each_weak(4, 4, f);
}

// ---- criterion 1

void goldens(Tally& t) {
  auto timed = [&](const std::string& name, const std::function<bool()>& check) {
    auto t0 = Clock::now();
    bool ok = check();
    double s = seconds_since(t0);
    t.expect(ok, name);
    t.expect(s < 1.0, name + " took " + std::to_string(s) + " s");
  };
  auto gen = [](Family f, std::vector<int> idx, int n) { return generating_polynomial(f, idx, n); };
  auto wcp = [](std::vector<int> v) { return WeakComposition(std::move(v)); };

  timed("key_032", [&] {
    Polynomial p = gen(Family::KSSF, {0, 3, 2}, 3);
    return p == digits("032 + 122 + 212 + 302 + 311 + 320 + 131 + 221 + 230") && p.term_count() == 9;
  });
  timed("ykey_230", [&] {
    return gen(Family::YKSSF, {2, 3, 0}, 3) == digits("230 + 221 + 212 + 203 + 113 + 023 + 131 + 122 + 032");
  });
  timed("atom_103", [&] { return gen(Family::ASSF, {1, 0, 3}, 3) == digits("103 + 112 + 202 + 121 + 211"); });
  timed("qk_103", [&] {
    Polynomial p = gen(Family::QF, {1, 0, 3}, 3);
    return p == digits("103 + 112 + 202 + 121 + 211 + 130 + 220") && p.term_count() == 7;
  });
  timed("fs_103", [&] { return gen(Family::FF, {1, 0, 3}, 3) == digits("103 + 112 + 121 + 130"); });
  timed("ms_103", [&] { return gen(Family::MF, {1, 0, 3}, 3) == digits("103 + 130"); });
  timed("fp_103", [&] { return gen(Family::LF, {1, 0, 3}, 3) == digits("103 + 112 + 121"); });
  timed("yfs_301", [&] { return gen(Family::YFF, {3, 0, 1}, 3) == digits("301 + 211 + 121 + 031"); });
  timed("yms_301", [&] { return gen(Family::YMF, {3, 0, 1}, 3) == digits("301 + 031"); });
  timed("F_13", [&] { return gen(Family::FCT, {1, 3}, 3) == digits("013 + 103 + 112 + 121 + 130"); });
  timed("M_13", [&] { return gen(Family::MCT, {1, 3}, 3) == digits("013 + 103 + 130"); });
  timed("QS_13", [&] {
    Polynomial p = gen(Family::RCT, {1, 3}, 3);
    return enumerate_family(Family::RCT, {1, 3}, 3).size() == 10 && p.coefficient({1, 1, 2}) == 2 &&
           p == digits("013 + 022 + 2*112 + 103 + 202 + 121 + 211 + 130 + 220");
  });
  timed("YQS_13", [&] {
    Polynomial p = gen(Family::YCT, {1, 3}, 3);
    return p.term_count() == 5 && p == digits("130 + 121 + 112 + 103 + 013");
  });
  timed("sch_31524", [&] {
    return schubert_pd(Permutation::parse("31524")) == digits("31000 + 22000 + 30100 + 21100 + 20200");
  });
  timed("ysch_42513", [&] {
    return yschubert_pd(Permutation::parse("42513")) == digits("00013 + 00022 + 00103 + 00112 + 00202");
  });
  timed("ysch_132", [&] { return yschubert_pd(Permutation::parse("132")) == digits("011"); });
  timed("ysch_1324", [&] { return yschubert_pd(Permutation::parse("1324")) == digits("0113"); });
  timed("ysch_2314", [&] { return yschubert_pd(Permutation::parse("2314")) == digits("0013 + 0103"); });
  timed("key_102 crystal", [&] {
    return key_crystal(wcp({1, 0, 2})).character() == digits("210 + 120 + 201 + 111 + 102");
  });
  timed("ykey_201 crystal", [&] {
    return young_key_crystal(wcp({2, 0, 1})).character() == digits("012 + 021 + 102 + 111 + 201");
  });
  timed("key_032 slides", [&] {
    IndexCounts expect = {{wcp({2, 2, 1}), 1}, {wcp({0, 3, 2}), 1}, {wcp({1, 3, 1}), 1}, {wcp({2, 3, 0}), 1}};
    return key_to_fundamental_slides(wcp({0, 3, 2})) == expect;
  });
  timed("ysch_43512", [&] {
    return expand(yschubert_pd(Permutation::parse("43512")), BasisId::YKey, 5).to_string() ==
           "ykey(0,0,2,0,1) + ykey(0,0,0,0,3)";
  });
  timed("L(31254)", [&] { return lehmer_code(Permutation::parse("31254")) == wcp({2, 0, 0, 1, 0}); });
  timed("frev(31542)", [&] { return Permutation::parse("31542").frev() == Permutation::parse("42153"); });
  timed("K+ and K- of 23/122", [&] {
    Tableau tab({{1, 2, 2}, {2, 3}});
    return column_word(tab) == w("21322") && right_key(tab).to_string() == "33/222" &&
           left_key(tab).to_string() == "22/112";
  });
  timed("Knuth classes", [&] {
    auto set = [](const std::vector<Word>& v) { return std::set<Word>(v.begin(), v.end()); };
    return set(knuth_class(w("21322"))) == std::set<Word>{w("21322"), w("21232"), w("22132"), w("22312"), w("23122")} &&
           set(knuth_class(w("32322"))) ==
               std::set<Word>{w("32322"), w("33222"), w("32232"), w("23232"), w("23322")};
  });
  timed("compatible sequences", [&] {
    auto sorted = [](std::vector<Word> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    return compatible_sequences(w("22323")) == std::vector<Word>{w("11223")} &&
           compatible_sequences(w("22233")) ==
               sorted({w("22233"), w("12233"), w("11233"), w("11133"), w("11123"), w("11122")}) &&
           compatible_sequences(w("23223")) == std::vector<Word>{w("12223")} &&
           compatible_sequences(w("23232")).empty() &&
           compatible_sequences(w("22332")) == std::vector<Word>{w("11222")};
  });
  timed("maxcomp(23223)", [&] { return maxcomp(w("23223"), 3) == wcp({1, 3, 1}); });
  timed("W(032)", [&] {
    std::set<std::string> got;
    for (const auto& u : row_frank_words(wcp({0, 3, 2}))) got.insert(u.to_string());
    return got == std::set<std::string>{"33|222|", "33|122|", "33|112|", "33|111|", "23|111|",
                                        "23|112|", "23|122|", "22|111|", "22|112|"};
  });
  timed("YW(230)", [&] {
    std::set<std::string> got;
    for (const auto& u : young_row_frank_words(wcp({2, 3, 0}))) got.insert(u.to_string());
    return got == std::set<std::string>{"|222|11", "|223|11", "|233|11", "|333|11", "|333|12",
                                        "|233|12", "|223|12", "|333|22", "|233|22"};
  });
  timed("RFYC(21534)", [&] {
    std::set<std::string> got;
    for (const auto& r : rfyc(Permutation::parse("21534"))) got.insert(r.to_string());
    return got == std::set<std::string>{"(431)()()", "(1)()(43)", "(1)(4)(3)", "(41)()(3)", "(1)(43)()", "(41)(3)()"};
  });
  timed("B(21) edges", [&] {
    CrystalGraph g = build_crystal(Partition({2, 1}), 3);
    std::set<std::tuple<std::string, int, std::string>> got, expect = {
        {"2/11", 1, "2/12"}, {"3/11", 1, "3/12"}, {"3/12", 1, "3/22"}, {"3/13", 1, "3/23"},
        {"2/11", 2, "3/11"}, {"2/12", 2, "2/13"}, {"2/13", 2, "3/13"}, {"3/22", 2, "3/23"}};
    for (const auto& e : g.edges)
      got.emplace(g.labels[static_cast<std::size_t>(e.from)], e.color, g.labels[static_cast<std::size_t>(e.to)]);
    return g.labels.size() == 8 && got == expect;
  });
}

// ---- criterion 2

void multi_route(Tally& t) {
  auto t0 = Clock::now();
  for_each_main_range([&](const WeakComposition& a) {
    int n = a.length();
    Polynomial key = generating_polynomial(Family::KSSF, a.parts(), n);
    t.expect(key_ops(a) == key, "key ops " + wc(a));
    t.expect(key_via_compatible(a) == key, "key compat " + wc(a));
    t.expect(key_via_right_keys(a) == key, "key right keys " + wc(a));
    t.expect(key_via_row_frank(a) == key, "key row-frank " + wc(a));
    Polynomial ykey = generating_polynomial(Family::YKSSF, a.parts(), n);
    t.expect(ykey_ops(a) == ykey, "ykey ops " + wc(a));
    t.expect(ykey_via_compatible(a) == ykey, "ykey compat " + wc(a));
    t.expect(ykey_via_left_keys(a) == ykey, "ykey left keys " + wc(a));
    t.expect(ykey_via_row_frank(a) == ykey, "ykey row-frank " + wc(a));
  });
  t.expect(seconds_since(t0) < 180.0, "runtime over 3 min");
}

// ---- criterion 3

void duality(Tally& t) {
  const std::vector<std::pair<Family, Family>> weak = {
      {Family::YKSSF, Family::KSSF}, {Family::YASSF, Family::ASSF}, {Family::YQF, Family::QF},
      {Family::YFF, Family::FF},     {Family::YMF, Family::MF},     {Family::YLF, Family::LF}};
  for_each_main_range([&](const WeakComposition& a) {
    int n = a.length();
    for (auto [young, rev] : weak)
      t.expect(generating_polynomial(young, a.parts(), n) ==
                   generating_polynomial(rev, a.rev().parts(), n).reverse_variables(),
               std::string(family_name(young)) + " " + wc(a));
  });
  const std::vector<std::pair<Family, Family>> comp = {
      {Family::YCT, Family::RCT}, {Family::YFCT, Family::FCT}, {Family::YMCT, Family::MCT}};
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= (n == 4 ? 4 : 6); ++d)
      for (const auto& c : compositions(d, n))
        for (auto [young, rev] : comp)
          t.expect(generating_polynomial(young, c.parts(), n) ==
                       generating_polynomial(rev, c.rev().parts(), n).reverse_variables(),
                   std::string(family_name(young)) + " " + c.to_string());
}

// ---- criterion 4

void positivity(Tally& t) {
  const std::vector<std::pair<BasisId, BasisId>> arrows = {
      {BasisId::Key, BasisId::QKey},         {BasisId::QKey, BasisId::FSlide},     {BasisId::QKey, BasisId::Atom},
      {BasisId::FSlide, BasisId::MSlide},    {BasisId::FSlide, BasisId::Particle}, {BasisId::MSlide, BasisId::Monomial},
      {BasisId::Atom, BasisId::Particle},    {BasisId::Particle, BasisId::Monomial},
      {BasisId::YKey, BasisId::YQKey},       {BasisId::YQKey, BasisId::YFSlide},   {BasisId::YQKey, BasisId::YAtom},
      {BasisId::YFSlide, BasisId::YMSlide},  {BasisId::YFSlide, BasisId::YParticle},
      {BasisId::YMSlide, BasisId::Monomial}, {BasisId::YAtom, BasisId::YParticle}, {BasisId::YParticle, BasisId::Monomial},
  };
  for (int n = 1; n <= 3; ++n)
    for_each_weak(n, 5, [&](const WeakComposition& a) {
      for (auto [src, dst] : arrows) {
        Expansion e = expand(basis_polynomial(src, a.parts(), n), dst, n);
        t.expect(e.integral() && e.nonnegative(),
                 std::string(basis_name(src)) + " -> " + std::string(basis_name(dst)) + " " + wc(a));
      }
      // key_a = sum of atom_b over b <= a in the Bruhat order on rearrangements.
      std::map<std::vector<int>, mpq_class> bruhat;
      for (const auto& b : rearrangements(a))
        if (wc_leq(b, a)) bruhat[b.parts()] = 1;
      t.expect(expand(key_ops(a), BasisId::Atom, n).coeffs == bruhat, "key -> atom formula " + wc(a));
    });
}

// ---- criterion 5

void classifiers(Tally& t) {
  for (auto c : all_classifiers()) {
    ClassifierReport r = verify_classifier(c, 4, 6);
    t.expect(r.ok() && r.checked > 0, r.to_string());
  }
  // The intersections are exactly the Schur polynomials and the F_alpha.
  for (int n = 1; n <= 4; ++n)
    for_each_weak(n, 6, [&](const WeakComposition& a) {
      bool schur = key_ops(a) == schur_polynomial(a.sort(), n);
      t.expect(key_inter_ykey(a) == schur, "key-ykey schur set " + wc(a));
      Polynomial fs = basis_polynomial(BasisId::FSlide, a.parts(), n);
      bool fund = fs == basis_polynomial(BasisId::F, a.flat().parts(), n);
      t.expect(slide_intersection(a) == fund, "fs-yfs F set " + wc(a));
    });
}

// ---- criterion 6

void schubert(Tally& t) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& p : all_permutations(n)) {
      std::string id = p.to_string();
      Polynomial s = schubert_pd(p), y = yschubert_pd(p);
      t.expect(s == schubert_ops(p), "sch pd vs ops " + id);
      t.expect(y == yschubert_ops(p), "ysch pd vs ops " + id);
      t.expect(y == schubert_pd(p.rev()).reverse_variables(), "ysch = I(sch rev) " + id);
      if (is_vexillary(p)) t.expect(s == key_ops(lehmer_code(p)), "vexillary " + id);
      t.expect(ysch_via_rfyc(p) == y, "rfyc " + id);
      bool bounded = true;
      for (const auto& [e, c] : y.terms())
        for (int i = 0; i < n; ++i) bounded = bounded && e[static_cast<std::size_t>(i)] <= i;
      t.expect(bounded, "staircase " + id);
    }
}

// ---- criterion 7

void module_suite(Tally& t) {
  auto t0 = Clock::now();
  for_each_weak(3, 5, [&](const WeakComposition& a) {
    auto words = young_row_frank_words(a);
    auto basis = ykeymodule_basis(a);
    t.expect(basis.size() == words.size(), "basis size " + wc(a));
    t.expect(module_rank(basis) == static_cast<int>(words.size()), "independence " + wc(a));
    for (const auto& v : basis) t.expect(v.weights().size() == 1, "homogeneous " + wc(a));
    t.expect(module_trace(a) == generating_polynomial(Family::YKSSF, a.parts(), 3), "trace " + wc(a));
  });
  t.expect(seconds_since(t0) < 120.0, "runtime over 2 min");
}

// ---- criterion 8

void properties(Tally& t) {
  std::mt19937 rng(8675309);
  auto random_word = [&](int max_len, int alphabet) {
    std::uniform_int_distribution<int> len(0, max_len), letter(1, alphabet);
    Word v(static_cast<std::size_t>(len(rng)));
    for (int& x : v) x = letter(rng);
    return v;
  };
  for (int trial = 0; trial < 400; ++trial) {
    Word v = random_word(6, 4);
    std::string id = word_to_string(v);
    auto cls = knuth_class(v);
    Tableau p = schensted_insert(v);
    bool same = std::all_of(cls.begin(), cls.end(), [&](const Word& u) { return schensted_insert(u) == p; });
    t.expect(same, "knuth closure " + id);
    std::set<Word> image;
    for (const auto& u : cls) image.insert(frev_word(u, 4));
    auto fc = knuth_class(frev_word(v, 4));
    t.expect(image == std::set<Word>(fc.begin(), fc.end()), "knuth frev " + id);
    auto bfs = oracle::knuth_class(v);
    t.expect(std::set<Word>(cls.begin(), cls.end()) == bfs, "knuth oracle " + id);
    // Column-frank: the run lengths rearrange the column lengths of P(v).
    auto runs = colform(v);
    std::sort(runs.begin(), runs.end(), std::greater<>());
    t.expect(is_column_frank(v) == (Partition(runs) == p.shape().conjugate()), "column-frank " + id);
    t.expect(is_column_frank(column_word(p)), "column word frank " + id);
    for (int i = 1; i <= 3; ++i) {
      if (auto f = crystal_f(i, v)) {
        t.expect(crystal_e(i, *f) == v, "e f " + id);
        auto wv = content(v, 4), wf = content(*f, 4);
        t.expect(wf[i - 1] == wv[i - 1] - 1 && wf[i] == wv[i] + 1, "f weight " + id);
      }
      if (auto e = crystal_e(i, v)) t.expect(crystal_f(i, *e) == v, "f e " + id);
    }
  }
  const std::vector<std::pair<Family, Family>> pairs = {
      {Family::KSSF, Family::YKSSF}, {Family::ASSF, Family::YASSF}, {Family::QF, Family::YQF},
      {Family::FF, Family::YFF},     {Family::MF, Family::YMF},     {Family::LF, Family::YLF}};
  std::uniform_int_distribution<int> part(0, 3), len(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<int> parts(static_cast<std::size_t>(len(rng)));
    for (int& x : parts) x = part(rng);
    WeakComposition a(parts);
    int n = a.length();
    for (auto [rev, young] : pairs)
      for (const auto& f : enumerate_family(rev, a.parts(), n)) {
        Filling g = theta(f, n);
        t.expect(theta(g, n) == f, "theta involution " + wc(a));
        t.expect(is_member(young, a.rev().parts(), g, n), std::string(family_name(young)) + " theta " + wc(a));
      }
  }
  // Demazure crystal truncation with the longest word gives all of B(lambda).
  for (int d = 1; d <= 5; ++d)
    for (const auto& lam : partitions(d, 3)) {
      TableauCrystal c(lam, 3);
      std::vector<int> w0{1, 2, 1};
      auto full = c.demazure_from_highest(w0);
      t.expect(full.size() == c.vertices().size(), "full truncation " + lam.to_string());
    }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<void(Tally&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "golden examples", goldens},
      {2, "multi-route agreement", multi_route},
      {3, "duality", duality},
      {4, "expansion positivity", positivity},
      {5, "coincidence classifiers", classifiers},
      {6, "Schubert suite", schubert},
      {7, "Young key module suite", module_suite},
      {8, "property tests", properties},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Tally t;
    auto t0 = Clock::now();
    std::string error;
    try {
      c.run(t);
    } catch (const std::exception& e) {
      error = e.what();
    }
    bool ok = t.failures.empty() && error.empty();
    all = all && ok;
    std::ostringstream line;
    line << "criterion " << c.id << " (" << c.name << "): " << (ok ? "PASS" : "FAIL") << "  " << t.checks
         << " checks, " << t.failures.size() << " failures, " << seconds_since(t0) << " s";
    std::cout << line.str() << "\n";
    if (!error.empty()) std::cout << "  exception: " << error << "\n";
    for (std::size_t k = 0; k < t.failures.size() && k < 10; ++k) std::cout << "  " << t.failures[k] << "\n";
  }
  return all ? 0 : 1;
}
