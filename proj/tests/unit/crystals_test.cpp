#include <gtest/gtest.h>

#include <random>
#include <set>

#include "keypoly/compositions.hpp"
#include "keypoly/crystal.hpp"
#include "keypoly/fillings.hpp"
#include "keypoly/generators.hpp"
#include "oracles.hpp"

using namespace keypoly;
using oracle::digits;

namespace {

std::set<std::tuple<std::string, int, std::string>> labelled_edges(const CrystalGraph& g) {
  std::set<std::tuple<std::string, int, std::string>> out;
  for (const auto& e : g.edges)
    out.emplace(g.labels[static_cast<std::size_t>(e.from)], e.color, g.labels[static_cast<std::size_t>(e.to)]);
  return out;
}

TEST(CrystalB21, EightEdges) {
  CrystalGraph g = build_crystal(Partition({2, 1}), 3);
  EXPECT_EQ(g.labels.size(), 8u);
  std::set<std::tuple<std::string, int, std::string>> expect = {
      {"2/11", 1, "2/12"}, {"3/11", 1, "3/12"}, {"3/12", 1, "3/22"}, {"3/13", 1, "3/23"},
      {"2/11", 2, "3/11"}, {"2/12", 2, "2/13"}, {"2/13", 2, "3/13"}, {"3/22", 2, "3/23"},
  };
  EXPECT_EQ(labelled_edges(g), expect);
  EXPECT_EQ(g.character(), oracle::schur({2, 1}, 3));
}

TEST(CrystalB21, DemazureGoldens) {
  // Highest weight truncation along s2 s1 and lowest weight truncation along s1 s2.
  EXPECT_EQ(key_crystal(WeakComposition({1, 0, 2})).character(), digits("210 + 120 + 201 + 111 + 102"));
  EXPECT_EQ(young_key_crystal(WeakComposition({2, 0, 1})).character(), digits("012 + 021 + 102 + 111 + 201"));
  EXPECT_EQ(TableauCrystal(Partition({2, 1}), 3).highest_weight().to_string(), "2/11");
  EXPECT_EQ(TableauCrystal(Partition({2, 1}), 3).lowest_weight().to_string(), "3/23");
}

TEST(Kashiwara, BracketRuleOnWords) {
  // 1 2 1: the 2 pairs with the last 1, leaving the first 1 unmatched.
  EXPECT_EQ(crystal_f(1, Word{1, 2, 1}), (Word{2, 2, 1}));
  EXPECT_EQ(crystal_e(1, Word{2, 1, 2}), (Word{2, 1, 1}));
  EXPECT_FALSE(crystal_f(1, Word{2, 1}).has_value());
  EXPECT_FALSE(crystal_e(1, Word{2, 1}).has_value());
}

TEST(Kashiwara, AxiomsOnRandomWords) {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> letter(1, 4), len(0, 10);
  for (int t = 0; t < 1000; ++t) {
    Word v(static_cast<std::size_t>(len(rng)));
    for (int& x : v) x = letter(rng);
    for (int i = 1; i <= 3; ++i) {
      if (auto f = crystal_f(i, v)) {
        EXPECT_EQ(crystal_e(i, *f), v);
        auto wv = content(v, 4), wf = content(*f, 4);
        EXPECT_EQ(wf[i - 1], wv[i - 1] - 1);
        EXPECT_EQ(wf[i], wv[i] + 1);
      }
      if (auto e = crystal_e(i, v)) EXPECT_EQ(crystal_f(i, *e), v);
    }
  }
}

TEST(TableauCrystal, AxiomsAndFullTruncation) {
  for (int d = 1; d <= 5; ++d)
    for (const auto& lam : partitions(d, 3)) {
      TableauCrystal c(lam, 3);
      for (const auto& t : c.vertices())
        for (int i = 1; i <= 2; ++i) {
          if (auto f = c.f(i, t)) {
            EXPECT_TRUE(f->is_semistandard());
            EXPECT_EQ(c.e(i, *f), t);
          }
          if (auto e = c.e(i, t)) EXPECT_EQ(c.f(i, *e), t);
        }
      std::vector<int> w0{1, 2, 1};
      auto full = c.demazure_from_highest(w0);
      auto all = c.vertices();
      std::sort(full.begin(), full.end());
      std::sort(all.begin(), all.end());
      EXPECT_EQ(full, all);
      auto low = c.demazure_from_lowest(w0);
      std::sort(low.begin(), low.end());
      EXPECT_EQ(low, all);
    }
}

TEST(DemazureCrystal, CharactersAreKeys) {
  for (int n = 2; n <= 3; ++n)
    for (int d = 0; d <= 5; ++d)
      for (const auto& a : weak_compositions(n, d)) {
        EXPECT_EQ(key_crystal(a).character(), generating_polynomial(Family::KSSF, a.parts(), n)) << a.to_string();
        EXPECT_EQ(young_key_crystal(a).character(), generating_polynomial(Family::YKSSF, a.parts(), n))
            << a.to_string();
      }
}

TEST(ReducedFactorizations, Count21534) {
  Permutation w = Permutation::parse("21534");
  EXPECT_EQ(rightmost_descent(w), 3);
  // Two components, of 10 and 8 factorizations.
  EXPECT_EQ(enumerate_rf(w, 3).size(), 18u);
  for (const auto& r : enumerate_rf(w, 3)) {
    int total = 0;
    for (const auto& b : r.blocks) total += static_cast<int>(b.size());
    EXPECT_EQ(total, w.length());
    EXPECT_EQ(r.weight(5).size(), w.length());
  }
}

TEST(ReducedFactorizations, YoungCutoffGolden) {
  std::set<std::string> got;
  for (const auto& r : rfyc(Permutation::parse("21534"))) got.insert(r.to_string());
  EXPECT_EQ(got, (std::set<std::string>{"(431)()()", "(1)()(43)", "(1)(4)(3)", "(41)()(3)", "(1)(43)()", "(41)(3)()"}));
}

TEST(ReducedFactorizations, YoungSchubert43512) {
  Polynomial p = ysch_via_rfyc(Permutation::parse("43512"));
  Polynomial k00003 = digits("00003");
  Polynomial k00201 = digits("00012 + 00021 + 00102 + 00111 + 00201");
  EXPECT_EQ(p, k00003 + k00201);
}

TEST(CrystalGraph, DotAndJsonExport) {
  CrystalGraph g = build_crystal(Partition({2, 1}), 3);
  std::string dot = g.to_dot("b21");
  EXPECT_NE(dot.find("digraph b21"), std::string::npos);
  EXPECT_NE(dot.find("->"), std::string::npos);
  EXPECT_NE(g.to_json().find("\"edges\""), std::string::npos);
}

}  // namespace
