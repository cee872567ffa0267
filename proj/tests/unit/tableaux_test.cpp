#include <gtest/gtest.h>

#include <random>
#include <set>

#include "keypoly/compositions.hpp"
#include "keypoly/tableau.hpp"
#include "oracles.hpp"

using namespace keypoly;

namespace {

std::set<Word> as_set(const std::vector<Word>& v) { return {v.begin(), v.end()}; }

Word w(std::string_view digits) {
  Word out;
  for (char c : digits) out.push_back(c - '0');
  return out;
}

// Every word of length at most len over 1..k.
std::vector<Word> all_words(int len, int k) {
  std::vector<Word> out{{}};
  for (std::size_t start = 0; start < out.size(); ++start) {
    if (static_cast<int>(out[start].size()) == len) continue;
    for (int x = 1; x <= k; ++x) {
      Word v = out[start];
      v.push_back(x);
      out.push_back(v);
    }
  }
  return out;
}

TEST(KeyTableau, Golden032) {
  Tableau k = key_tableau(WeakComposition({0, 3, 2}));
  EXPECT_EQ(k.to_string(), "33/222");
  EXPECT_EQ(column_word(k), w("32322"));
  EXPECT_EQ(key_tableau(WeakComposition({2, 3, 0})).to_string(), "22/112");
  EXPECT_EQ(column_word(key_tableau(WeakComposition({2, 3, 0}))), w("21212"));
}

TEST(KeyTableau, IsKeyWithWeight) {
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 6; ++d)
      for (const auto& a : weak_compositions(n, d)) {
        Tableau k = key_tableau(a);
        EXPECT_TRUE(k.is_key()) << a.to_string();
        EXPECT_EQ(k.weight(n), a);
        EXPECT_EQ(k.shape(), a.sort());
      }
}

TEST(KnuthClass, Golden32322) {
  EXPECT_EQ(as_set(knuth_class(w("32322"))),
            (std::set<Word>{w("32322"), w("33222"), w("32232"), w("23232"), w("23322")}));
}

TEST(KnuthClass, Golden21322) {
  // 23122 is one 132 -> 312 move from 21322 and is easy to miss: it is
  // in the class but not column-frank.
  EXPECT_EQ(as_set(knuth_class(w("21322"))),
            (std::set<Word>{w("21322"), w("21232"), w("22132"), w("22312"), w("23122")}));
  EXPECT_FALSE(is_column_frank(w("23122")));
}

TEST(KnuthClass, Golden21212) {
  EXPECT_EQ(as_set(knuth_class(w("21212"))),
            (std::set<Word>{w("22121"), w("22211"), w("21221"), w("21212"), w("22112")}));
}

TEST(KnuthClass, MatchesBreadthFirstOracle) {
  for (const auto& v : all_words(5, 3)) EXPECT_EQ(as_set(knuth_class(v)), oracle::knuth_class(v));
}

TEST(KnuthClass, ClosureInsertsToOneTableau) {
  for (const auto& v : all_words(6, 4)) {
    Tableau p = schensted_insert(v);
    for (const auto& u : knuth_class(v)) ASSERT_EQ(schensted_insert(u), p) << word_to_string(v);
  }
}

TEST(KnuthClass, FrevCommutesWithEquivalence) {
  for (const auto& v : all_words(5, 3)) {
    std::set<Word> image;
    for (const auto& u : knuth_class(v)) image.insert(frev_word(u, 3));
    EXPECT_EQ(image, as_set(knuth_class(frev_word(v, 3)))) << word_to_string(v);
  }
}

TEST(Insertion, RowAndColumnAgree) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> letter(1, 5), len(0, 9);
  for (int t = 0; t < 500; ++t) {
    Word v(static_cast<std::size_t>(len(rng)));
    for (int& x : v) x = letter(rng);
    auto [p, q] = rsk(v);
    EXPECT_TRUE(p.is_semistandard());
    EXPECT_EQ(p.shape(), q.shape());
    EXPECT_EQ(column_insert(v).first, p);
    // The column word of an SSYT inserts back to itself.
    EXPECT_EQ(schensted_insert(column_word(p)), p);
    EXPECT_EQ(schensted_insert(row_word(p)), p);
  }
}

TEST(ColumnForm, GoldenFactorizations) {
  // 21|32|2, 21|2|32 and 2|21|32 are column-frank; 2|2|31|2 is not.
  EXPECT_EQ(colform(w("21322")), (std::vector<int>{2, 2, 1}));
  EXPECT_EQ(colform(w("22312")), (std::vector<int>{1, 1, 2, 1}));
  EXPECT_TRUE(is_column_frank(w("21322")));
  EXPECT_TRUE(is_column_frank(w("21232")));
  EXPECT_TRUE(is_column_frank(w("22132")));
  EXPECT_FALSE(is_column_frank(w("22312")));
  auto f = column_factors(w("22312"));
  EXPECT_EQ(f, (std::vector<Word>{w("2"), w("2"), w("31"), w("2")}));
}

TEST(ColumnForm, ColumnWordsAreFrank) {
  for (int d = 0; d <= 5; ++d)
    for (const auto& lam : partitions(d, 3))
      for (const auto& t : semistandard_tableaux(lam, 3)) EXPECT_TRUE(is_column_frank(column_word(t)));
}

TEST(Keys, GoldenRightAndLeft) {
  Tableau t({{1, 2, 2}, {2, 3}});
  ASSERT_EQ(column_word(t), w("21322"));
  EXPECT_EQ(right_key(t).to_string(), "33/222");
  EXPECT_EQ(left_key(t).to_string(), "22/112");
}

TEST(Keys, KeysOfKeysAreThemselves) {
  for (int d = 0; d <= 5; ++d)
    for (const auto& a : weak_compositions(3, d)) {
      Tableau k = key_tableau(a);
      EXPECT_EQ(right_key(k), k);
      EXPECT_EQ(left_key(k), k);
    }
}

TEST(Keys, LeftBelowTableauBelowRight) {
  for (int d = 0; d <= 5; ++d)
    for (const auto& lam : partitions(d, 3))
      for (const auto& t : semistandard_tableaux(lam, 3)) {
        Tableau r = right_key(t), l = left_key(t);
        EXPECT_TRUE(r.is_key());
        EXPECT_TRUE(l.is_key());
        for (int i = 0; i < t.num_rows(); ++i)
          for (int j = 0; j < static_cast<int>(t.rows()[static_cast<std::size_t>(i)].size()); ++j) {
            EXPECT_LE(l.at(i, j), t.at(i, j));
            EXPECT_LE(t.at(i, j), r.at(i, j));
          }
      }
}

TEST(Keys, ColumnWordEquivalentToRightColumnWord) {
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 6; ++d)
      for (const auto& a : weak_compositions(n, d)) {
        Tableau k = key_tableau(a);
        EXPECT_EQ(schensted_insert(column_word(k)), schensted_insert(column_word_right(k)));
        EXPECT_EQ(frev_word(column_word(k), n), column_word_right(key_tableau(a.rev())));
      }
}

TEST(Keys, RightKeyLeftKeyDuality) {
  for (int d = 0; d <= 5; ++d)
    for (const auto& lam : partitions(d, 3)) {
      if (lam.length() > 3 || (lam.length() && lam[0] > 3)) continue;
      for (const auto& t : semistandard_tableaux(lam, 4)) {
        Tableau flipped = schensted_insert(frev_word(column_word(t), 4));
        EXPECT_EQ(left_key(flipped), frev_key(right_key(t), 4)) << t.to_string();
      }
    }
}

TEST(Standardize, NumbersEqualEntriesLeftToRight) {
  Tableau t({{1, 1, 2}, {2, 3}});
  EXPECT_EQ(standardize(t).to_string(), "35/124");
}

TEST(SemistandardTableaux, CountMatchesOracle) {
  for (int d = 0; d <= 5; ++d)
    for (const auto& lam : partitions(d, 3)) {
      mpz_class total = 0;
      const Polynomial s = oracle::schur(lam.parts(), 3);
      for (const auto& [e, c] : s.terms()) total += c;
      EXPECT_EQ(mpz_class(static_cast<long>(semistandard_tableaux(lam, 3).size())), total);
    }
}

}  // namespace
