#include <gtest/gtest.h>

#include "keypoly/basis.hpp"
#include "keypoly/classify.hpp"
#include "keypoly/expansion.hpp"
#include "keypoly/fillings.hpp"
#include "keypoly/generators.hpp"
#include "keypoly/linalg.hpp"
#include "keypoly/module.hpp"
#include "keypoly/operators.hpp"
#include "keypoly/pipe_dream.hpp"
#include "keypoly/verify.hpp"
#include "oracles.hpp"

using namespace keypoly;
using oracle::digits;

namespace {

TEST(Linalg, RankAndSolve) {
  IntMatrix a = {{1, 2}, {2, 4}, {0, 1}};
  EXPECT_EQ(rank(a), 2);
  auto r = solve(a, {3, 6, 1});
  ASSERT_EQ(r.status, SolveStatus::Unique);
  EXPECT_EQ(r.x, (std::vector<mpq_class>{1, 1}));
  EXPECT_EQ(solve(a, {3, 7, 1}).status, SolveStatus::NotInSpan);
  EXPECT_EQ(solve(IntMatrix{{1, 1}}, {2}).status, SolveStatus::NotUnique);
  auto half = solve(IntMatrix{{2}}, {1});
  EXPECT_EQ(half.x[0], mpq_class(1, 2));
}

TEST(Basis, NamesRoundTrip) {
  EXPECT_EQ(all_bases().size(), 18u);
  for (auto b : all_bases()) EXPECT_EQ(parse_basis(basis_name(b)), b);
  EXPECT_FALSE(parse_basis("nope").has_value());
}

TEST(Basis, SchurMatchesOracle) {
  EXPECT_EQ(schur_polynomial(Partition({2, 1}), 3).term_count(), 7u);
  EXPECT_EQ(schur_polynomial(Partition({2, 1}), 3), oracle::schur({2, 1}, 3));
}

TEST(Expansion, GoldenYoungSchubert43512) {
  Expansion e = expand(yschubert_pd(Permutation::parse("43512")), BasisId::YKey, 5);
  EXPECT_EQ(e.to_string(), "ykey(0,0,2,0,1) + ykey(0,0,0,0,3)");
}

TEST(Expansion, GoldenKey032Slides) {
  Expansion e = expand(key_ops(WeakComposition({0, 3, 2})), BasisId::FSlide, 3);
  std::map<std::vector<int>, mpq_class> expect = {{{2, 2, 1}, 1}, {{0, 3, 2}, 1}, {{1, 3, 1}, 1}, {{2, 3, 0}, 1}};
  EXPECT_EQ(e.coeffs, expect);
}

TEST(Expansion, GoldenQuasisymmetricSchur13) {
  Expansion e = expand(generating_polynomial(Family::RCT, {1, 3}, 3), BasisId::F, 3);
  EXPECT_EQ(e.to_string(), "F(2,2) + F(1,3)");
}

TEST(Expansion, DeltaAtEveryIndex) {
  for (auto b : all_bases())
    for (int n = 1; n <= 3; ++n)
      for (int d = 0; d <= 4; ++d)
        for (const auto& idx : basis_indices(b, n, d)) {
          Expansion e = expand(basis_polynomial(b, idx, n), b, n);
          ASSERT_EQ(e.coeffs.size(), 1u) << basis_name(b) << " " << join_ints(idx);
          EXPECT_EQ(e.coeffs.begin()->first, idx);
          EXPECT_EQ(e.coeffs.begin()->second, 1);
        }
}

TEST(Expansion, OutsideSpanAndNonIntegral) {
  // x1 is not symmetric, so it is outside the span of Schur polynomials.
  EXPECT_THROW(expand(digits("10"), BasisId::Schur, 2), ExpansionError);
  // x1 x2 - x1^2 is outside the span of F_alpha as well.
  EXPECT_THROW(expand(digits("11 - 20"), BasisId::F, 2), ExpansionError);
  Expansion mixed = expand(digits("21 + 12 - 10"), BasisId::Key, 2);
  EXPECT_EQ(mixed.reconstruct(), digits("21 + 12 - 10"));
  EXPECT_FALSE(mixed.nonnegative());
}

TEST(Expansion, KeyIntoAtomsBruhatFormula) {
  for (int n = 1; n <= 3; ++n)
    for (int d = 0; d <= 5; ++d)
      for (const auto& a : weak_compositions(n, d)) {
        Expansion formula = key_to_atoms(a);
        EXPECT_EQ(formula.coeffs, expand(key_ops(a), BasisId::Atom, n).coeffs) << a.to_string();
        EXPECT_EQ(formula.reconstruct(), key_ops(a));
      }
}

TEST(Expansion, SchurDecompositions) {
  auto [qs, yqs] = schur_decompositions(Partition({2, 1}), 3);
  EXPECT_EQ(qs.to_string(), "QS(2,1) + QS(1,2)");
  EXPECT_EQ(qs.reconstruct(), oracle::schur({2, 1}, 3));
  EXPECT_EQ(yqs.reconstruct(), oracle::schur({2, 1}, 3));
}

TEST(Classifiers, PredicateGoldens) {
  EXPECT_TRUE(key_inter_ykey(WeakComposition({0, 1, 2})));
  EXPECT_FALSE(key_inter_ykey(WeakComposition({0, 3, 2})));
  EXPECT_TRUE(atom_eq_yatom(WeakComposition({1, 2, 1})));
  EXPECT_FALSE(atom_eq_yatom(WeakComposition({1, 0, 3})));
  EXPECT_TRUE(slide_intersection(WeakComposition({0, 1, 3})));
  EXPECT_FALSE(slide_intersection(WeakComposition({1, 0, 3})));
  EXPECT_FALSE(yqs_eq_qs(Composition({1, 3}), 3));
  EXPECT_TRUE(yqs_eq_qs(Composition({2, 2}), 3));
  EXPECT_TRUE(fp_eq_yfp(WeakComposition({1, 0, 1})));
  EXPECT_FALSE(fp_eq_yfp(WeakComposition({1, 0, 3})));
}

TEST(Classifiers, AgreeWithExhaustiveSearch) {
  for (auto c : all_classifiers()) {
    auto r = verify_classifier(c, 4, 6);
    EXPECT_TRUE(r.ok()) << r.to_string();
    EXPECT_GT(r.checked, 0);
  }
}

TEST(Module, YoungKeyModule230) {
  WeakComposition a({2, 3, 0});
  auto basis = ykeymodule_basis(a);
  EXPECT_EQ(basis.size(), 9u);
  EXPECT_EQ(module_rank(basis), 9);
  EXPECT_EQ(ykeymodule_dimension(a), 9);
  EXPECT_EQ(module_trace(a), ykey_ops(a));
  for (const auto& v : basis) EXPECT_EQ(v.weights().size(), 1u);
}

TEST(Module, TraceIsYoungKeyForSmallIndices) {
  for (int d = 0; d <= 5; ++d)
    for (const auto& a : weak_compositions(3, d)) {
      auto basis = ykeymodule_basis(a);
      EXPECT_EQ(module_rank(basis), static_cast<int>(young_row_frank_words(a).size())) << a.to_string();
      EXPECT_EQ(module_trace(a), generating_polynomial(Family::YKSSF, a.parts(), 3)) << a.to_string();
    }
}

TEST(VerifyRegistry, EveryTheoremPassesAtDefaults) {
  ASSERT_FALSE(theorems().empty());
  for (const auto& t : theorems()) {
    auto r = run_theorem(t, t.defaults);
    EXPECT_TRUE(r.ok()) << r.to_string();
    EXPECT_GT(r.checked, 0) << t.id;
  }
  EXPECT_EQ(find_theorem("no-such-theorem"), nullptr);
}

}  // namespace
