#include <gtest/gtest.h>

#include <random>

#include "lazard/corpus.hpp"
#include "lazard/elimination.hpp"
#include "lazard/io.hpp"

using namespace lazard;
using E = RelationExpr;

namespace {

E g(const char* n) { return E::gen(n); }
E br(E a, E b) { return E::bracket(std::move(a), std::move(b)); }

Presentation make(std::size_t nv, std::size_t nw, std::vector<RelationExpr> rels = {}) {
  std::vector<GeneratorDecl> gens;
  for (std::size_t i = 0; i < nv; ++i)
    gens.push_back({"v" + std::to_string(i + 1), Part::V});
  for (std::size_t i = 0; i < nw; ++i)
    gens.push_back({"w" + std::to_string(i + 1), Part::W});
  return Presentation(gens, std::move(rels));
}

Presentation sl2_half() {
  return Presentation({{"a", Part::V}, {"b", Part::W}}, {E::adpow("a", 2, g("b"))});
}

GradedDims w_degree_one(const GradedDims& dims, std::size_t nv) {
  return dims.filter([nv](const MultiDegree& d) { return d.tail_sum(nv) == 1; });
}

} // namespace

TEST(EliminationInput, ClassifiesRelationsByWDegree) {
  const EliminationInput in(make(2, 1, {br(g("v1"), g("v2")), br(g("v1"), g("w1"))}));
  EXPECT_EQ(in.a_relations().size(), 1u);
  EXPECT_EQ(in.b_relations().size(), 1u);
  EXPECT_EQ(in.v_letters(), (std::vector<Letter>{0, 1}));
  EXPECT_EQ(in.w_letters(), (std::vector<Letter>{2}));
}

TEST(EliminationInput, RejectsWDegreeTwo) {
  EXPECT_THROW(EliminationInput(make(1, 1, {br(g("w1"), br(g("w1"), g("v1")))})), InputError);
  EXPECT_THROW(EliminationInput(make(0, 2, {br(g("w1"), g("w2"))})), InputError);
}

TEST(Elimination, GIsTheQuotientOfLV) {
  const EliminationInput in(make(2, 1, {br(g("v1"), g("v2"))}));
  const auto gd = compute_g(in, 5);
  GradedDims expected(3, 5);
  expected.set(MultiDegree{1, 0, 0}, 1);
  expected.set(MultiDegree{0, 1, 0}, 1);
  EXPECT_EQ(gd, expected);
}

TEST(Elimination, ModuleMDimensions) {
  for (std::size_t nv = 0; nv <= 2; ++nv)
    for (std::size_t nw = 1; nw <= 2; ++nw) {
      const EliminationInput in(make(nv, nw));
      const auto m = compute_m_dims(in, 6, true);
      EXPECT_EQ(m, w_degree_one(witt_dims(nv + nw, 6), nv)) << nv << "," << nw;
    }
  // one V and one W letter: the slice is one-dimensional in each degree (k,1)
  const auto m = compute_m_dims(EliminationInput(make(1, 1)), 5, true);
  for (int k = 0; k <= 4; ++k)
    EXPECT_EQ(m.at(MultiDegree{k, 1}), 1);
}

TEST(Elimination, Sl2HalfModuleN) {
  const EliminationInput in(sl2_half());
  const auto n = compute_n_dims(in, 6);
  GradedDims expected(2, 6);
  expected.set(MultiDegree{0, 1}, 1);
  expected.set(MultiDegree{1, 1}, 1);
  EXPECT_EQ(n, expected);
}

TEST(Elimination, Sl2HalfPrediction) {
  const EliminationInput in(sl2_half());
  const auto g_dims = compute_g(in, 6);
  const auto predicted = predict_quotient(g_dims, compute_n_dims(in, 6), 6);
  EXPECT_EQ(predicted.at(MultiDegree{1, 0}), 1);
  EXPECT_EQ(predicted.at(MultiDegree{1, 2}), 1);
  // generated by u = b and v = [a,b] with [v,v] = 0
  EXPECT_EQ(predicted.at(MultiDegree{2, 2}), 0);
  EXPECT_EQ(predicted, quotient_dims(in.presentation(), 6));
}

TEST(Elimination, LazardEliminationWithoutRelations) {
  for (std::size_t nv = 0; nv <= 2; ++nv)
    for (std::size_t nw = 0; nw <= 2; ++nw) {
      if (nv + nw == 0)
        continue;
      const auto c = lazard_check(nv, nw, 6);
      EXPECT_TRUE(c.mismatches.empty()) << nv << "," << nw;
      EXPECT_TRUE(c.pbw_identity) << nv << "," << nw;
    }
}

TEST(Elimination, CommutingVWithBRelation) {
  const auto r = verify_elimination(EliminationInput(make(2, 1, {br(g("v1"), g("v2"))})), 6);
  EXPECT_TRUE(r.ok());
  // N is the free module U(g) w1, one dimension in every degree (i,j,1)
  for (const auto& d : multidegrees_up_to(3, 6))
    EXPECT_EQ(r.n_dims.at(d), d[2] == 1 ? 1 : 0) << d.str();
}

TEST(Elimination, EmptyWGivesG) {
  const EliminationInput in(make(2, 0, {E::adpow("v1", 2, g("v2"))}));
  const auto r = verify_elimination(in, 6);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.predicted, r.g_dims);
  EXPECT_TRUE(r.n_dims.entries().empty());
}

TEST(Elimination, EmptyVGivesFreeLieOnW) {
  const auto r = verify_elimination(EliminationInput(make(0, 2)), 6);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.predicted, witt_dims(2, 6));
}

TEST(Elimination, KillingEveryWGeneratorLeavesG) {
  const EliminationInput in(make(2, 2, {br(g("v1"), g("v2")), g("w1"), g("w2")}));
  const auto r = verify_elimination(in, 6);
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.n_dims.entries().empty());
  EXPECT_EQ(r.predicted, r.g_dims);
}

TEST(Elimination, NEqualsOracleInWDegreeOne) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 30; ++trial) {
    const EliminationInput in(random_presentation(CorpusShape{}, rng));
    const auto n = compute_n_dims(in, 5);
    const auto oracle = quotient_dims(in.presentation(), 5);
    EXPECT_EQ(n, w_degree_one(oracle, in.v_count()));
  }
}

TEST(Elimination, RandomPresentationsAgreeWithOracle) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const EliminationInput in(random_presentation(CorpusShape{}, rng));
    const auto r = verify_elimination(in, 5);
    EXPECT_TRUE(r.mismatches.empty()) << presentation_to_json(in.presentation()).dump();
    EXPECT_TRUE(r.module_failures.empty());
    const bool something_to_check =
        (!in.a_relations().empty() && !in.w_letters().empty()) ||
        (!in.b_relations().empty() && !in.v_letters().empty());
    if (something_to_check) {
      EXPECT_GT(r.module_checks, 0u);
    }
  }
}

TEST(Elimination, WrongModuleIsDetected) {
  // using M in place of N ignores the B relation and must disagree with the oracle
  const EliminationInput in(sl2_half());
  const auto wrong = predict_quotient(compute_g(in, 6), compute_m_dims(in, 6), 6);
  EXPECT_FALSE(compare_dims(wrong, quotient_dims(in.presentation(), 6)).empty());
}

TEST(Elimination, ReportSerialization) {
  const auto r = verify_elimination(EliminationInput(sl2_half()), 4);
  const auto j = report_to_json(r);
  for (const char* key : {"g_dims", "m_dims", "n_dims", "predicted", "oracle", "mismatches"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(dims_from_json(j["predicted"], 2, 4), r.predicted);
  std::ostringstream tsv;
  write_report_tsv(tsv, r);
  EXPECT_EQ(tsv.str().substr(0, tsv.str().find('\n')), "degree\tpredicted\toracle\tmatch");
  EXPECT_EQ(tsv.str().find("\tno\n"), std::string::npos);
}
