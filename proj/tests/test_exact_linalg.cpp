#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "lazard/rational.hpp"
#include "lazard/sparse.hpp"

using namespace lazard;

namespace {

SparseVector row(std::initializer_list<Rational> values) {
  return SparseVector::from_dense(std::vector<Rational>(values));
}

SparseMatrix matrix(std::size_t ncols, std::initializer_list<SparseVector> rows) {
  SparseMatrix m;
  m.ncols = ncols;
  for (const auto& r : rows)
    m.append(r);
  return m;
}

} // namespace

TEST(Rational, ExactArithmetic) {
  EXPECT_EQ(rational_arith(Rational(1, 2), Rational(1, 3), ArithOp::add), Rational(5, 6));
  EXPECT_EQ(rational_arith(Rational(1, 2), Rational(1, 3), ArithOp::sub), Rational(1, 6));
  EXPECT_EQ(rational_arith(Rational(2, 3), Rational(3, 4), ArithOp::mul), Rational(1, 2));
  EXPECT_EQ(rational_arith(Rational(2, 3), Rational(4, 3), ArithOp::div), Rational(1, 2));
}

TEST(Rational, AlwaysReduced) {
  EXPECT_EQ(Rational(2, 4).str(), "1/2");
  EXPECT_EQ(Rational(1, -2).str(), "-1/2");
  EXPECT_EQ(Rational(0, -7).str(), "0");
  EXPECT_EQ(Rational(6, 3).str(), "2");
  EXPECT_EQ(Rational(0, 5).denominator(), 1);
}

TEST(Rational, DivisionByZero) {
  EXPECT_THROW(rational_arith(Rational(1, 3), Rational(0), ArithOp::div), DivisionByZero);
  EXPECT_THROW(Rational(1, 0), DivisionByZero);
  EXPECT_THROW(Rational::parse("3/0"), DivisionByZero);
}

TEST(Rational, ParseRejectsGarbage) {
  for (const char* bad : {"", "1/", "/2", "abc", "1/-2", "1.5", "--1"})
    EXPECT_THROW(Rational::parse(bad), InputError) << bad;
  EXPECT_EQ(Rational::parse("+3/6"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("-4"), Rational(-4));
}

TEST(Rational, PrintParseRoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
  for (int i = 0; i < 500; ++i) {
    Rational r(num(rng), den(rng));
    EXPECT_EQ(Rational::parse(r.str()), r);
    EXPECT_EQ(Rational::parse(r.str()).str(), r.str());
  }
  // beyond 64 bits
  Rational big = Rational::parse("123456789012345678901234567891/2");
  EXPECT_EQ(big.str(), "123456789012345678901234567891/2");
}

TEST(RowReduce, Examples) {
  EXPECT_EQ(row_reduce(matrix(2, {row({1, 0}), row({0, 1})})).rank, 2u);
  EXPECT_EQ(row_reduce(matrix(2, {row({1, 2}), row({2, 4})})).rank, 1u);
  EXPECT_EQ(row_reduce(matrix(2, {row({Rational(1, 2), Rational(1, 3)}),
                                  row({Rational(1, 4), Rational(1, 6)})}))
                .rank,
            1u);
  EXPECT_EQ(row_reduce(matrix(3, {})).rank, 0u);
}

TEST(RowReduce, EchelonPivotsStrictlyIncrease) {
  auto r = row_reduce(matrix(4, {row({0, 2, 1, 0}), row({3, 0, 0, 1}), row({3, 2, 1, 1}),
                                 row({0, 0, 5, 5})}));
  EXPECT_EQ(r.rank, 3u);
  ASSERT_EQ(r.basis.size(), r.rank);
  for (std::size_t i = 1; i < r.basis.size(); ++i)
    EXPECT_LT(r.basis[i - 1].leading_column(), r.basis[i].leading_column());
  for (const auto& b : r.basis)
    EXPECT_EQ(b.leading_value(), Rational(1));
}

TEST(RowReduce, RejectsColumnsOutOfRange) {
  SparseMatrix m;
  m.ncols = 2;
  EXPECT_THROW(m.append(row({0, 0, 1})), InputError);
}

TEST(ReduceAgainst, Examples) {
  auto r = row_reduce(matrix(3, {row({1, 2, 0}), row({0, 1, 1})}));
  EXPECT_TRUE(reduce_against(row({1, 2, 0}), r.basis).empty());
  EXPECT_TRUE(reduce_against(SparseVector(), r.basis).empty());
  // support disjoint from every pivot column stays unchanged
  auto pivots_only = row_reduce(matrix(3, {row({1, 0, 0})}));
  EXPECT_EQ(reduce_against(row({0, 4, 5}), pivots_only.basis), row({0, 4, 5}));
}

TEST(RowReduce, RankIsOrderIndependent) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> val(-3, 3), zero(0, 2);
  for (int trial = 0; trial < 100; ++trial) {
    SparseMatrix m;
    m.ncols = 5;
    for (int r = 0; r < 6; ++r) {
      std::vector<Rational> dense;
      for (int c = 0; c < 5; ++c)
        dense.push_back(zero(rng) == 0 ? Rational() : Rational(val(rng), 1 + c));
      m.append(SparseVector::from_dense(dense));
    }
    const auto base = row_reduce(m);
    std::shuffle(m.rows.begin(), m.rows.end(), rng);
    const auto shuffled = row_reduce(m);
    EXPECT_EQ(base.rank, shuffled.rank);
    // reduced echelon form is unique
    EXPECT_EQ(base.basis, shuffled.basis);
    for (const auto& r : m.rows)
      EXPECT_TRUE(reduce_against(r, base.basis).empty());
  }
}

TEST(EchelonBasis, ResidualInsertGrowsRankByAtMostOne) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> val(-2, 2);
  for (int trial = 0; trial < 100; ++trial) {
    EchelonBasis basis(4);
    for (int k = 0; k < 3; ++k)
      basis.insert(row({val(rng), val(rng), val(rng), val(rng)}));
    const auto rank = basis.rank();
    const auto v = row({val(rng), val(rng), val(rng), val(rng)});
    const bool in_span = basis.contains(v);
    const auto residual = basis.residual(v);
    EXPECT_EQ(in_span, residual.empty());
    EchelonBasis grown = basis;
    grown.insert(residual);
    EXPECT_EQ(grown.rank(), rank + (in_span ? 0 : 1));
    EchelonBasis direct = basis;
    direct.insert(v);
    EXPECT_EQ(direct.reduced(), grown.reduced());
  }
}
