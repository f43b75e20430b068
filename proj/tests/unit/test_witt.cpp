#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "wittcv/witt.hpp"

using namespace wittcv::witt;
using support::elem_of;
using support::poly_of;
using wittcv::ffield::FieldCtx;

namespace {

WittElement random_element(const FieldCtx& f, std::mt19937_64& rng) {
  oracle::Poly u(f.p());
  for (auto& c : u) c = static_cast<std::int64_t>(rng() % f.p());
  return elem_of(f, u);
}

}  // namespace

TEST(Witt, StructureConstants) {
  for (int p : {5, 7, 11, 13}) {
    const WittAlgebra alg(FieldCtx::make(p));
    for (int i = -1; i <= p - 2; ++i) {
      for (int j = -1; j <= p - 2; ++j) {
        EXPECT_EQ(alg.structure_constant(i, j), alg.field().from_int(j - i));
        const auto b = alg.bracket(alg.e(i), alg.e(j));
        if (i + j >= -1 && i + j <= p - 2) {
          EXPECT_EQ(b, scale(alg.field().from_int(j - i), alg.e(i + j)));
        } else {
          EXPECT_TRUE(b.is_zero());
        }
      }
    }
  }
}

TEST(Witt, BracketMatchesPolynomialOracle) {
  std::mt19937_64 rng(11);
  for (int p : {5, 7, 11, 13}) {
    const WittAlgebra alg(FieldCtx::make(p));
    for (int k = 0; k < 300; ++k) {
      const auto x = random_element(alg.field(), rng), y = random_element(alg.field(), rng);
      EXPECT_EQ(poly_of(alg.bracket(x, y)), oracle::bracket(poly_of(x), poly_of(y), p));
    }
  }
}

TEST(Witt, BracketAgreesWithMatrixCommutator) {
  std::mt19937_64 rng(12);
  const auto f = FieldCtx::make(7);
  const WittAlgebra alg(f);
  for (int k = 0; k < 200; ++k) {
    const auto x = random_element(f, rng), y = random_element(f, rng);
    const auto mx = to_matrix(x).matrix, my = to_matrix(y).matrix;
    const auto comm = wittcv::ffield::mat_sub(f, wittcv::ffield::mat_mul(f, mx, my), wittcv::ffield::mat_mul(f, my, mx));
    EXPECT_EQ(from_matrix(f, {comm}), alg.bracket(x, y));
  }
}

TEST(Witt, MatrixRoundTrip) {
  std::mt19937_64 rng(13);
  const auto f = FieldCtx::make(11);
  for (int k = 0; k < 100; ++k) {
    const auto x = random_element(f, rng);
    EXPECT_EQ(from_matrix(f, to_matrix(x)), x);
  }
  auto m = to_matrix(basis(f, 0));
  m.matrix(0, 0) = f.one();
  EXPECT_ERROR_CODE(from_matrix(f, m), NotADerivation);
}

TEST(Witt, PowerMapMatchesOracle) {
  const auto f = FieldCtx::make(5);
  for (const auto& v : wittcv::ffield::enum_vectors(f, 5)) {
    const auto x = make_element(f, v);
    const auto expected = oracle::p_power(poly_of(x), 5);
    ASSERT_EQ(poly_of(p_power(x)), expected);
    ASSERT_EQ(is_nilpotent(x), oracle::is_zero(expected));
  }
}

TEST(Witt, PowerMapGoldenValues) {
  const auto f = FieldCtx::make(5);
  // (1 + X^2) D is its own p-th power.
  EXPECT_EQ(p_power(from_ints(f, {1, 0, 1, 0, 0})), from_ints(f, {1, 0, 1, 0, 0}));
  EXPECT_TRUE(p_power(basis(f, -1)).is_zero());
  EXPECT_EQ(p_power(basis(f, 0)), basis(f, 0));
  EXPECT_TRUE(p_power(basis(f, 1)).is_zero());
}

TEST(Witt, FiltrationLevel) {
  const auto f = FieldCtx::make(7);
  EXPECT_TRUE(filtration_level(zero(f)).is_infinite());
  EXPECT_EQ(filtration_level(basis(f, 3)), Level(3));
  EXPECT_EQ(filtration_level(basis(f, 3) + basis(f, -1)), Level(-1));
  EXPECT_TRUE(in_filtration(zero(f), 6));
  EXPECT_TRUE(in_filtration(basis(f, 2), 1));
  EXPECT_FALSE(in_filtration(basis(f, 0), 1));
  EXPECT_EQ(Level(2) + Level(3), Level(5));
  EXPECT_TRUE((Level(2) + Level::infinity()).is_infinite());
}

TEST(Witt, CentralizerMatchesBruteForce) {
  const auto f = FieldCtx::make(5);
  const WittAlgebra alg(f);
  const auto all = wittcv::ffield::enum_vectors(f, 5);
  for (std::uint64_t k = 0; k < all.size(); k += 7) {
    const auto x = make_element(f, all.at(k));
    std::vector<WittElement> kernel;
    for (const auto& v : all) {
      const auto y = make_element(f, v);
      if (oracle::is_zero(oracle::bracket(poly_of(x), poly_of(y), 5))) kernel.push_back(y);
    }
    const auto z = alg.centralizer(x);
    std::uint64_t size = 1;
    for (std::size_t d = 0; d < z.dim(); ++d) size *= 5;
    ASSERT_EQ(size, kernel.size());
    for (const auto& y : kernel) ASSERT_TRUE(z.contains(y));
  }
}

TEST(Witt, CentralizerClosedForm) {
  const auto f = FieldCtx::make(7);
  const WittAlgebra alg(f);
  EXPECT_EQ(alg.centralizer(basis(f, -1)), Subspace::span(f, {basis(f, -1)}));
  EXPECT_EQ(centralizer_prediction(basis(f, 1)), Subspace::span(f, {basis(f, 1), basis(f, 5)}));
  EXPECT_EQ(centralizer_prediction(basis(f, 4)), Subspace::filtration(f, 2));
  EXPECT_EQ(alg.centralizer(basis(f, 4)), Subspace::filtration(f, 2));
  EXPECT_ERROR_CODE(centralizer_prediction(zero(f)), OutOfLemmaScope);
  EXPECT_ERROR_CODE(centralizer_prediction(basis(f, 0)), OutOfLemmaScope);
  EXPECT_ERROR_CODE(centralizer_prediction(from_ints(f, {1, 1, 0, 0, 0, 0, 0})), OutOfLemmaScope);
}

TEST(Witt, SubspaceOperations) {
  const auto f = FieldCtx::make(5);
  const auto g1 = Subspace::filtration(f, 1);
  const auto g3 = Subspace::filtration(f, 3);
  EXPECT_EQ(g1.dim(), 3u);
  EXPECT_EQ(Subspace::filtration(f, 4).dim(), 0u);
  EXPECT_TRUE(g3.is_subspace_of(g1));
  EXPECT_FALSE(g1.is_subspace_of(g3));
  EXPECT_EQ(g3.sum(g1), g1);
  const auto s = Subspace::span(f, {basis(f, -1) + basis(f, 2), basis(f, 3)});
  EXPECT_EQ(s.intersect_filtration(1), g3);
  EXPECT_TRUE(s.contains(scale(f.from_int(2), basis(f, -1) + basis(f, 2))));
  EXPECT_FALSE(s.contains(basis(f, -1)));
}

TEST(Witt, ContextChecks) {
  const WittAlgebra alg(FieldCtx::make(5));
  const auto y = basis(FieldCtx::make(7), 0);
  EXPECT_ERROR_CODE(alg.bracket(alg.e(0), y), ContextMismatch);
  EXPECT_ERROR_CODE(basis(FieldCtx::make(5), 4), BadIndex);
  EXPECT_ERROR_CODE(make_element(FieldCtx::make(5), {}), BadLength);
}

TEST(Witt, CorruptedConstant) {
  const auto f = FieldCtx::make(5);
  const WittAlgebra alg(f);
  const auto bad = alg.with_corrupted_constant(1, 2, f.zero());
  EXPECT_TRUE(alg.is_standard());
  EXPECT_FALSE(bad.is_standard());
  EXPECT_TRUE(bad.bracket(bad.e(1), bad.e(2)).is_zero());
  EXPECT_TRUE(bad.centralizer(bad.e(1)).contains(bad.e(2)));
  EXPECT_FALSE(alg.centralizer(alg.e(1)).contains(alg.e(2)));
}

TEST(Witt, TextFormat) {
  const auto f = FieldCtx::make(5);
  const auto x = from_ints(f, {1, 0, 4, 2, 0});
  EXPECT_EQ(to_string(x), "5;1;[1,0,4,2,0]");
  EXPECT_EQ(parse_element("5;1;[1,0,4,2,0]"), x);
  EXPECT_EQ(parse_element(" 5 ; 1 ; [ 1 , 0 , 4 , 2 , 0 ] "), x);

  const auto f25 = FieldCtx::make(5, 2);
  auto y = zero(f25);
  y.coeff(-1) = f25.from_digits(std::vector<std::uint32_t>{2, 3});
  EXPECT_EQ(to_string(y), "5;2;[(2,3),(0,0),(0,0),(0,0),(0,0)]");
  EXPECT_EQ(parse_element(to_string(y)), y);

  EXPECT_ERROR_CODE(parse_element("5;1;[1,0,4,2]"), BadLength);
  EXPECT_ERROR_CODE(parse_element("5;1;[1,0,4,2,5]"), ParseError);
  EXPECT_ERROR_CODE(parse_element("5;1;1,0,4,2,0"), ParseError);
  EXPECT_ERROR_CODE(parse_element("4;1;[0,0,0,0]"), NotPrime);
  EXPECT_ERROR_CODE(parse_element("5;1;[1,0,4,2,0]x"), ParseError);
}
