#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "wittcv/ffield.hpp"

using namespace wittcv::ffield;

namespace {

// F_p[t]/(modulus) multiplication on digit vectors, schoolbook.
std::vector<std::int64_t> naive_mul(const FieldCtx& f, Elem a, Elem b) {
  const auto p = static_cast<std::int64_t>(f.p());
  const int m = f.m();
  const auto da = f.digits(a), db = f.digits(b);
  std::vector<std::int64_t> prod(2 * m, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + std::int64_t(da[i]) * db[j]) % p;
  }
  const auto mod = f.modulus();
  for (int k = 2 * m - 1; k >= m; --k) {
    const auto lead = prod[k];
    for (int j = 0; j <= m; ++j) prod[k - m + j] = oracle::mod(prod[k - m + j] - lead * mod[j], p);
  }
  prod.resize(m);
  return prod;
}

std::vector<std::int64_t> digits_of(const FieldCtx& f, Elem a) {
  const auto d = f.digits(a);
  return {d.begin(), d.begin() + f.m()};
}

bool has_root(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t v = 0;
    for (std::size_t k = poly.size(); k-- > 0;) v = (v * x + poly[k]) % p;
    if (v == 0) return true;
  }
  return false;
}

}  // namespace

TEST(FieldCtx, RejectsBadCharacteristic) {
  EXPECT_ERROR_CODE(FieldCtx::make(4), NotPrime);
  EXPECT_ERROR_CODE(FieldCtx::make(1), NotPrime);
  EXPECT_ERROR_CODE(FieldCtx::make(-7), NotPrime);
  EXPECT_ERROR_CODE(FieldCtx::make(3), CharTooSmall);
  EXPECT_ERROR_CODE(FieldCtx::make(2), CharTooSmall);
  EXPECT_ERROR_CODE(FieldCtx::make(5, 4), DegreeUnsupported);
  EXPECT_ERROR_CODE(FieldCtx::make(5, 0), DegreeUnsupported);
  EXPECT_NO_THROW(FieldCtx::make(13, 3));
}

TEST(FieldCtx, OrdersAndModuli) {
  EXPECT_EQ(FieldCtx::make(5).q(), 5u);
  EXPECT_TRUE(FieldCtx::make(5).modulus().empty());
  EXPECT_EQ(FieldCtx::make(5, 2).q(), 25u);
  EXPECT_EQ(FieldCtx::make(7, 3).q(), 343u);
  EXPECT_EQ(FieldCtx::make(5, 2).modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
}

// For degree 2 and 3, irreducible means rootless; search lexicographically
// with the constant term compared first.
TEST(FieldCtx, ModulusIsSmallestIrreducibleByRootSearch) {
  for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
    for (int m : {2, 3}) {
      std::vector<std::uint32_t> expected;
      std::vector<std::uint32_t> c(m, 0);
      while (expected.empty()) {
        std::vector<std::uint32_t> poly(c);
        poly.push_back(1);
        if (!has_root(p, poly)) expected = poly;
        int pos = m - 1;
        while (pos >= 0 && ++c[pos] == p) c[pos--] = 0;
      }
      EXPECT_EQ(FieldCtx::make(p, m).modulus(), expected) << p << "^" << m;
      EXPECT_TRUE(is_irreducible(p, expected));
    }
  }
}

TEST(FieldCtx, PrimeFieldArithmetic) {
  const auto f = FieldCtx::make(7);
  for (std::int64_t a = 0; a < 7; ++a) {
    for (std::int64_t b = 0; b < 7; ++b) {
      EXPECT_EQ(f.add(f.from_int(a), f.from_int(b)), f.from_int(a + b));
      EXPECT_EQ(f.sub(f.from_int(a), f.from_int(b)), f.from_int(a - b));
      EXPECT_EQ(f.mul(f.from_int(a), f.from_int(b)), f.from_int(a * b));
    }
    if (a != 0) EXPECT_EQ(f.mul(f.inv(f.from_int(a)), f.from_int(a)), f.one());
  }
  EXPECT_EQ(f.from_int(-1), f.from_int(6));
  EXPECT_ERROR_CODE(f.inv(f.zero()), DivisionByZero);
}

TEST(FieldCtx, ExtensionMultiplicationMatchesSchoolbook) {
  for (auto [p, m] : {std::pair{5, 2}, std::pair{7, 2}, std::pair{5, 3}}) {
    const auto f = FieldCtx::make(p, m);
    for (std::uint64_t a = 0; a < f.q(); ++a) {
      for (std::uint64_t b = 0; b < f.q(); ++b) {
        const Elem x = f.element(a), y = f.element(b);
        ASSERT_EQ(digits_of(f, f.mul(x, y)), naive_mul(f, x, y));
      }
    }
  }
}

// 13^3 exceeds the lookup-table size, so this goes through the polynomial path.
TEST(FieldCtx, LargeExtensionWithoutTables) {
  const auto f = FieldCtx::make(13, 3);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 20000; ++k) {
    const Elem x = f.element(rng() % f.q()), y = f.element(rng() % f.q());
    ASSERT_EQ(digits_of(f, f.mul(x, y)), naive_mul(f, x, y));
    if (x.code != 0) ASSERT_EQ(f.mul(x, f.inv(x)), f.one());
  }
}

TEST(FieldCtx, FieldAxiomsOverF25) {
  const auto f = FieldCtx::make(5, 2);
  for (std::uint64_t a = 0; a < f.q(); ++a) {
    const Elem x = f.element(a);
    EXPECT_EQ(f.add(x, f.neg(x)), f.zero());
    EXPECT_EQ(f.pow(x, f.q()), x);
    if (a != 0) EXPECT_EQ(f.mul(x, f.inv(x)), f.one());
    for (std::uint64_t b = 0; b < f.q(); ++b) {
      const Elem y = f.element(b);
      EXPECT_EQ(f.mul(x, y), f.mul(y, x));
      for (std::uint64_t c = 0; c < f.q(); c += 3) {
        const Elem z = f.element(c);
        ASSERT_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
        ASSERT_EQ(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
      }
    }
  }
}

TEST(FieldCtx, DigitsRoundTrip) {
  const auto f = FieldCtx::make(7, 3);
  for (std::uint64_t a = 0; a < f.q(); ++a) {
    const auto d = f.digits(f.element(a));
    EXPECT_EQ(f.from_digits(std::vector<std::uint32_t>(d.begin(), d.begin() + 3)).code, a);
  }
  EXPECT_ERROR_CODE(f.from_digits(std::vector<std::uint32_t>{1, 2}), BadLength);
  EXPECT_ERROR_CODE(f.element(343), BadIndex);
}

TEST(FieldCtx, DotMatchesNaiveSum) {
  const auto f = FieldCtx::make(13);
  std::mt19937_64 rng(9);
  for (int k = 0; k < 200; ++k) {
    std::vector<Elem> a(50), b(50);
    Elem expect = f.zero();
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] = f.element(rng() % 13);
      b[i] = f.element(rng() % 13);
      expect = f.add(expect, f.mul(a[i], b[i]));
    }
    EXPECT_EQ(f.dot(a, b), expect);
  }
}

TEST(FieldCtx, EqualityIgnoresCaches) {
  EXPECT_EQ(FieldCtx::make(5, 2), FieldCtx::make(5, 2));
  EXPECT_NE(FieldCtx::make(5, 2), FieldCtx::make(5, 1));
  EXPECT_NE(FieldCtx::make(5), FieldCtx::make(7));
}

TEST(Matrix, InverseAndProducts) {
  const auto f = FieldCtx::make(7);
  std::mt19937_64 rng(1);
  int inverted = 0;
  for (int k = 0; k < 50; ++k) {
    Matrix a(5, 5);
    for (std::size_t r = 0; r < 5; ++r) {
      for (std::size_t c = 0; c < 5; ++c) a(r, c) = f.element(rng() % 7);
    }
    const auto e = row_reduce(f, a);
    if (e.rank() < 5) {
      EXPECT_ERROR_CODE(mat_inverse(f, a), Singular);
      continue;
    }
    ++inverted;
    EXPECT_EQ(mat_mul(f, a, mat_inverse(f, a)), Matrix::identity(5));
    EXPECT_EQ(mat_pow(f, a, 3), mat_mul(f, a, mat_mul(f, a, a)));
  }
  EXPECT_GT(inverted, 30);
  EXPECT_EQ(mat_pow(f, Matrix(3, 3), 0), Matrix::identity(3));
  EXPECT_ERROR_CODE(mat_pow(f, Matrix(2, 3), 2), NotSquare);
}

TEST(Matrix, NullspaceIsKernel) {
  const auto f = FieldCtx::make(5);
  Matrix a(3, 5);
  // rows: e0 + e1, e2 - e3, 2 e0 + 2 e1
  a(0, 0) = f.one();
  a(0, 1) = f.one();
  a(1, 2) = f.one();
  a(1, 3) = f.from_int(-1);
  a(2, 0) = f.from_int(2);
  a(2, 1) = f.from_int(2);
  EXPECT_EQ(row_reduce(f, a).rank(), 2u);
  const auto kernel = mat_nullspace(f, a);
  ASSERT_EQ(kernel.size(), 3u);
  for (const auto& v : kernel) {
    for (auto c : mat_vec(f, a, v)) EXPECT_EQ(c, f.zero());
  }
}

TEST(Enumeration, OdometerOrder) {
  const auto f = FieldCtx::make(5);
  const auto e = enum_vectors(f, 3);
  EXPECT_EQ(e.size(), 125u);
  std::uint64_t index = 0;
  for (const auto& v : e) {
    EXPECT_EQ(v, e.at(index));
    EXPECT_EQ(v[0].code * 25 + v[1].code * 5 + v[2].code, index);
    ++index;
  }
  EXPECT_EQ(index, 125u);
  std::uint64_t seen = 0;
  for (const auto& v : e.range(40, 47)) {
    EXPECT_EQ(v, e.at(40 + seen));
    ++seen;
  }
  EXPECT_EQ(seen, 7u);
}

TEST(Enumeration, Bounded) {
  const auto f = FieldCtx::make(13);
  EXPECT_ERROR_CODE(enum_vectors(f, 13), SizeOverflow);
  EXPECT_EQ(checked_power(13, 8, 1'000'000'000), 815730721u);
  EXPECT_ERROR_CODE(checked_power(13, 9, 1'000'000'000), SizeOverflow);
}
