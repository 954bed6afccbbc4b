#include <gtest/gtest.h>

#include <random>

#include "nsg/error.hpp"
#include "nsg/linalg.hpp"

using namespace nsg;

namespace {

DenseMatrix random_matrix(const PrimeField& f, std::size_t r, std::size_t c, std::mt19937& rng) {
  DenseMatrix m(r, c);
  std::uniform_int_distribution<std::uint32_t> d(0, f.prime() - 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Count of vectors v with m v = 0, by enumeration.
std::size_t brute_kernel_size(const PrimeField& f, const DenseMatrix& m) {
  const std::size_t n = m.cols();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= f.prime();
  std::size_t count = 0;
  Vec v(n, 0);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t x = code;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = static_cast<Coeff>(x % f.prime());
      x /= f.prime();
    }
    if (is_zero(apply(f, m, v))) ++count;
  }
  return count;
}

std::size_t power(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST(PrimeField, ArithmeticAndErrors) {
  PrimeField f(101);
  EXPECT_EQ(f.mul(f.inv(7), 7), 1u);
  EXPECT_EQ(f.from_int(-1), 100u);
  EXPECT_EQ(f.to_signed(100), -1);
  EXPECT_THROW(PrimeField(100), Error);
  EXPECT_THROW(PrimeField(1), Error);
  EXPECT_TRUE(is_prime(2));
  EXPECT_FALSE(is_prime(91));
}

TEST(Linalg, KernelMatchesEnumeration) {
  std::mt19937 rng(7);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    PrimeField f(p);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t r = 1 + rng() % 5, c = 1 + rng() % (p == 5 ? 5 : 7);
      auto m = random_matrix(f, r, c, rng);
      auto k = kernel(f, m);
      for (const auto& v : k) EXPECT_TRUE(is_zero(apply(f, m, v)));
      EXPECT_EQ(Subspace::span(f, c, k).dim(), k.size());
      EXPECT_EQ(power(p, k.size()), brute_kernel_size(f, m));
      EXPECT_EQ(rank(f, m) + k.size(), c);
    }
  }
}

TEST(Linalg, SubspaceIntersectionDimension) {
  std::mt19937 rng(11);
  PrimeField f(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 6;
    auto a = random_matrix(f, 1 + rng() % 4, n, rng);
    auto b = random_matrix(f, 1 + rng() % 4, n, rng);
    std::vector<Vec> av, bv;
    for (std::size_t i = 0; i < a.rows(); ++i) av.push_back(a.row(i));
    for (std::size_t i = 0; i < b.rows(); ++i) bv.push_back(b.row(i));
    auto A = Subspace::span(f, n, av), B = Subspace::span(f, n, bv);
    auto S = Subspace::sum(A, B), I = Subspace::intersection(A, B);
    EXPECT_EQ(A.dim() + B.dim(), S.dim() + I.dim());
    EXPECT_TRUE(I.contained_in(A));
    EXPECT_TRUE(I.contained_in(B));
    EXPECT_TRUE(A.contained_in(S));
  }
}

TEST(Linalg, ReducedEchelonIsCanonical) {
  PrimeField f(3);
  std::vector<Vec> a{{1, 1, 0}, {0, 1, 1}};
  std::vector<Vec> b{{1, 0, 2}, {1, 2, 1}};
  EXPECT_EQ(Subspace::span(f, 3, a), Subspace::span(f, 3, b));
  EXPECT_TRUE(Subspace::whole(f, 3).contains({2, 2, 1}));
}
