#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tpsurf/error.hpp"
#include "tpsurf/linalg.hpp"

using namespace tpsurf;

namespace {

ScalarMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, const Field& f = Field::rationals()) {
  std::uniform_int_distribution<long> d(-4, 4);
  ScalarMatrix m(r, c, f);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar::in(f, d(rng));
  return m;
}

// rank r matrix as a product (rows x r)(r x cols)
ScalarMatrix low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t r,
                      const Field& f = Field::rationals()) {
  return random_matrix(rng, rows, r, f) * random_matrix(rng, r, cols, f);
}

// Leibniz expansion for tiny matrices.
Scalar det_leibniz(const ScalarMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Scalar total(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Scalar t(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) t *= m(i, perm[i]);
    total += t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("rref of a small matrix") {
  ScalarMatrix m(2, 3);
  m(0, 0) = 1;  m(0, 1) = 2;  m(0, 2) = 3;
  m(1, 0) = 2;  m(1, 1) = 4;  m(1, 2) = 7;
  auto e = rref(m);
  CHECK(e.pivots == std::vector<std::size_t>{0, 2});
  CHECK(e.reduced(0, 1) == Scalar(2));
  CHECK(e.reduced(0, 2) == Scalar(0));
  auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == std::vector<Scalar>{Scalar(-2), Scalar(1), Scalar(0)});
}

TEST_CASE("rank and kernel on random low-rank matrices") {
  std::mt19937_64 rng(17);
  for (const Field& f : {Field::rationals(), Field::prime(1000003)}) {
    for (std::size_t r = 0; r <= 5; ++r) {
      auto m = low_rank(rng, 6, 8, r, f);
      CHECK(rank(m) == r);
      auto k = kernel_basis(m);
      CHECK(k.size() == 8 - r);
      for (const auto& v : k) {
        auto mv = m * std::span<const Scalar>(v);
        for (const auto& x : mv) CHECK(x.is_zero());
      }
    }
  }
}

TEST_CASE("rank mod p matches the rational rank") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 10; ++i) {
    auto m = low_rank(rng, 7, 7, static_cast<std::size_t>(i % 7));
    CHECK(rank_mod(m, 2305843009213693951ull) == rank(m));
  }
  ScalarMatrix half(1, 1);
  half(0, 0) = Scalar(mpq_class(1, 3));
  CHECK_THROWS_AS(rank_mod(half, 3), Error);
}

TEST_CASE("determinants") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 10; ++i) {
    auto m = random_matrix(rng, 5, 5);
    m(0, 0) = Scalar(mpq_class(1, 3));
    CHECK(det_scalar(m) == det_leibniz(m));
    auto mp = random_matrix(rng, 5, 5, Field::prime(101));
    CHECK(det_scalar(mp) == det_leibniz(mp));
  }
  CHECK(det_scalar(ScalarMatrix::identity(4)).is_one());
  CHECK(det_scalar(low_rank(rng, 5, 5, 4)).is_zero());
  CHECK_THROWS_AS(det_scalar(ScalarMatrix(2, 3)), Error);
}

TEST_CASE("inverse and solve") {
  std::mt19937_64 rng(31);
  auto m = random_matrix(rng, 4, 4);
  while (det_scalar(m).is_zero()) m = random_matrix(rng, 4, 4);
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(*inv * m == ScalarMatrix::identity(4));
  CHECK_FALSE(inverse(low_rank(rng, 4, 4, 2)).has_value());

  std::vector<Scalar> rhs{Scalar(1), Scalar(2), Scalar(3), Scalar(4)};
  auto x = solve(m, rhs);
  REQUIRE(x.has_value());
  CHECK(m * std::span<const Scalar>(*x) == rhs);
}

TEST_CASE("transpose and field reduction") {
  std::mt19937_64 rng(37);
  auto m = random_matrix(rng, 3, 5);
  CHECK(m.transpose().transpose() == m);
  CHECK(m.to_field(Field::prime(7)).field() == Field::prime(7));
  CHECK(m.field().is_rational());
}
