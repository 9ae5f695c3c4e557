#include <random>

#include "doctest.h"
#include "ospx/errors.hpp"
#include "ospx/linalg.hpp"

using namespace ospx;

namespace {

Matrix rows_of(const Field& F, std::initializer_list<std::initializer_list<int>> rs) {
  std::vector<Vec> rows;
  std::size_t cols = 0;
  for (auto r : rs) {
    Vec v;
    for (int x : r) v.push_back(F.make(x));
    cols = v.size();
    rows.push_back(v);
  }
  return Matrix::from_rows(F, cols, rows);
}

Matrix random_matrix(const Field& F, std::size_t r, std::size_t c, std::mt19937& g) {
  std::uniform_int_distribution<int> d(-2, 2);
  Matrix M(F, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) M.at(i, j) = F.make(d(g));
  return M;
}

}  // namespace

TEST_CASE("rank on small matrices") {
  Field Q = Field::rationals();
  CHECK(rank(Matrix::identity(Q, 2)) == 2);
  CHECK(rank(Matrix(Q, 3, 5)) == 0);
  CHECK(rank(rows_of(Q, {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel basis") {
  Field Q = Field::rationals();
  CHECK(kernel_basis(Matrix::identity(Q, 3)).empty());
  CHECK(kernel_basis(Matrix(Q, 2, 3)).size() == 3);

  Field F5 = Field::prime(5);
  Matrix M = rows_of(F5, {{1, 1, 0}});
  auto K = kernel_basis(M);
  REQUIRE(K.size() == 2);
  for (const auto& k : K) CHECK(is_zero(M.apply(k)));
  // brute force over F5^3: the solution set has 5^dim elements
  std::size_t solutions = 0;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c) solutions += is_zero(M.apply({F5.make(a), F5.make(b), F5.make(c)}));
  CHECK(solutions == 25);
}

TEST_CASE("solve") {
  Field Q = Field::rationals();
  Vec b = {Q.make(3), Q.make(-1, 2)};
  CHECK(solve(Matrix::identity(Q, 2), b) == std::optional<Vec>(b));
  auto x = solve(rows_of(Q, {{2}}), {Q.make(1)});
  REQUIRE(x);
  CHECK((*x)[0] == Q.make(1, 2));
  CHECK_FALSE(solve(rows_of(Q, {{0}}), {Q.make(1)}));
}

TEST_CASE("scalars spill into GMP and come back") {
  Field Q = Field::rationals();
  Scalar big = Q.make(std::int64_t(1) << 62);
  Scalar sq = big * big;
  CHECK(sq / big == big);
  CHECK((sq - sq).is_zero());
  CHECK(Q.parse("6/4") == Q.make(3, 2));
  Field F7 = Field::prime(7);
  CHECK(F7.make(3) * F7.make(5) == F7.make(1));
  CHECK(F7.make(3).inverse() == F7.make(5));
}

TEST_CASE("mixed fields are rejected") {
  Scalar a = Field::rationals().make(1), b = Field::prime(3).make(1);
  CHECK_THROWS_AS(a + b, InvalidInput);
}

TEST_CASE("rank-nullity, sparse rank and echelon insertion agree") {
  std::mt19937 g(7);
  for (const Field& F : {Field::rationals(), Field::prime(7)}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t r = 1 + g() % 6, c = 1 + g() % 6;
      Matrix M = random_matrix(F, r, c, g);
      std::size_t rk = rank(M);
      CHECK(rk + kernel_basis(M).size() == c);
      CHECK(rank(M.transpose()) == rk);
      std::vector<SparseVec> rows;
      EchelonBasis E(F, c);
      std::size_t grew = 0;
      for (std::size_t i = 0; i < r; ++i) {
        rows.push_back(to_sparse(M.row(i)));
        grew += E.insert(M.row(i));
      }
      CHECK(sparse_rank(F, rows) == rk);
      CHECK(grew == rk);
      for (std::size_t i = 0; i < r; ++i) CHECK(E.contains(M.row(i)));
    }
  }
}

TEST_CASE("intersection dimension formula") {
  std::mt19937 g(11);
  Field Q = Field::rationals();
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + g() % 4;
    Matrix U = random_matrix(Q, 1 + g() % n, n, g), W = random_matrix(Q, 1 + g() % n, n, g);
    std::vector<Vec> u, w, both;
    for (std::size_t i = 0; i < U.rows(); ++i) u.push_back(U.row(i)), both.push_back(U.row(i));
    for (std::size_t i = 0; i < W.rows(); ++i) w.push_back(W.row(i)), both.push_back(W.row(i));
    std::size_t sum = rank(Matrix::from_rows(Q, n, both));
    CHECK(intersect(Q, n, u, w).size() == rank(U) + rank(W) - sum);
  }
}
