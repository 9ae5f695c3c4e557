#include "doctest.h"
#include "ospx/supermatrix.hpp"

using namespace ospx;

TEST_CASE("degrees of matrix units") {
  AlgebraPtr Q = preset_algebra("ground_field_id:Q");
  MatrixShape s{1, 1};
  CHECK(matrix_unit(s, Q, 1, 1, Q->unit()).degree() == 0);
  CHECK(matrix_unit(s, Q, 1, 2, Q->unit()).degree() == 1);
  AlgebraPtr L = preset_algebra("grassmann_id:Q");
  CHECK(matrix_unit(s, L, 2, 3, L->basis(1)).degree() == 1);
  CHECK(matrix_unit(s, L, 1, 2, L->basis(1)).degree() == 0);
  CHECK_FALSE((matrix_unit(s, L, 1, 1, L->unit()) + matrix_unit(s, L, 1, 2, L->unit())).degree());
}

TEST_CASE("supercommutators of matrix units") {
  AlgebraPtr Q = preset_algebra("ground_field_id:Q");
  MatrixShape s{1, 1};
  auto e = [&](std::size_t i, std::size_t j) { return matrix_unit(s, Q, i, j, Q->unit()); };
  CHECK(supercommutator(e(1, 2), e(2, 1)) == e(1, 1) + e(2, 2));
  CHECK(supercommutator(e(1, 1), e(1, 1)).is_zero());
  CHECK(supercommutator(e(1, 1), e(2, 2)).is_zero());
  CHECK(SuperMatrix(s, Q).is_zero());
  CHECK(is_zero(SuperMatrix(s, Q).flatten()));
}

TEST_CASE("flat coordinates") {
  AlgebraPtr R = preset_algebra("dual_numbers_id:Q");
  MatrixShape s{2, 1};
  SuperMatrix X = matrix_unit(s, R, 2, 3, R->basis(1));
  const std::size_t N = s.size(), d = R->dim();
  Vec expect = zeros(R->field(), N * N * d);
  expect[(1 * N + 2) * d + 1] = R->field().one();
  CHECK(X.flatten() == expect);
  CHECK(SuperMatrix::unflatten(s, R, expect) == X);
}

TEST_CASE("osp involution is a superinvolution on matrix units") {
  for (std::string id : {"dual_numbers_id:Q", "grassmann_id:Q", "s_plus_sop:Q"}) {
    AlgebraPtr R = preset_algebra(id);
    MatrixShape s{1, 1};
    std::vector<SuperMatrix> units;
    for (std::size_t i = 1; i <= s.size(); ++i)
      for (std::size_t j = 1; j <= s.size(); ++j)
        for (std::size_t k = 0; k < R->dim(); ++k) units.push_back(matrix_unit(s, R, i, j, R->basis(k)));
    for (const auto& X : units) {
      CHECK(osp_involution(osp_involution(X)) == X);
      for (const auto& Y : units) {
        SuperMatrix rhs = osp_involution(Y) * osp_involution(X);
        if (*X.degree() & *Y.degree()) rhs = rhs.scaled(R->field().make(-1));
        CHECK(osp_involution(X * Y) == rhs);
      }
    }
  }
}
