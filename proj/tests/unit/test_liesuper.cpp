#include "doctest.h"
#include "ospx/errors.hpp"
#include "ospx/osp.hpp"

using namespace ospx;

TEST_CASE("structure-constant checks") {
  Field Q = Field::rationals();
  CHECK(verify_lie(*sl2(Q)).all_pass());
  CHECK(verify_lie(*gl2(Q)).all_pass());
  CHECK(verify_lie(*abelian(Q, 2, 3)).all_pass());
  LieSuperAlgebra bad = sl2(Q)->with_constant(0, 1, 0, Q.one());
  const Check* j = verify_lie(bad).find("jacobi");
  REQUIRE(j);
  CHECK_FALSE(j->pass);
}

TEST_CASE("derived algebra, center, perfectness") {
  Field Q = Field::rationals();
  CHECK(derived_subalgebra(abelian(Q, 2, 1)).dim() == 0);
  CHECK(derived_subalgebra(sl2(Q)).dim() == 3);
  CHECK(center(*sl2(Q)).empty());
  CHECK(center(*gl2(Q)).size() == 1);
  CHECK(center(*abelian(Q, 1, 2)).size() == 3);
  CHECK(is_perfect(*sl2(Q)));
  CHECK_FALSE(is_perfect(*abelian(Q, 1, 0)));
  AlgebraPtr R = preset_algebra("ground_field_id:Q");
  CHECK(is_perfect(build_osp(2, 1, R).osp.lie()));
  CHECK(is_perfect(build_osp(1, 1, R).osp.lie()));
}

TEST_CASE("osp-tilde of shape (1,1) over Q and closure") {
  AlgebraPtr Q = preset_algebra("ground_field_id:Q");
  OspAlgebra A = build_osp(1, 1, Q);
  CHECK(A.tilde.dim() == 5);
  CHECK(verify_lie(A.tilde.lie()).all_pass());
  auto amb = std::make_shared<MatrixAmbient>(MatrixShape{1, 1}, Q);
  // e12 alone is closed (e12 e12 = 0); e12 + e21 squares to e11 + e22
  CHECK_NOTHROW(span_subalgebra(amb, {matrix_unit({1, 1}, Q, 1, 2, Q->unit()).flatten()}));
  Vec x = (matrix_unit({1, 1}, Q, 1, 2, Q->unit()) + matrix_unit({1, 1}, Q, 2, 1, Q->unit())).flatten();
  CHECK_THROWS_AS(span_subalgebra(amb, {x}), NotClosed);
  CHECK(generated_subalgebra(amb, {x}).dim() == 2);
}

TEST_CASE("generation inside sl2") {
  Field Q = Field::rationals();
  LiePtr L = sl2(Q);
  auto amb = std::make_shared<LieAmbient>(L);
  CHECK(generated_subalgebra(amb, {L->basis(0), L->basis(2)}).dim() == 3);
  CHECK(generated_subalgebra(amb, {L->basis(1)}).dim() == 1);
  CHECK_THROWS_AS(generated_subalgebra(amb, {L->basis(0), L->basis(2)}, 2), ClosureOverflow);
}

TEST_CASE("homomorphism checks") {
  Field Q = Field::rationals();
  LiePtr L = sl2(Q);
  LinearMap id{L, L, Matrix::identity(Q, 3)};
  CHECK(check_homomorphism(id).all_pass());
  CHECK(kernel_dim(id) == 0);
  LinearMap zero{L, L, Matrix(Q, 3, 3)};
  CHECK(check_homomorphism(zero).all_pass());
  CHECK(kernel_dim(zero) == 3);
  Matrix swap(Q, 3, 3);
  swap.at(0, 0) = Q.one();
  swap.at(2, 1) = Q.one();
  swap.at(1, 2) = Q.one();
  CHECK_FALSE(check_homomorphism(LinearMap{L, L, swap}).all_pass());
}

TEST_CASE("torus weights") {
  Field Q = Field::rationals();
  LiePtr L = sl2(Q);
  auto w = basis_weights(*L, {L->basis(1)});
  REQUIRE(w);
  CHECK((*w)[0][0] == -(*w)[2][0]);
  CHECK((*w)[1][0].is_zero());
  CHECK_FALSE(basis_weights(*L, {L->basis(0)}));
}
