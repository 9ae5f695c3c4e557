#include "doctest.h"
#include "ospx/errors.hpp"
#include "ospx/osp.hpp"

using namespace ospx;

TEST_CASE("osp over the ground field has the classical dimension") {
  AlgebraPtr Q = preset_algebra("ground_field_id:Q");
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}}) {
    CAPTURE(m);
    CAPTURE(n);
    std::size_t expect = m * (m - 1) / 2 + n * (2 * n + 1) + 2 * m * n;
    CHECK(build_osp(m, n, Q).osp.dim() == expect);
    CHECK(classical_osp_dim(m, n) == expect);
  }
  CHECK(build_osp(2, 2, Q).osp.dim() == 19);
}

TEST_CASE("exact sequence, generation, perfectness") {
  for (std::string id : {"ground_field_id:Q", "dual_numbers_id:Q", "grassmann_id:Q", "s_plus_sop:Q",
                                "matrix_prp:Q:1", "adjoin_i:Q"})
    for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
      CAPTURE(id);
      CHECK(check_section2(build_osp(m, n, preset_algebra(id))).all_pass());
    }
}

TEST_CASE("codimension of osp in osp-tilde") {
  for (std::string id : {"ground_field_id:Q", "s_plus_sop:Q", "adjoin_i:Q", "matrix_prp:Q:1"}) {
    AlgebraPtr R = preset_algebra(id);
    OspAlgebra A = build_osp(2, 1, R);
    std::size_t minus = subspace(*R, Subspace::minus).size();
    std::size_t cm = subspace(*R, Subspace::commutators_minus).size();
    CAPTURE(id);
    CHECK(A.tilde.dim() - A.osp.dim() == minus - cm);
  }
}

TEST_CASE("epsilon lands in [R,R] ∩ R_- on osp") {
  for (std::string id : {"matrix_prp:Q:1", "s_plus_sop:Q:dual", "grassmann_id:Q"}) {
    AlgebraPtr R = preset_algebra(id);
    OspAlgebra A = build_osp(1, 1, R);
    EchelonBasis target(R->field(), R->dim());
    for (const auto& v : subspace(*R, Subspace::commutators_minus)) target.insert(v);
    for (std::size_t i = 0; i < A.osp.dim(); ++i)
      CHECK(target.contains(epsilon(A, SuperMatrix::unflatten(A.shape, R, A.osp.basis(i)))));
  }
}

TEST_CASE("presentation generators lie in osp and generate it") {
  AlgebraPtr R = preset_algebra("s_plus_sop:Q");
  OspAlgebra A = build_osp(2, 1, R);
  auto gens = presentation_generators(A);
  for (const auto& g : gens) CHECK(A.osp.contains(g));
  CHECK(generated_subalgebra(A.ambient, gens).dim() == A.osp.dim());
}

TEST_CASE("generators are skew for the osp involution") {
  AlgebraPtr R = preset_algebra("grassmann_id:Q");
  MatrixShape s{2, 1};
  for (GenKind k : {GenKind::t, GenKind::u, GenKind::v, GenKind::w, GenKind::f, GenKind::g})
    for (std::size_t b = 0; b < R->dim(); ++b) {
      std::size_t i = 1, j = k == GenKind::t ? 2 : 1;
      SuperMatrix X = generator(s, R, k, i, j, R->basis(b));
      CAPTURE(kind_name(k));
      CHECK((osp_involution(X) + X).is_zero());
    }
}

TEST_CASE("worked examples") {
  CHECK(example_supercommutative(1, 1, preset_algebra("dual_numbers_id:Q")).all_pass());
  CHECK(example_supercommutative(2, 1, preset_algebra("grassmann_id:Q")).all_pass());
  CHECK(example_s_plus_sop(1, 1, preset_algebra("ground_field_id:Q")).all_pass());
  CHECK(example_periplectic_dims(1, 1, 1, Field::rationals()).all_pass());
  CHECK(example_orthosymplectic_dims(1, 1, 1, 1, Field::rationals()).all_pass());
}

TEST_CASE("tensor with a supercommutative algebra") {
  AlgebraPtr Q = preset_algebra("ground_field_id:Q");
  AlgebraPtr D = preset_algebra("dual_numbers_id:Q");
  LiePtr T = tensor_with(build_osp(1, 1, Q).osp.lie(), *D);
  CHECK(T->dim() == 10);
  CHECK(verify_lie(*T).all_pass());
}

TEST_CASE("torus elements act diagonally") {
  OspAlgebra A = build_osp(2, 2, preset_algebra("ground_field_id:Q"));
  auto t = osp_torus(A);
  CHECK_FALSE(t.empty());
  CHECK(basis_weights(A.osp.lie(), t).has_value());
}

TEST_CASE("shapes are validated") {
  AlgebraPtr Q = preset_algebra("ground_field_id:Q");
  CHECK_THROWS_AS(build_osp(0, 0, Q), InvalidShape);
  CHECK(build_osp(0, 1, Q).osp.dim() == 3);
  CHECK(build_osp(2, 0, Q).tilde.dim() == 1);
  CHECK(build_osp(2, 0, Q).osp.dim() == 0);
}
