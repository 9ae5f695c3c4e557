#include "doctest.h"
#include "ospx/errors.hpp"
#include "ospx/extensions.hpp"

using namespace ospx;

TEST_CASE("zero cocycle and the trivial extension") {
  LiePtr L = sl2(Field::rationals());
  Cocycle z = zero_cocycle(L, {});
  CHECK(verify_cocycle(z).all_pass());
  CentralExtension E = central_extension(z);
  CHECK(E.total->dim() == L->dim());
  CHECK(check_central_extension(E).all_pass());
  Cocycle z2 = zero_cocycle(L, {0, 1});
  CHECK(central_extension(z2).total->dim() == 5);
}

TEST_CASE("alpha_gl is a cocycle on osp") {
  for (std::string id : {"dual_numbers_id:Q", "grassmann_id:Q", "s_plus_sop:Q"}) {
    AlgebraPtr R = preset_algebra(id);
    OspAlgebra A = build_osp(2, 1, R);
    Cocycle a = alpha_gl(A, hd1_minus(R).quotient);
    CAPTURE(id);
    CHECK(verify_cocycle(a).all_pass());
    CHECK(check_central_extension(central_extension(a)).all_pass());
  }
}

TEST_CASE("one negated value breaks CC2") {
  AlgebraPtr R = preset_algebra("grassmann_id:Q");
  Cocycle a = alpha_gl(build_osp(2, 1, R), hd1_minus(R).quotient);
  std::size_t d = a.source->dim();
  std::optional<Cocycle> bad;
  for (std::size_t i = 0; i < d && !bad; ++i)
    for (std::size_t j = 0; j < d && !bad; ++j)
      if (!is_zero(a.value(i, j))) bad = a.with_pair_negated(i, j);
  REQUIRE(bad);
  Report r = verify_cocycle(*bad);
  const Check* cc2 = r.find("CC2");
  REQUIRE(cc2);
  CHECK_FALSE(cc2->pass);
  CHECK(cc2->witness.front() == '(');
  CHECK_THROWS_AS(central_extension(*bad), CocycleInvalid);
}

TEST_CASE("sto model") {
  for (auto [id, m, n] : {std::tuple{"grassmann_id:Q", 2, 1}, {"s_plus_sop:Q", 3, 1}, {"dual_numbers_id:Q", 1, 2}}) {
    StoModel S = sto_model(m, n, preset_algebra(id));
    CAPTURE(id);
    CHECK(check_sto_model(S).all_pass());
    CHECK(S.kernel.size() == S.hd.homology.dim);
  }
  CHECK_THROWS_AS(sto_model(1, 1, preset_algebra("ground_field_id:Q")), InvalidShape);
}

TEST_CASE("cocycle for the (2,1) shape") {
  for (std::string id : {"s_plus_sop:Q", "adjoin_i:Q"}) {
    AlgebraPtr R = preset_algebra(id);
    Sto22Beta B = beta_sto22(R);
    CAPTURE(id);
    CHECK(B.report.all_pass());
    CHECK(B.beta.zdim() == B.rrr.Q.dim());
    CHECK(check_hat_sto22(hat_sto22(R)).all_pass());
  }
}

TEST_CASE("osp_{1|2} extensions") {
  for (std::string id : {"ground_field_id:F3", "grassmann_id:Q", "dual_numbers_id:F3"}) {
    AlgebraPtr R = preset_algebra(id);
    Uosp12 U = uosp12(R);
    CAPTURE(id);
    CHECK(check_hat_osp12(U.hat).all_pass());
    CHECK(check_uosp12(U).all_pass());
    CHECK(U.hat.kernel.size() == U.hat.hdt.homology.dim);
    CHECK(U.beta.zdim() == U.z.z_dim());
  }
}

TEST_CASE("printed t-t sign fails CC2 on the Grassmann algebra") {
  HatOsp12 H = hat_osp12(preset_algebra("grassmann_id:Q"));
  CHECK(H.tt == TTSign::negated);
  const Check* printed = H.alpha_report.find("tt_printed.printed.CC2");
  REQUIRE(printed);
  CHECK_FALSE(printed->pass);
  CHECK(hat_osp12(preset_algebra("ground_field_id:F3")).tt == TTSign::printed);
}
