#include "doctest.h"
#include "json.hpp"
#include "ospx/errors.hpp"
#include "ospx/superalg.hpp"

using namespace ospx;

namespace {

bool passes(const Report& r, const std::string& name) {
  const Check* c = r.find(name);
  return c && c->pass;
}

// M_{1|1}(Q) on e11, e22 (even), e12, e21 (odd) with the identity map as candidate involution.
std::string m11_identity_json() {
  nlohmann::json j;
  j["name"] = "m11_id";
  j["field"] = {{"kind", "Q"}};
  j["parity"] = {0, 0, 1, 1};
  j["basis_names"] = {"e11", "e22", "e12", "e21"};
  j["unit"] = {"1", "1", "0", "0"};
  const int row[4] = {0, 1, 0, 1}, col[4] = {0, 1, 1, 0};
  nlohmann::json mul = nlohmann::json::array();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      if (col[a] != row[b]) continue;
      for (int c = 0; c < 4; ++c)
        if (row[c] == row[a] && col[c] == col[b]) mul.push_back({a, b, {{c, "1"}}});
    }
  j["mul"] = mul;
  nlohmann::json inv = nlohmann::json::array();
  for (int a = 0; a < 4; ++a) {
    nlohmann::json r = nlohmann::json::array();
    for (int b = 0; b < 4; ++b) r.push_back(a == b ? "1" : "0");
    inv.push_back(r);
  }
  j["involution"] = inv;
  return j.dump();
}

}  // namespace

TEST_CASE("every preset satisfies the superinvolution axioms") {
  for (std::string id :
       {"ground_field_id:Q", "ground_field_id:F3", "ground_field_id:F5", "dual_numbers_id:Q", "grassmann_id:Q",
        "matrix_prp:Q:1", "matrix_osp:Q:1,2", "matrix_transpose:Q:2", "s_plus_sop:Q", "s_plus_sop:Q:dual",
        "s_plus_sop:Q:grassmann", "s_plus_sop:Q:M2", "adjoin_i:Q", "adjoin_i:Q:dual", "adjoin_i:Q:grassmann",
        "s_plus_sop:F5:M2"}) {
    CAPTURE(id);
    CHECK(verify_superalgebra(*preset_algebra(id)).all_pass());
  }
}

TEST_CASE("preset dimensions") {
  CHECK(preset_algebra("ground_field_id:Q")->dim() == 1);
  CHECK(preset_algebra("matrix_prp:Q:1")->dim() == 4);
  CHECK(preset_algebra("matrix_osp:Q:1,2")->dim() == 9);
  CHECK(preset_algebra("s_plus_sop:Q:M2")->dim() == 8);
  CHECK(preset_algebra("adjoin_i:Q")->dim() == 2);
  CHECK(preset_algebra("dual_numbers_id")->field().is_rational());
  CHECK_THROWS_AS(preset_algebra("no_such_algebra:Q"), InvalidInput);
}

TEST_CASE("identity map on M_{1|1} is not a superinvolution") {
  AlgebraPtr A = algebra_from_json(m11_identity_json());
  Report r = verify_superalgebra(*A);
  CHECK(passes(r, "associativity"));
  CHECK(passes(r, "unit"));
  const Check* anti = r.find("involution.anti");
  REQUIRE(anti);
  CHECK_FALSE(anti->pass);
  CHECK_FALSE(anti->witness.empty());
}

TEST_CASE("(ab)bar rule re-evaluated on basis pairs") {
  for (std::string id : {"matrix_prp:Q:1", "matrix_osp:Q:1,2", "s_plus_sop:Q:M2", "adjoin_i:Q:grassmann"}) {
    AlgebraPtr R = preset_algebra(id);
    for (std::size_t i = 0; i < R->dim(); ++i)
      for (std::size_t j = 0; j < R->dim(); ++j) {
        Vec a = R->basis(i), b = R->basis(j);
        Vec lhs = R->bar(R->mul(a, b));
        Vec rhs = R->mul(R->bar(b), R->bar(a));
        if (R->parity(i) & R->parity(j)) rhs = scale(R->field().make(-1), rhs);
        CHECK(lhs == rhs);
        CHECK(R->bar(R->bar(a)) == a);
      }
  }
}

TEST_CASE("subspaces") {
  AlgebraPtr Q = preset_algebra("ground_field_id:Q");
  CHECK(subspace(*Q, Subspace::minus).empty());
  CHECK(subspace(*Q, Subspace::plus).size() == 1);
  AlgebraPtr S = preset_algebra("s_plus_sop:Q");
  auto minus = subspace(*S, Subspace::minus);
  REQUIRE(minus.size() == 1);
  CHECK(S->bar(minus[0]) == scale(S->field().make(-1), minus[0]));
  CHECK(subspace(*preset_algebra("s_plus_sop:Q:M2"), Subspace::commutators_times_R).size() == 8);
}

TEST_CASE("unit in R_- inside the center") {
  CHECK_FALSE(assumption_checker(*preset_algebra("ground_field_id:Q")).holds);
  AlgebraPtr S = preset_algebra("s_plus_sop:Q");
  auto a = assumption_checker(*S);
  REQUIRE(a.holds);
  CHECK(S->bar(a.witness) == scale(S->field().make(-1), a.witness));
  CHECK(is_invertible(*S, a.witness));
  auto i = assumption_checker(*preset_algebra("adjoin_i:Q"));
  REQUIRE(i.holds);
  AlgebraPtr Qi = preset_algebra("adjoin_i:Q");
  // e^2 is a nonzero scalar multiple of 1
  Vec sq = Qi->mul(i.witness, i.witness);
  CHECK_FALSE(is_zero(sq));
}

TEST_CASE("config round trip") {
  for (std::string id : {"grassmann_id:Q", "matrix_prp:Q:1", "s_plus_sop:F3:dual"}) {
    AlgebraPtr A = preset_algebra(id);
    AlgebraPtr B = algebra_from_json(algebra_to_json(*A));
    REQUIRE(B->dim() == A->dim());
    CHECK(B->field() == A->field());
    for (std::size_t i = 0; i < A->dim(); ++i) {
      CHECK(B->parity(i) == A->parity(i));
      CHECK(B->bar(B->basis(i)) == A->bar(A->basis(i)));
      for (std::size_t j = 0; j < A->dim(); ++j) CHECK(B->mul(B->basis(i), B->basis(j)) == A->mul(A->basis(i), A->basis(j)));
    }
  }
  CHECK_THROWS_AS(algebra_from_json("{\"field\":{\"kind\":\"R\"}}"), InvalidInput);
  CHECK_THROWS_AS(algebra_from_json("not json"), InvalidInput);
}
