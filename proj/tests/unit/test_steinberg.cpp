#include "doctest.h"
#include "ospx/errors.hpp"
#include "ospx/steinberg.hpp"

using namespace ospx;

namespace {
bool has_failure(const Report& r, const std::string& name) {
  const Check* c = r.find(name);
  return c && !c->pass;
}
}  // namespace

TEST_CASE("canonical osp generators satisfy every relation") {
  Report r = verify_sto_relations(osp_family(build_osp(2, 2, preset_algebra("dual_numbers_id:Q"))));
  CHECK(r.all_pass());
  for (int k = 1; k <= 28; ++k) {
    char name[8];
    std::snprintf(name, sizeof name, "STO%02d", k);
    CHECK(r.find(name) != nullptr);
  }
  CHECK(r.find("sampling") != nullptr);
}

TEST_CASE("sto model lifts satisfy every relation") {
  CHECK(verify_sto_relations(model_family(sto_model(3, 1, preset_algebra("s_plus_sop:Q")))).all_pass());
}

TEST_CASE("swapping f and g breaks the relations") {
  Report r = verify_sto_relations(swap_fg(osp_family(build_osp(2, 2, preset_algebra("ground_field_id:Q")))));
  CHECK(has_failure(r, "STO27"));
  CHECK(has_failure(r, "STO28"));
  CHECK(has_failure(r, "sampling"));
}

TEST_CASE("sampling is reproducible") {
  GeneratorFamily F = osp_family(build_osp(2, 1, preset_algebra("grassmann_id:Q")));
  Report a = verify_sto_relations(F, 4, 99), b = verify_sto_relations(F, 4, 99);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) CHECK(a.checks[i].dims == b.checks[i].dims);
}

TEST_CASE("lemma suites") {
  GeneratorFamily F = model_family(sto_model(2, 1, preset_algebra("s_plus_sop:Q")));
  CHECK(lemma_suite(F, LemmaSuite::lmd_kp).all_pass());
  CHECK(lemma_suite(F, LemmaSuite::kp).all_pass());
  CHECK(lemma_suite(F, LemmaSuite::lmd34).all_pass());
  GeneratorFamily G = model_family(sto_model(3, 1, preset_algebra("dual_numbers_id:Q")));
  Report h = lemma_suite(G, LemmaSuite::h_rln);
  CHECK(h.all_pass());
  CHECK(h.find("lambda_cyclic") != nullptr);
}

TEST_CASE("lemma suites on (1,1)") {
  AlgebraPtr R = preset_algebra("ground_field_id:F3");
  GeneratorFamily H = hat_osp12_family(hat_osp12(R));
  CHECK(lemma_suite(H, LemmaSuite::kp).all_pass());
  Report j = lemma_suite(H, LemmaSuite::hatosp12_h);
  CHECK(j.all_pass());
  CHECK(j.find("three_j") != nullptr);
  CHECK_THROWS_AS(lemma_suite(H, LemmaSuite::lmd34), InvalidShape);
  CHECK_THROWS_AS(H.gen(GenKind::t, 1, 2, R->unit()), InvalidInput);
}

TEST_CASE("suite names") {
  for (LemmaSuite s : {LemmaSuite::kp, LemmaSuite::lmd34, LemmaSuite::lmd_kp, LemmaSuite::h_rln, LemmaSuite::hatosp12_h})
    CHECK(parse_lemma_suite(lemma_suite_name(s)) == s);
  CHECK_FALSE(parse_lemma_suite("nope"));
}

TEST_CASE("derived elements and the triangular decomposition") {
  GeneratorFamily O = osp_family(build_osp(2, 2, preset_algebra("ground_field_id:Q")));
  CHECK(tridec_check(O).all_pass());
  CHECK(derived_elements(O).all_pass());
  GeneratorFamily M = model_family(sto_model(2, 1, preset_algebra("matrix_prp:Q:1")));
  CHECK(tridec_check(M).all_pass());
}

TEST_CASE("kernel is spanned by lambda elements") {
  StoModel S = sto_model(2, 1, preset_algebra("grassmann_id:Q"));
  REQUIRE(S.kernel.size() == 1);
  CHECK(kernel_structure(model_family(S), S.kernel, 1).all_pass());
  CHECK_FALSE(kernel_structure(model_family(S), S.kernel, 2).all_pass());
  HatOsp12 H = hat_osp12(preset_algebra("ground_field_id:F3"));
  CHECK(kernel_structure(hat_osp12_family(H), H.kernel, H.hdt.homology.dim).all_pass());
}
