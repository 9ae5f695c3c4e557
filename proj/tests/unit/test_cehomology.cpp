#include <random>

#include "doctest.h"
#include "ospx/cehomology.hpp"

using namespace ospx;

namespace {

// Heisenberg algebra x, y, z with [x,y] = z.
LiePtr heisenberg(const Field& F) {
  std::vector<SparseVec> t(9);
  t[0 * 3 + 1] = {{2, F.one()}};
  t[1 * 3 + 0] = {{2, F.make(-1)}};
  return std::make_shared<LieSuperAlgebra>(F, std::vector<int>{0, 0, 0}, t);
}

std::size_t brute_wedge2(const LieSuperAlgebra& L) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i; j < L.dim(); ++j) c += i < j || L.parity(i) == 1;
  return c;
}

}  // namespace

TEST_CASE("abelian algebras: H_2 is the whole exterior square") {
  Field Q = Field::rationals();
  CHECK(ce_homology(abelian(Q, 1, 0)).wedge2 == 0);
  CHECK(h2_dimension(abelian(Q, 1, 0)) == 0);
  CHECK(h2_dimension(abelian(Q, 3, 0)) == 3);
  CHECK(h2_dimension(abelian(Q, 0, 1)) == 1);
  for (std::size_t e = 0; e < 4; ++e)
    for (std::size_t o = 0; o < 4; ++o) {
      LiePtr L = abelian(Q, e, o);
      CHECK(wedge2_count(e, o) == brute_wedge2(*L));
      CHECK(h2_dimension(L) == wedge2_count(e, o));
      CHECK(ce_homology(L).h1 == e + o);
    }
}

TEST_CASE("classical values") {
  Field Q = Field::rationals();
  CeHomology s = ce_homology(sl2(Q));
  CHECK(s.rank_d2 == 3);
  CHECK(s.ker_d2 == 0);
  CHECK(s.h2 == 0);
  CHECK(s.h1 == 0);
  CHECK(h2_dimension(gl2(Q)) == 0);
  CHECK(ce_homology(gl2(Q)).h1 == 1);
  CHECK(h2_dimension(heisenberg(Q)) == 2);
  CHECK(h2_dimension(heisenberg(Field::prime(3))) == 2);
}

TEST_CASE("d2 d3 = 0 on osp") {
  for (std::string id : {"grassmann_id:Q", "matrix_prp:Q:1", "ground_field_id:F3"}) {
    OspAlgebra A = build_osp(1, 1, preset_algebra(id));
    CHECK_NOTHROW(boundary_maps(A.osp.algebra()));
  }
}

TEST_CASE("H_2 of osp") {
  AlgebraPtr Q = preset_algebra("ground_field_id:Q");
  CHECK(h2_dimension(build_osp(3, 1, Q).osp.algebra()) == 0);
  CHECK(h2_dimension(build_osp(1, 1, preset_algebra("ground_field_id:F3")).osp.algebra()) == 2);
  CHECK(h2_dimension(build_osp(2, 1, preset_algebra("s_plus_sop:Q")).osp.algebra()) == 2);
}

TEST_CASE("weight-0 reduction agrees with the full complex") {
  for (auto [id, m, n] : {std::tuple{"ground_field_id:F3", 1, 1}, {"grassmann_id:Q", 1, 1},
                          {"s_plus_sop:Q", 2, 1}, {"adjoin_i:Q", 2, 1}, {"grassmann_id:Q", 1, 2},
                          {"dual_numbers_id:Q", 2, 1}}) {
    OspAlgebra A = build_osp(m, n, preset_algebra(id));
    auto torus = diagonal_torus(A);
    CeHomology full = ce_homology(A.osp.algebra());
    CeHomology red = ce_homology(A.osp.algebra(), torus);
    CAPTURE(id);
    CHECK(red.weight_reduced);
    CHECK_FALSE(full.weight_reduced);
    CHECK(red.wedge3 < full.wedge3);
    CHECK(red.h2 == full.h2);
  }
}

TEST_CASE("non-diagonal torus elements are dropped") {
  LiePtr L = sl2(Field::rationals());
  CeHomology c = ce_homology(L, {L->basis(0), L->basis(1)});
  CHECK(c.torus_used == 1);
  CHECK(c.h2 == 0);
}

TEST_CASE("formula side by shape") {
  H2Comparison a = h2_compare(2, 1, preset_algebra("ground_field_id:Q"));
  CHECK_FALSE(a.formula);
  CHECK_FALSE(a.match());
  CHECK(a.formula_name.empty());
  H2Comparison b = h2_compare(2, 1, preset_algebra("s_plus_sop:Q"));
  CHECK(b.formula_name == "HD+RRR");
  CHECK(b.oracle == 2);
  CHECK(b.match());
  H2Comparison c = h2_compare(1, 1, preset_algebra("ground_field_id:F3"));
  CHECK(c.formula_name == "HDt+z");
  CHECK(c.oracle == 2);
  CHECK(c.match());
  H2Comparison d = h2_compare(2, 2, preset_algebra("grassmann_id:Q"));
  CHECK(d.formula_name == "HD");
  CHECK(d.oracle == 1);
  CHECK(d.match());
}
