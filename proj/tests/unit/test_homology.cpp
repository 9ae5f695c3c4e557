#include "doctest.h"
#include "ospx/homology.hpp"

using namespace ospx;

namespace {
std::size_t hd(const std::string& id) { return hd1_minus(preset_algebra(id)).homology.dim; }
std::size_t hdt(const std::string& id) { return hd1_tilde(preset_algebra(id)).homology.dim; }
}  // namespace

TEST_CASE("skew-dihedral homology") {
  CHECK(hd("ground_field_id:Q") == 0);
  CHECK(hd("s_plus_sop:Q") == 0);
  CHECK(hd("dual_numbers_id:Q") == 0);
  CHECK(hd("grassmann_id:Q") == 1);
}

TEST_CASE("modified skew-dihedral homology") {
  CHECK(hdt("ground_field_id:Q") == 0);
  CHECK(hdt("ground_field_id:F3") == 0);
  for (std::string id : {"dual_numbers_id:Q", "grassmann_id:Q", "matrix_prp:Q:1", "s_plus_sop:Q:dual"})
    CHECK(hdt(id) == hd(id));
}

TEST_CASE("first cyclic homology") {
  Field Q = Field::rationals();
  CHECK(hc1(plain_algebra("ground", Q)).homology.dim == 0);
  CHECK(hc1(plain_algebra("dual", Q)).homology.dim == 0);
  CHECK(hc1(plain_algebra("M2", Q)).homology.dim == 0);
}

TEST_CASE("R/([R,R]R)") {
  CHECK(quotient_rrr(preset_algebra("ground_field_id:Q")).Q.dim() == 1);
  CHECK(quotient_rrr(preset_algebra("s_plus_sop:Q:M2")).Q.dim() == 0);
  CHECK(quotient_rrr(preset_algebra("s_plus_sop:Q")).Q.dim() == 2);
}

TEST_CASE("I_3 and z") {
  CHECK(i3_and_z(preset_algebra("ground_field_id:Q")).z_dim() == 0);
  I3Data f3 = i3_and_z(preset_algebra("ground_field_id:F3"));
  CHECK(f3.z_dim() == 2);
  CHECK(check_pi_identities(f3).all_pass());
  I3Data s = i3_and_z(preset_algebra("s_plus_sop:F3"));
  CHECK(s.z_dim() == 2 * s.quotient.Q.dim());
  CHECK(check_pi_identities(s).all_pass());
  CHECK(check_pi_identities(i3_and_z(preset_algebra("grassmann_id:F3"))).all_pass());
}

TEST_CASE("homology classes are cycles of the commutator-type map") {
  for (std::string id : {"grassmann_id:Q", "matrix_prp:Q:1"}) {
    AlgebraPtr R = preset_algebra(id);
    TensorHomology H = hd1_minus(R);
    const Quotient& Q = H.quotient.Q;
    for (const auto& cls : H.homology.basis) {
      // lift through the free coordinates and apply <a,b> -> [a,b] - bar([a,b])
      Vec image = R->zero();
      for (std::size_t q = 0; q < Q.dim(); ++q) {
        if (cls[q].is_zero()) continue;
        std::size_t flat = Q.basis_coords()[q];
        Vec c = R->bracket_basis(flat / R->dim(), flat % R->dim());
        axpy(image, cls[q], R->minus(c));
      }
      CHECK(is_zero(image));
    }
  }
}

TEST_CASE("quotient projection kills relations") {
  AlgebraPtr R = preset_algebra("grassmann_id:Q");
  TensorHomology H = hd1_minus(R);
  for (const auto& rel : H.quotient.Q.relations().rows()) CHECK(is_zero(H.quotient.Q.project(rel)));
}
