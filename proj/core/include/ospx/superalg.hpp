#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ospx/linalg.hpp"
#include "ospx/report.hpp"

namespace ospx {

// Finite-dimensional unital associative superalgebra with a superinvolution,
// given by structure constants on a homogeneous basis b_0..b_{d-1}.
class SuperAlgebra {
 public:
  // products[i*d+j] holds b_i b_j; involution row i holds the coordinates of bar(b_i).
  SuperAlgebra(std::string name, Field F, std::vector<int> parity, std::vector<SparseVec> products,
               Vec unit, Matrix involution, std::vector<std::string> basis_names = {});

  const std::string& name() const { return name_; }
  const Field& field() const { return F_; }
  std::size_t dim() const { return parity_.size(); }
  int parity(std::size_t i) const { return parity_[i]; }
  const std::vector<int>& parities() const { return parity_; }
  const SparseVec& product(std::size_t i, std::size_t j) const { return mul_[i * dim() + j]; }
  const Vec& unit() const { return unit_; }
  const Matrix& involution() const { return invol_; }
  const SparseVec& bar_basis(std::size_t i) const { return bar_[i]; }
  const std::string& basis_name(std::size_t i) const { return names_[i]; }

  Vec zero() const { return zeros(F_, dim()); }
  Vec basis(std::size_t i) const { return unit_vector(F_, dim(), i); }
  Vec scalar(long v) const;
  Vec mul(const Vec& a, const Vec& b) const;
  Vec bar(const Vec& a) const;
  Vec rho(const Vec& a) const;
  Vec plus(const Vec& a) const { return add(a, bar(a)); }    // a + bar(a)
  Vec minus(const Vec& a) const { return sub(a, bar(a)); }   // a - bar(a)
  Vec part(const Vec& a, int p) const;
  // Parity of a nonzero homogeneous element; nullopt when mixed or zero.
  std::optional<int> degree(const Vec& a) const;
  // Super-commutator, extended bilinearly over homogeneous parts.
  Vec bracket(const Vec& a, const Vec& b) const;
  Vec bracket_basis(std::size_t i, std::size_t j) const;
  std::string element_str(const Vec& a) const;

 private:
  std::string name_;
  Field F_;
  std::vector<int> parity_;
  std::vector<SparseVec> mul_;
  Vec unit_;
  Matrix invol_;
  std::vector<SparseVec> bar_;
  std::vector<std::string> names_;
};

using AlgebraPtr = std::shared_ptr<const SuperAlgebra>;

Report verify_superalgebra(const SuperAlgebra& A);

// Preset ids have the form "name[:field[:params]]"; field is Q or F<p> (default Q).
//   ground_field_id             k with the identity
//   dual_numbers_id             k[eps], eps even, eps^2 = 0, identity
//   grassmann_id                k[xi], xi odd, xi^2 = 0, identity
//   matrix_transpose:F:l        M_l(k), purely even, transpose
//   matrix_prp:F:l              M_{l|l}(k), periplectic superinvolution
//   matrix_osp:F:k,2l           M_{k|2l}(k), orthosymplectic superinvolution
//   s_plus_sop:F[:S]            S + S^op with the exchange map; S in {ground, dual, grassmann, M2}
//   adjoin_i:F[:base]           base (x) k[sqrt(-1)], base in {ground, dual, grassmann}
AlgebraPtr preset_algebra(const std::string& id);
std::vector<std::string> preset_catalog();

// Underlying algebra for S-type presets; its involution is not used by sum_with_opposite.
AlgebraPtr plain_algebra(const std::string& which, const Field& F);

AlgebraPtr sum_with_opposite(const SuperAlgebra& S);
AlgebraPtr adjoin_sqrt_minus_one(const SuperAlgebra& R);

enum class Subspace {
  plus,
  minus,
  commutators,
  commutators_minus,        // [R,R] ∩ R_-
  commutators_times_R,      // [R,R]R
  minus_plus_minus_sq,      // R_- + R_- R_-
  super_center,
  plain_center,
};

// Row-reduced basis; every returned vector is homogeneous.
std::vector<Vec> subspace(const SuperAlgebra& R, Subspace which);

bool is_invertible(const SuperAlgebra& R, const Vec& e);

struct AssumptionResult {
  bool holds = false;
  Vec witness;
  bool super_center = true;
  std::size_t search_space_dim = 0;
  std::string detail;
};

// Search R_- ∩ center for a homogeneous unit.
AssumptionResult assumption_checker(const SuperAlgebra& R, bool use_super_center = true);

AlgebraPtr algebra_from_json(const std::string& text);
AlgebraPtr algebra_from_file(const std::string& path);
std::string algebra_to_json(const SuperAlgebra& A);

}  // namespace ospx
