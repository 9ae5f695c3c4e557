#pragma once

#include <functional>
#include <tuple>

#include "ospx/homology.hpp"
#include "ospx/osp.hpp"

namespace ospx {

// Bilinear map L x L -> Z into a trivial graded module, tabulated on basis pairs.
struct Cocycle {
  LiePtr source;
  Field F;
  std::vector<int> zpar;
  std::vector<Vec> values;  // values[i*dim + j]

  std::size_t zdim() const { return zpar.size(); }
  const Vec& value(std::size_t i, std::size_t j) const { return values[i * source->dim() + j]; }
  Vec eval(const Vec& x, const Vec& y) const;
  // Negates the (i,j) and (j,i) entries together, keeping antisymmetry.
  Cocycle with_pair_negated(std::size_t i, std::size_t j) const;
};

Cocycle zero_cocycle(const LiePtr& L, std::vector<int> zpar);

// grading, CC1 on all pairs, CC2 on basis triples (witness "(i,j,k)").
Report verify_cocycle(const Cocycle& c);

struct CentralExtension {
  Cocycle cocycle;
  LiePtr total;           // basis: base basis, then Z basis
  LinearMap projection;   // total -> base

  std::size_t base_dim() const { return cocycle.source->dim(); }
  std::size_t z_dim() const { return cocycle.zdim(); }
  Vec lift(const Vec& x) const;     // x ⊕ 0
  Vec central(const Vec& z) const;  // 0 ⊕ z
};

// Throws CocycleInvalid when verify is set and verify_cocycle fails.
CentralExtension central_extension(const Cocycle& c, bool verify = true);

// verify_lie on the total algebra, Z inside the center, projection a surjective
// homomorphism with kernel Z.
Report check_central_extension(const CentralExtension& E);

// Restriction to osp of alpha(e_ij(a), e_kl(b)) = d_jk d_il (-1)^{|i|(|i|+|a|+|b|)} <a,b>.
Cocycle alpha_gl(const OspAlgebra& A, const TensorQuotient& Q);

// Subalgebra of osp ⊕ <R,R> generated by the lifted presentation generators.
struct StoModel {
  OspAlgebra osp;
  TensorHomology hd;
  CentralExtension ext;
  EmbeddedLie model;      // inside ext.total
  LinearMap projection;   // model -> osp
  std::vector<Vec> kernel;  // model coordinates

  // Model coordinates of the lift of a presentation generator (1-based indices).
  Vec lift(GenKind kind, std::size_t i, std::size_t j, const Vec& a) const;
  Vec z_part(const Vec& model_vec) const;
};

StoModel sto_model(std::size_t m, std::size_t n, const AlgebraPtr& R);

// kernel dim = dim HD, kernel inside the center and inside the HD span, perfectness.
Report check_sto_model(const StoModel& S);

// Bilinear form prescribed on labelled spanning vectors of L. Nonzero label
// pairs are listed sparsely.
struct LabelledForm {
  std::vector<Vec> labels;  // coordinates in L
  std::vector<std::string> names;
  std::vector<std::tuple<std::size_t, std::size_t, Vec>> entries;
};

// Throws WellDefinednessFailure when the labels do not span L or when some
// linear relation among the labels is not annihilated by the form.
Cocycle cocycle_from_labels(const LiePtr& L, const Field& F, std::vector<int> zpar, const LabelledForm& form,
                            Report* rep = nullptr);

struct Sto22Beta {
  StoModel sto;
  AlgebraQuotient rrr;  // R/([R,R]R)
  LabelledForm form;
  Cocycle beta;
  Report report;        // well_defined, cocycle.*, lemma_case.(i)..(viii)
};

Sto22Beta beta_sto22(const AlgebraPtr& R);

struct HatSto22 {
  Sto22Beta beta;
  CentralExtension ext;
  Vec gen(GenKind kind, std::size_t i, std::size_t j, const Vec& a) const;  // lift into ext.total
  Vec pi(const Vec& a) const;
};

HatSto22 hat_sto22(const AlgebraPtr& R);
// The displayed relations among t12, f11, f21, g11, g12 and pi, and the dimension count.
Report check_hat_sto22(const HatSto22& H);

// Third sign of j(a,b,c): (-1)^{|c||a|} as printed or (-1)^{|c||b|} as in J.
enum class JSign { printed, cyclic };
const char* jsign_name(JSign s);

// Sign in front of alpha(t(a), t(b)) = <a, bar b>: as printed, or negated.
enum class TTSign { printed, negated };
const char* ttsign_name(TTSign s);

// Slot decomposition x = f(a1) + g(a2) + t(a3) + e23(c) + e32(c') + e11(b) of osp_{1|2}.
struct Osp12Slots {
  Vec f, g, t, e23, e32, e11;
};
Osp12Slots osp12_slots(const OspAlgebra& A, const Vec& flat);

// Throws NoDecomposition or WellDefinednessFailure. rep receives the
// decomposition-independence check.
Cocycle alpha_osp12(const OspAlgebra& A, const TensorQuotient& Q, JSign sign, TTSign tt, Report* rep = nullptr);

struct HatOsp12 {
  OspAlgebra osp;
  TensorHomology hdt;
  JSign sign = JSign::printed;
  TTSign tt = TTSign::printed;
  Report alpha_report;  // outcome of every reading, prefixed "<tt>.<j>."
  CentralExtension ext;
  EmbeddedLie model;
  LinearMap projection;
  std::vector<Vec> kernel;

  // Model coordinates.
  Vec f(const Vec& a) const;
  Vec g(const Vec& a) const;
  Vec v(const Vec& a) const;  // -[g(a), g(1)]
  Vec w(const Vec& a) const;  // [f(1), f(a)]
  Vec h(const Vec& a, const Vec& b) const;
  Vec lambda(const Vec& a, const Vec& b) const;
  Vec z_part(const Vec& model_vec) const;
};

// Tries the readings in order (tt printed, negated) x (j printed, cyclic) and keeps the first cocycle.
HatOsp12 hat_osp12(const AlgebraPtr& R);
Report check_hat_osp12(const HatOsp12& H);

struct Uosp12 {
  HatOsp12 hat;
  I3Data z;
  LabelledForm form;
  Cocycle beta;
  Report report;
  CentralExtension ext;

  Vec f(const Vec& a) const;
  Vec g(const Vec& a) const;
  Vec v(const Vec& a) const;
  Vec w(const Vec& a) const;
  Vec pi1(const Vec& a) const;
  Vec pi2(const Vec& a) const;
};

Uosp12 uosp12(const AlgebraPtr& R);
Report check_uosp12(const Uosp12& U);

}  // namespace ospx
