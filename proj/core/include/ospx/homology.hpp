#pragma once

#include "ospx/superalg.hpp"

namespace ospx {

// Quotient of a graded coordinate space by a span of relations. Cosets are
// represented by the coordinates at the non-pivot columns of the relation RREF.
class Quotient {
 public:
  Quotient() = default;
  Quotient(Field F, std::vector<int> coord_parity, const std::vector<Vec>& relations);

  const Field& field() const { return F_; }
  std::size_t ambient_dim() const { return par_.size(); }
  std::size_t dim() const { return free_.size(); }
  const EchelonBasis& relations() const { return rel_; }
  const std::vector<std::size_t>& basis_coords() const { return free_; }
  int parity(std::size_t q) const { return par_[free_[q]]; }
  std::vector<int> parities() const;
  Vec project(const Vec& v) const;
  Vec zero() const { return zeros(F_, dim()); }

 private:
  Field F_;
  std::vector<int> par_;
  EchelonBasis rel_;
  std::vector<std::size_t> free_;
};

// a ⊗ b in coordinates i*dim + j.
Vec tensor(const SuperAlgebra& R, const Vec& a, const Vec& b);
// J(a,b,c) = (-1)^{|a||c|} ab⊗c + (-1)^{|b||a|} bc⊗a + (-1)^{|c||b|} ca⊗b, for homogeneous a,b,c.
Vec cyclic_j(const SuperAlgebra& R, const Vec& a, const Vec& b, const Vec& c);

struct TensorQuotient {
  AlgebraPtr R;
  Quotient Q;
  Vec pair(const Vec& a, const Vec& b) const { return Q.project(tensor(*R, a, b)); }
};

struct HomologyModule {
  std::string name;
  std::size_t dim = 0;
  std::vector<Vec> basis;  // coordinates in the ambient quotient
};

// Quotient of R⊗R together with the kernel of the induced commutator-type map.
struct TensorHomology {
  TensorQuotient quotient;
  HomologyModule homology;
};

// (R⊗R)/I_d^- and the kernel of <a,b> -> [a,b] - bar([a,b]).
TensorHomology hd1_minus(const AlgebraPtr& R);
// The six-family modification of I_d^-; same map.
TensorHomology hd1_tilde(const AlgebraPtr& R);
// (S⊗S)/(antisymmetry + J) and the kernel of <a,b> -> [a,b].
TensorHomology hc1(const AlgebraPtr& S);

struct AlgebraQuotient {
  AlgebraPtr R;
  Quotient Q;
  Vec pi(const Vec& a) const { return Q.project(a); }
};

AlgebraQuotient quotient_rrr(const AlgebraPtr& R);

struct I3Data {
  AlgebraQuotient quotient;  // R / I_3
  std::size_t z_dim() const { return 2 * quotient.Q.dim(); }
  Vec pi1(const Vec& a) const;
  Vec pi2(const Vec& a) const;
  // pi_i(a) has degree |a| + 1, which makes the cocycle into z even.
  std::vector<int> z_parities() const;
};

I3Data i3_and_z(const AlgebraPtr& R);

// The defining identities of z re-evaluated on basis elements.
Report check_pi_identities(const I3Data& z);

HomologyModule as_module(const std::string& name, const Quotient& Q);

}  // namespace ospx
