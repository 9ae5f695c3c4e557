#pragma once

#include "ospx/liesuper.hpp"

namespace ospx {

struct OspAlgebra {
  MatrixShape shape;
  AlgebraPtr R;
  std::shared_ptr<const MatrixAmbient> ambient;
  EmbeddedLie tilde;  // X^osp = -X
  EmbeddedLie osp;    // [tilde, tilde]
};

OspAlgebra build_osp(std::size_t m, std::size_t n, AlgebraPtr R);

enum class GenKind { t, u, v, w, f, g };

// 1-based indices: t(i,j), u/v/w(k,l), f(i,k), g(k,i).
SuperMatrix generator(const MatrixShape& s, const AlgebraPtr& R, GenKind kind, std::size_t i, std::size_t j,
                      const Vec& a);
const char* kind_name(GenKind k);

// Tr(A) - Tr(rho(D11) - bar(rho(D11))); throws InvalidInput outside osp-tilde.
Vec epsilon(const OspAlgebra& A, const SuperMatrix& X);

// Generators of the osp presentation (t_ij with i != j, u/v/w_kl with k != l,
// all f and g) evaluated at every basis element of R, as flat vectors.
std::vector<Vec> presentation_generators(const OspAlgebra& A);

// Exactness of osp -> osp~ -> R_-/([R,R] ∩ R_-), generation, perfectness.
Report check_section2(const OspAlgebra& A);

// Tensor product L (x) R with [x(x)a, y(x)b] = (-1)^{|a||y|}[x,y](x)ab; basis index p*dim R + s.
LiePtr tensor_with(const LieSuperAlgebra& L, const SuperAlgebra& R);

// osp(k) (x) R -> osp(R, id) for supercommutative R.
Report example_supercommutative(std::size_t m, std::size_t n, const AlgebraPtr& R);
// gl(S) -> osp~(S + S^op, ex), restricting to sl(S) -> osp.
Report example_s_plus_sop(std::size_t m, std::size_t n, const AlgebraPtr& S);
// dim osp_{m|2n}(M_{l|l}, prp) against dim p_{(m+2n)l}.
Report example_periplectic_dims(std::size_t m, std::size_t n, std::size_t l, const Field& F);
// dim osp_{m|2n}(M_{k|2l}, osp) against dim osp_{(mk+4nl)|2(nk+ml)}.
Report example_orthosymplectic_dims(std::size_t m, std::size_t n, std::size_t k, std::size_t l, const Field& F);

// Diagonal elements of osp (osp coordinates) that act semisimply on the standard matrix units.
std::vector<Vec> osp_torus(const OspAlgebra& A);

std::size_t classical_osp_dim(std::size_t m, std::size_t n);

}  // namespace ospx
