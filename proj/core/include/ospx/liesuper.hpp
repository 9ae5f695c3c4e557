#pragma once

#include <memory>
#include <optional>

#include "ospx/supermatrix.hpp"

namespace ospx {

// Lie superalgebra on a homogeneous basis with sparse structure constants.
class LieSuperAlgebra {
 public:
  LieSuperAlgebra(Field F, std::vector<int> parity, std::vector<SparseVec> table,
                  std::vector<std::string> names = {});

  const Field& field() const { return F_; }
  std::size_t dim() const { return parity_.size(); }
  int parity(std::size_t i) const { return parity_[i]; }
  const std::vector<int>& parities() const { return parity_; }
  const SparseVec& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  const std::vector<SparseVec>& table() const { return table_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::size_t even_dim() const;

  Vec zero() const { return zeros(F_, dim()); }
  Vec basis(std::size_t i) const { return unit_vector(F_, dim(), i); }
  Vec bracket(const Vec& x, const Vec& y) const;
  // Copy with one structure constant replaced (used for negative controls).
  LieSuperAlgebra with_constant(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) const;

 private:
  Field F_;
  std::vector<int> parity_;
  std::vector<SparseVec> table_;
  std::vector<std::string> names_;
};

using LiePtr = std::shared_ptr<const LieSuperAlgebra>;

Report verify_lie(const LieSuperAlgebra& L);

// Coordinate space with homogeneous coordinates and a bracket.
class Ambient {
 public:
  virtual ~Ambient() = default;
  virtual const Field& field() const = 0;
  virtual std::size_t dim() const = 0;
  virtual int parity(std::size_t coord) const = 0;
  virtual Vec bracket(const Vec& x, const Vec& y) const = 0;
};

class MatrixAmbient : public Ambient {
 public:
  MatrixAmbient(MatrixShape s, AlgebraPtr R);
  const Field& field() const override { return R_->field(); }
  std::size_t dim() const override { return dim_; }
  int parity(std::size_t coord) const override { return par_[coord]; }
  Vec bracket(const Vec& x, const Vec& y) const override;
  const MatrixShape& shape() const { return s_; }
  const AlgebraPtr& algebra() const { return R_; }

 private:
  MatrixShape s_;
  AlgebraPtr R_;
  std::size_t dim_;
  std::vector<int> par_;
};

class LieAmbient : public Ambient {
 public:
  explicit LieAmbient(LiePtr L) : L_(std::move(L)) {}
  const Field& field() const override { return L_->field(); }
  std::size_t dim() const override { return L_->dim(); }
  int parity(std::size_t coord) const override { return L_->parity(coord); }
  Vec bracket(const Vec& x, const Vec& y) const override { return L_->bracket(x, y); }
  const LiePtr& lie() const { return L_; }

 private:
  LiePtr L_;
};

using AmbientPtr = std::shared_ptr<const Ambient>;

// Subalgebra of an ambient: homogeneous RREF basis (even vectors first) and
// its own structure constants.
class EmbeddedLie {
 public:
  EmbeddedLie() = default;
  EmbeddedLie(AmbientPtr amb, EchelonBasis even, EchelonBasis odd);

  const AmbientPtr& ambient() const { return amb_; }
  const LiePtr& algebra() const { return L_; }
  const LieSuperAlgebra& lie() const { return *L_; }
  std::size_t dim() const { return basis_.size(); }
  const Vec& basis(std::size_t i) const { return basis_[i]; }
  const std::vector<Vec>& basis() const { return basis_; }
  bool contains(const Vec& ambient_vec) const;
  std::optional<Vec> coordinates(const Vec& ambient_vec) const;
  Vec coordinates_or_throw(const Vec& ambient_vec, const char* what) const;
  Vec embed(const Vec& coords) const;

 private:
  AmbientPtr amb_;
  EchelonBasis ech_[2];
  std::vector<Vec> basis_;
  std::vector<std::pair<int, std::size_t>> slot_;  // basis index -> (parity, echelon row)
  LiePtr L_;
};

// Span of the given vectors, which must already be closed (NotClosed otherwise).
EmbeddedLie span_subalgebra(AmbientPtr amb, const std::vector<Vec>& gens);
// Subalgebra generated by gens; ClosureOverflow past cap (0 = ambient dimension).
EmbeddedLie generated_subalgebra(AmbientPtr amb, const std::vector<Vec>& gens, std::size_t cap = 0);
EmbeddedLie from_matrix_span(const std::vector<SuperMatrix>& mats);

EmbeddedLie derived_subalgebra(const LiePtr& L);
std::vector<Vec> center(const LieSuperAlgebra& L);
bool is_perfect(const LieSuperAlgebra& L);

struct LinearMap {
  LiePtr source, target;
  Matrix matrix;  // target.dim x source.dim
};

Report check_homomorphism(const LinearMap& f);
std::size_t kernel_dim(const LinearMap& f);

// Common eigenvalues of ad(h) for each torus element h on each basis vector;
// nullopt when some basis vector is not a common eigenvector.
std::optional<std::vector<Vec>> basis_weights(const LieSuperAlgebra& L, const std::vector<Vec>& torus);

// Tabulated sl_2 and gl_2 over F (basis e, h, f and e, h, f, z).
LiePtr sl2(const Field& F);
LiePtr gl2(const Field& F);
LiePtr abelian(const Field& F, std::size_t even, std::size_t odd);

}  // namespace ospx
