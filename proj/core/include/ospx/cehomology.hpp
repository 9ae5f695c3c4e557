#pragma once

#include <array>
#include <cstdint>

#include "ospx/homology.hpp"
#include "ospx/osp.hpp"

namespace ospx {

// Monomial basis of the super exterior power: indices nondecreasing, equal
// neighbours allowed only at odd basis elements.
struct WedgeSpace {
  LiePtr L;
  int degree = 2;
  std::vector<std::array<std::uint32_t, 3>> monomials;  // unused slots hold 0

  std::size_t size() const { return monomials.size(); }
  std::size_t index_of(std::array<std::uint32_t, 3> mono) const;  // throws InvalidInput when absent
};

// All monomials of degree 2 or 3. With weights given, only monomials of total weight 0.
WedgeSpace wedge_space(const LiePtr& L, int degree, const std::vector<Vec>* weights = nullptr);
// C(d0,2) + d0 d1 + C(d1+1,2)
std::size_t wedge2_count(std::size_t even_dim, std::size_t odd_dim);

struct BoundaryMaps {
  WedgeSpace w2, w3;
  std::vector<SparseVec> d2;  // column per w2 monomial, in L coordinates
  std::vector<SparseVec> d3;  // column per w3 monomial, in w2 coordinates
  bool weight_reduced = false;
};

// d2(x^y) = [x,y]; d3(x^y^z) = [x,y]^z - (-1)^{|y||z|}[x,z]^y + (-1)^{|x|(|y|+|z|)}[y,z]^x.
// Throws SignConventionBroken when d2 d3 != 0 on some monomial. A nonempty torus
// (coordinates in L, acting diagonally on the basis) restricts both maps to weight 0.
BoundaryMaps boundary_maps(const LiePtr& L, const std::vector<Vec>& torus = {});

struct CeHomology {
  std::size_t dim = 0;
  std::size_t h1 = 0, h2 = 0;
  std::size_t wedge2 = 0, wedge3 = 0;  // sizes actually used
  std::size_t rank_d2 = 0, rank_d3 = 0, ker_d2 = 0;
  bool weight_reduced = false;
  std::size_t torus_used = 0;
};

CeHomology ce_homology(const LiePtr& L, const std::vector<Vec>& torus = {});
std::size_t h2_dimension(const LiePtr& L, const std::vector<Vec>& torus = {});
std::size_t h1_dimension(const LiePtr& L);

// Torus elements of osp acting diagonally on the osp basis.
std::vector<Vec> diagonal_torus(const OspAlgebra& A);

// Oracle H_2(osp_{m|2n}(R)) against the shape-dependent homology formula.
struct H2Comparison {
  std::size_t oracle = 0;
  std::optional<std::size_t> formula;
  std::string formula_name;  // "HD", "HD+RRR", "HDt+z", or empty
  bool assumption = false;   // Assumption on R_- ∩ center, used for (2,1)
  CeHomology ce;
  bool match() const { return formula && *formula == oracle; }
};

H2Comparison h2_compare(std::size_t m, std::size_t n, const AlgebraPtr& R);

}  // namespace ospx
