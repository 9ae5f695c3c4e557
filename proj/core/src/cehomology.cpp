#include "ospx/cehomology.hpp"

#include <map>
#include <unordered_map>

namespace ospx {

namespace {

std::uint64_t key(const std::array<std::uint32_t, 3>& m) {
  return (static_cast<std::uint64_t>(m[0]) << 42) | (static_cast<std::uint64_t>(m[1]) << 21) | m[2];
}

struct Lookup {
  std::unordered_map<std::uint64_t, std::size_t> idx;
  explicit Lookup(const WedgeSpace& W) {
    for (std::size_t i = 0; i < W.size(); ++i) idx.emplace(key(W.monomials[i]), i);
  }
  std::size_t at(std::uint32_t p, std::uint32_t q) const {
    auto it = idx.find(key({p, q, 0}));
    if (it == idx.end()) throw InvalidInput("wedge monomial outside the weight-0 part");
    return it->second;
  }
};

using Accum = std::map<std::uint32_t, Scalar>;

void bump(Accum& acc, std::size_t i, const Scalar& c) {
  auto [it, fresh] = acc.emplace(static_cast<std::uint32_t>(i), c);
  if (!fresh) it->second += c;
}

// acc += c * (e_p ^ e_q) in normal form.
void add_wedge(Accum& acc, const LieSuperAlgebra& L, const Lookup& W2, std::uint32_t p, std::uint32_t q,
               const Scalar& c) {
  if (p == q) {
    if (L.parity(p) == 0) return;
    bump(acc, W2.at(p, p), c);
    return;
  }
  if (p < q) {
    bump(acc, W2.at(p, q), c);
    return;
  }
  Scalar s = (L.parity(p) & L.parity(q)) ? c : -c;
  bump(acc, W2.at(q, p), s);
}

SparseVec to_sparse(const Accum& acc) {
  SparseVec v;
  for (const auto& [i, c] : acc)
    if (!c.is_zero()) v.emplace_back(i, c);
  return v;
}

bool zero_weight(const std::vector<Vec>* w, std::initializer_list<std::uint32_t> idx) {
  if (!w) return true;
  const Vec& first = (*w)[*idx.begin()];
  for (std::size_t t = 0; t < first.size(); ++t) {
    Scalar s = first[t] - first[t];
    for (auto i : idx) s += (*w)[i][t];
    if (!s.is_zero()) return false;
  }
  return true;
}

std::vector<Vec> eigen_torus(const LieSuperAlgebra& L, const std::vector<Vec>& torus) {
  std::vector<Vec> keep;
  for (const auto& t : torus)
    if (basis_weights(L, {t})) keep.push_back(t);
  return keep;
}

}  // namespace

std::size_t WedgeSpace::index_of(std::array<std::uint32_t, 3> mono) const {
  for (std::size_t i = 0; i < monomials.size(); ++i)
    if (monomials[i] == mono) return i;
  throw InvalidInput("monomial not in wedge space");
}

std::size_t wedge2_count(std::size_t d0, std::size_t d1) {
  return d0 * (d0 - (d0 ? 1 : 0)) / 2 + d0 * d1 + d1 * (d1 + 1) / 2;
}

WedgeSpace wedge_space(const LiePtr& L, int degree, const std::vector<Vec>* weights) {
  if (degree != 2 && degree != 3) throw InvalidInput("wedge degree must be 2 or 3");
  WedgeSpace W;
  W.L = L;
  W.degree = degree;
  const auto d = static_cast<std::uint32_t>(L->dim());
  auto ok = [&](std::uint32_t a, std::uint32_t b) { return a < b || (a == b && L->parity(a) == 1); };
  for (std::uint32_t i = 0; i < d; ++i)
    for (std::uint32_t j = i; j < d; ++j) {
      if (!ok(i, j)) continue;
      if (degree == 2) {
        if (zero_weight(weights, {i, j})) W.monomials.push_back({i, j, 0});
        continue;
      }
      for (std::uint32_t k = j; k < d; ++k)
        if (ok(j, k) && zero_weight(weights, {i, j, k})) W.monomials.push_back({i, j, k});
    }
  return W;
}

BoundaryMaps boundary_maps(const LiePtr& Lp, const std::vector<Vec>& torus) {
  const LieSuperAlgebra& L = *Lp;
  const Field& F = L.field();
  BoundaryMaps B;
  std::optional<std::vector<Vec>> weights;
  if (!torus.empty()) weights = basis_weights(L, torus);
  if (!torus.empty() && !weights) throw InvalidInput("torus does not act diagonally on the basis");
  const std::vector<Vec>* wp = weights ? &*weights : nullptr;
  B.weight_reduced = wp != nullptr;
  B.w2 = wedge_space(Lp, 2, wp);
  B.w3 = wedge_space(Lp, 3, wp);
  Lookup W2(B.w2);

  for (const auto& mono : B.w2.monomials) B.d2.push_back(L.bracket_basis(mono[0], mono[1]));

  auto par = [&](std::uint32_t i) { return L.parity(i); };
  for (const auto& mono : B.w3.monomials) {
    const std::uint32_t x = mono[0], y = mono[1], z = mono[2];
    Accum acc;
    auto term = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c, const Scalar& s) {
      for (const auto& [p, v] : L.bracket_basis(a, b)) add_wedge(acc, L, W2, p, c, s * v);
    };
    term(x, y, z, F.one());
    term(x, z, y, (par(y) & par(z)) ? F.one() : F.make(-1));
    term(y, z, x, (par(x) & (par(y) ^ par(z))) ? F.make(-1) : F.one());
    B.d3.push_back(to_sparse(acc));
  }

  for (std::size_t c = 0; c < B.d3.size(); ++c) {
    Vec img = L.zero();
    for (const auto& [q, v] : B.d3[c]) axpy(img, v, B.d2[q]);
    if (!is_zero(img)) {
      const auto& m = B.w3.monomials[c];
      throw SignConventionBroken("d2 d3 != 0 on monomial (" + std::to_string(m[0]) + "," + std::to_string(m[1]) +
                                 "," + std::to_string(m[2]) + ")");
    }
  }
  return B;
}

std::size_t h1_dimension(const LiePtr& L) {
  std::vector<SparseVec> cols;
  for (std::size_t i = 0; i < L->dim(); ++i)
    for (std::size_t j = i; j < L->dim(); ++j)
      if (!L->bracket_basis(i, j).empty()) cols.push_back(L->bracket_basis(i, j));
  return L->dim() - sparse_rank(L->field(), std::move(cols));
}

CeHomology ce_homology(const LiePtr& L, const std::vector<Vec>& torus) {
  CeHomology r;
  r.dim = L->dim();
  auto use = eigen_torus(*L, torus);
  r.torus_used = use.size();
  BoundaryMaps B = boundary_maps(L, use);
  r.weight_reduced = B.weight_reduced;
  r.wedge2 = B.w2.size();
  r.wedge3 = B.w3.size();
  r.rank_d2 = sparse_rank(L->field(), B.d2);
  r.rank_d3 = sparse_rank(L->field(), B.d3);
  r.ker_d2 = r.wedge2 - r.rank_d2;
  r.h2 = r.ker_d2 - r.rank_d3;
  r.h1 = h1_dimension(L);
  return r;
}

std::size_t h2_dimension(const LiePtr& L, const std::vector<Vec>& torus) { return ce_homology(L, torus).h2; }

std::vector<Vec> diagonal_torus(const OspAlgebra& A) { return eigen_torus(A.osp.lie(), osp_torus(A)); }

H2Comparison h2_compare(std::size_t m, std::size_t n, const AlgebraPtr& R) {
  H2Comparison c;
  OspAlgebra A = build_osp(m, n, R);
  c.ce = ce_homology(A.osp.algebra(), diagonal_torus(A));
  c.oracle = c.ce.h2;
  c.assumption = assumption_checker(*R).holds;
  if (m == 1 && n == 1) {
    c.formula = hd1_tilde(R).homology.dim + i3_and_z(R).z_dim();
    c.formula_name = "HDt+z";
  } else if (m == 2 && n == 1) {
    if (c.assumption) {
      c.formula = hd1_minus(R).homology.dim + quotient_rrr(R).Q.dim();
      c.formula_name = "HD+RRR";
    }
  } else {
    c.formula = hd1_minus(R).homology.dim;
    c.formula_name = "HD";
  }
  return c;
}

}  // namespace ospx
