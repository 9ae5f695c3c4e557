#include "ospx/liesuper.hpp"

#include <algorithm>

namespace ospx {

LieSuperAlgebra::LieSuperAlgebra(Field F, std::vector<int> parity, std::vector<SparseVec> table,
                                 std::vector<std::string> names)
    : F_(F), parity_(std::move(parity)), table_(std::move(table)), names_(std::move(names)) {
  const std::size_t d = parity_.size();
  if (table_.size() != d * d) throw InvalidInput("bracket table must have dim^2 entries");
  for (const auto& e : table_)
    for (const auto& [k, c] : e)
      if (k >= d || !F_.contains(c)) throw InvalidInput("bad structure constant");
  if (names_.empty())
    for (std::size_t i = 0; i < d; ++i) names_.push_back("x" + std::to_string(i));
}

std::size_t LieSuperAlgebra::even_dim() const {
  return static_cast<std::size_t>(std::count(parity_.begin(), parity_.end(), 0));
}

Vec LieSuperAlgebra::bracket(const Vec& x, const Vec& y) const {
  const std::size_t d = dim();
  Vec r = zero();
  std::vector<std::size_t> ny;
  for (std::size_t j = 0; j < d; ++j)
    if (!y[j].is_zero()) ny.push_back(j);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (auto j : ny) {
      const auto& t = table_[i * d + j];
      if (!t.empty()) axpy(r, x[i] * y[j], t);
    }
  }
  return r;
}

LieSuperAlgebra LieSuperAlgebra::with_constant(std::size_t i, std::size_t j, std::size_t k,
                                               const Scalar& c) const {
  auto t = table_;
  Vec v = to_dense(F_, dim(), t[i * dim() + j]);
  v[k] = c;
  t[i * dim() + j] = to_sparse(v);
  return LieSuperAlgebra(F_, parity_, t, names_);
}

namespace {

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

Vec bracket_with_basis(const LieSuperAlgebra& L, const Vec& v, std::size_t k) {
  Vec r = L.zero();
  for (std::size_t t = 0; t < L.dim(); ++t)
    if (!v[t].is_zero()) axpy(r, v[t], L.bracket_basis(t, k));
  return r;
}

}  // namespace

Report verify_lie(const LieSuperAlgebra& L) {
  Report rep;
  const std::size_t d = L.dim();
  const Field& F = L.field();
  std::string w;
  for (std::size_t i = 0; i < d && w.empty(); ++i)
    for (std::size_t j = 0; j < d && w.empty(); ++j)
      for (const auto& [k, c] : L.bracket_basis(i, j))
        if (L.parity(k) != (L.parity(i) ^ L.parity(j))) {
          w = triple(i, j, k);
          break;
        }
  rep.add("grading", w.empty(), w);
  w.clear();
  for (std::size_t i = 0; i < d && w.empty(); ++i)
    for (std::size_t j = i; j < d; ++j) {
      Vec a = to_dense(F, d, L.bracket_basis(i, j));
      Vec b = to_dense(F, d, L.bracket_basis(j, i));
      Scalar s = (L.parity(i) & L.parity(j)) ? F.one() : F.make(-1);
      if (a != scale(s, b)) {
        w = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        break;
      }
    }
  bool skew = w.empty();
  rep.add("skew_symmetry", skew, w);
  w.clear();
  // With skew-symmetry the Jacobi expression is graded-alternating, so sorted triples suffice.
  for (std::size_t i = 0; i < d && w.empty(); ++i)
    for (std::size_t j = skew ? i : 0; j < d && w.empty(); ++j) {
      Vec xy = to_dense(F, d, L.bracket_basis(i, j));
      for (std::size_t k = skew ? j : 0; k < d; ++k) {
        int pi = L.parity(i), pj = L.parity(j), pk = L.parity(k);
        Vec J = bracket_with_basis(L, xy, k);
        if (pi & pk) J = scale(F.make(-1), J);
        Vec yz = bracket_with_basis(L, to_dense(F, d, L.bracket_basis(j, k)), i);
        axpy(J, (pj & pi) ? F.make(-1) : F.one(), yz);
        Vec zx = bracket_with_basis(L, to_dense(F, d, L.bracket_basis(k, i)), j);
        axpy(J, (pk & pj) ? F.make(-1) : F.one(), zx);
        if (!is_zero(J)) {
          w = triple(i, j, k);
          break;
        }
      }
    }
  rep.add("jacobi", w.empty(), w);
  return rep;
}

MatrixAmbient::MatrixAmbient(MatrixShape s, AlgebraPtr R) : s_(s), R_(std::move(R)) {
  check_shape(s_);
  dim_ = s_.size() * s_.size() * R_->dim();
  par_.resize(dim_);
  for (std::size_t f = 0; f < dim_; ++f) par_[f] = coordinate_parity(s_, *R_, f);
}

Vec MatrixAmbient::bracket(const Vec& x, const Vec& y) const {
  return flat_supercommutator(s_, *R_, x, y);
}

namespace {

Vec parity_part(const Ambient& A, const Vec& v, int p) {
  Vec r = v;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (A.parity(i) != p) r[i] = A.field().zero();
  return r;
}

}  // namespace

EmbeddedLie::EmbeddedLie(AmbientPtr amb, EchelonBasis even, EchelonBasis odd) : amb_(std::move(amb)) {
  ech_[0] = std::move(even);
  ech_[1] = std::move(odd);
  std::vector<int> par;
  for (int p = 0; p < 2; ++p)
    for (std::size_t r = 0; r < ech_[p].size(); ++r) {
      basis_.push_back(ech_[p].row(r));
      slot_.emplace_back(p, r);
      par.push_back(p);
    }
  const std::size_t D = basis_.size();
  const Field& F = amb_->field();
  std::vector<SparseVec> table(D * D);
  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = 0; j < D; ++j) {
      if ((par[i] & par[j]) == 0 && j < i) {
        // [x,y] = -[y,x] unless both odd
        SparseVec t = table[j * D + i];
        for (auto& e : t) e.second = -e.second;
        table[i * D + j] = std::move(t);
        continue;
      }
      if (par[i] && par[j] && j < i) {
        table[i * D + j] = table[j * D + i];
        continue;
      }
      Vec z = amb_->bracket(basis_[i], basis_[j]);
      auto c = coordinates(z);
      if (!c)
        throw NotClosed("bracket of basis elements " + std::to_string(i) + " and " + std::to_string(j) +
                        " leaves the span");
      table[i * D + j] = to_sparse(*c);
    }
  (void)F;
  L_ = std::make_shared<LieSuperAlgebra>(amb_->field(), par, std::move(table));
}

std::optional<Vec> EmbeddedLie::coordinates(const Vec& v) const {
  Vec r = ech_[1].reduce(ech_[0].reduce(v));
  if (!is_zero(r)) return std::nullopt;
  Vec c;
  c.reserve(basis_.size());
  for (int p = 0; p < 2; ++p) {
    Vec cp = ech_[p].coordinates_unchecked(v);
    c.insert(c.end(), cp.begin(), cp.end());
  }
  return c;
}

bool EmbeddedLie::contains(const Vec& v) const { return coordinates(v).has_value(); }

Vec EmbeddedLie::coordinates_or_throw(const Vec& v, const char* what) const {
  auto c = coordinates(v);
  if (!c) throw NotClosed(std::string(what) + " is not in the subalgebra");
  return *c;
}

Vec EmbeddedLie::embed(const Vec& coords) const {
  Vec v = zeros(amb_->field(), amb_->dim());
  for (std::size_t i = 0; i < basis_.size(); ++i) axpy(v, coords[i], basis_[i]);
  return v;
}

namespace {

struct Spanner {
  AmbientPtr amb;
  EchelonBasis ech[2];
  std::vector<Vec> added;

  explicit Spanner(AmbientPtr a) : amb(std::move(a)) {
    ech[0] = EchelonBasis(amb->field(), amb->dim());
    ech[1] = EchelonBasis(amb->field(), amb->dim());
  }
  void insert(const Vec& v) {
    for (int p = 0; p < 2; ++p) {
      Vec part = parity_part(*amb, v, p);
      if (is_zero(part)) continue;
      Vec r = ech[p].reduce(part);
      if (is_zero(r)) continue;
      ech[p].insert(r);
      added.push_back(r);
    }
  }
  std::size_t size() const { return ech[0].size() + ech[1].size(); }
};

}  // namespace

EmbeddedLie span_subalgebra(AmbientPtr amb, const std::vector<Vec>& gens) {
  Spanner S(amb);
  for (const auto& g : gens) {
    if (g.size() != amb->dim()) throw InvalidInput("generator has wrong length");
    S.insert(g);
  }
  return EmbeddedLie(amb, S.ech[0], S.ech[1]);
}

EmbeddedLie generated_subalgebra(AmbientPtr amb, const std::vector<Vec>& gens, std::size_t cap) {
  if (cap == 0) cap = amb->dim();
  Spanner S(amb);
  for (const auto& g : gens) {
    if (g.size() != amb->dim()) throw InvalidInput("generator has wrong length");
    S.insert(g);
  }
  const std::vector<Vec> G = S.added;
  for (std::size_t pos = 0; pos < S.added.size(); ++pos) {
    for (const auto& g : G) {
      S.insert(amb->bracket(S.added[pos], g));
      if (S.size() > cap) throw ClosureOverflow("generated subalgebra exceeds cap " + std::to_string(cap));
    }
  }
  return EmbeddedLie(amb, S.ech[0], S.ech[1]);
}

EmbeddedLie from_matrix_span(const std::vector<SuperMatrix>& mats) {
  if (mats.empty()) throw InvalidInput("from_matrix_span needs at least one matrix");
  for (const auto& M : mats)
    if (!(M.shape() == mats[0].shape()) || M.algebra()->name() != mats[0].algebra()->name())
      throw MixedShapes("matrices of mixed shapes or algebras");
  auto amb = std::make_shared<MatrixAmbient>(mats[0].shape(), mats[0].algebra());
  std::vector<Vec> gens;
  for (const auto& M : mats) gens.push_back(M.flatten());
  return span_subalgebra(amb, gens);
}

EmbeddedLie derived_subalgebra(const LiePtr& L) {
  auto amb = std::make_shared<LieAmbient>(L);
  std::vector<Vec> gens;
  for (const auto& t : L->table())
    if (!t.empty()) gens.push_back(to_dense(L->field(), L->dim(), t));
  return span_subalgebra(amb, gens);
}

std::vector<Vec> center(const LieSuperAlgebra& L) {
  const std::size_t d = L.dim();
  const Field& F = L.field();
  std::vector<Vec> K;
  for (std::size_t i = 0; i < d; ++i) K.push_back(L.basis(i));
  for (std::size_t j = 0; j < d && !K.empty(); ++j) {
    std::vector<Vec> cols;
    for (const auto& k : K) cols.push_back(bracket_with_basis(L, k, j));
    auto ker = kernel_basis(Matrix::from_columns(F, d, cols));
    std::vector<Vec> next;
    for (const auto& c : ker) {
      Vec v = L.zero();
      for (std::size_t t = 0; t < K.size(); ++t) axpy(v, c[t], K[t]);
      next.push_back(std::move(v));
    }
    K = std::move(next);
  }
  EchelonBasis E(F, d);
  for (const auto& k : K) E.insert(k);
  return E.rows();
}

bool is_perfect(const LieSuperAlgebra& L) {
  std::vector<SparseVec> rows;
  for (const auto& t : L.table())
    if (!t.empty()) rows.push_back(t);
  return sparse_rank(L.field(), rows) == L.dim();
}

Report check_homomorphism(const LinearMap& f) {
  Report rep;
  const auto& S = *f.source;
  const auto& T = *f.target;
  if (f.matrix.rows() != T.dim() || f.matrix.cols() != S.dim())
    throw InvalidInput("linear map has wrong dimensions");
  std::string w;
  for (std::size_t i = 0; i < S.dim() && w.empty(); ++i)
    for (std::size_t r = 0; r < T.dim(); ++r)
      if (!f.matrix.at(r, i).is_zero() && T.parity(r) != S.parity(i)) {
        w = "image of basis " + std::to_string(i) + " has wrong parity";
        break;
      }
  rep.add("parity", w.empty(), w);
  w.clear();
  std::vector<Vec> img;
  std::vector<SparseVec> simg;
  for (std::size_t i = 0; i < S.dim(); ++i) {
    img.push_back(f.matrix.col(i));
    simg.push_back(to_sparse(img.back()));
  }
  for (std::size_t i = 0; i < S.dim() && w.empty(); ++i)
    for (std::size_t j = 0; j < S.dim(); ++j) {
      Vec lhs = T.zero();
      for (const auto& [t, c] : S.bracket_basis(i, j)) axpy(lhs, c, simg[t]);
      Vec rhs = T.bracket(img[i], img[j]);
      if (lhs != rhs) {
        w = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        break;
      }
    }
  rep.add("bracket", w.empty(), w);
  return rep;
}

std::size_t kernel_dim(const LinearMap& f) { return f.matrix.cols() - rank(f.matrix); }

std::optional<std::vector<Vec>> basis_weights(const LieSuperAlgebra& L, const std::vector<Vec>& torus) {
  const std::size_t d = L.dim();
  std::vector<Vec> w(d, zeros(L.field(), torus.size()));
  for (std::size_t t = 0; t < torus.size(); ++t) {
    for (std::size_t i = 0; i < d; ++i) {
      Vec img = L.bracket(torus[t], L.basis(i));
      Scalar lam = img[i];
      img[i] = L.field().zero();
      if (!is_zero(img)) return std::nullopt;
      w[i][t] = lam;
    }
  }
  return w;
}

namespace {

LiePtr from_dense_table(const Field& F, std::vector<int> par, const std::vector<std::vector<long>>& t,
                        std::vector<std::string> names) {
  const std::size_t d = par.size();
  std::vector<SparseVec> table(d * d);
  for (std::size_t i = 0; i < d * d; ++i) {
    Vec v = zeros(F, d);
    for (std::size_t k = 0; k < d; ++k) v[k] = F.make(t[i][k]);
    table[i] = to_sparse(v);
  }
  return std::make_shared<LieSuperAlgebra>(F, std::move(par), std::move(table), std::move(names));
}

}  // namespace

LiePtr sl2(const Field& F) {
  // [h,e] = 2e, [h,f] = -2f, [e,f] = h
  std::vector<std::vector<long>> t(9, std::vector<long>(3, 0));
  auto set = [&](int i, int j, std::vector<long> v) {
    t[i * 3 + j] = v;
    for (auto& x : v) x = -x;
    t[j * 3 + i] = v;
  };
  set(1, 0, {2, 0, 0});
  set(1, 2, {0, 0, -2});
  set(0, 2, {0, 1, 0});
  return from_dense_table(F, {0, 0, 0}, t, {"e", "h", "f"});
}

LiePtr gl2(const Field& F) {
  std::vector<std::vector<long>> t(16, std::vector<long>(4, 0));
  auto set = [&](int i, int j, std::vector<long> v) {
    t[i * 4 + j] = v;
    for (auto& x : v) x = -x;
    t[j * 4 + i] = v;
  };
  set(1, 0, {2, 0, 0, 0});
  set(1, 2, {0, 0, -2, 0});
  set(0, 2, {0, 1, 0, 0});
  return from_dense_table(F, {0, 0, 0, 0}, t, {"e", "h", "f", "z"});
}

LiePtr abelian(const Field& F, std::size_t even, std::size_t odd) {
  std::vector<int> par(even, 0);
  par.insert(par.end(), odd, 1);
  std::vector<SparseVec> table(par.size() * par.size());
  return std::make_shared<LieSuperAlgebra>(F, par, table);
}

}  // namespace ospx
