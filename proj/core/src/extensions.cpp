#include "ospx/extensions.hpp"

#include <map>

namespace ospx {

namespace {

Scalar sgn(const Field& F, int e) { return (e & 1) ? F.make(-1) : F.one(); }

int deg(const SuperAlgebra& R, const Vec& a) { return R.degree(a).value_or(0); }

std::string tuple_str(std::initializer_list<std::size_t> xs) {
  std::string s = "(";
  bool first = true;
  for (auto x : xs) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

SparseVec sparse_of(const Vec& v) { return to_sparse(v); }

// Rank-revealing pass over the columns; returns indices of the columns kept.
std::vector<std::size_t> independent_columns(const Field& F, std::size_t n, const std::vector<Vec>& cols) {
  EchelonBasis E(F, n);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < cols.size(); ++i)
    if (E.insert(cols[i])) keep.push_back(i);
  return keep;
}

// Model -> base projection matrix for a subalgebra of a central extension.
LinearMap project_model(const EmbeddedLie& model, const CentralExtension& E, const LiePtr& base) {
  const std::size_t dl = E.base_dim();
  Matrix M(base->field(), dl, model.dim());
  for (std::size_t p = 0; p < model.dim(); ++p)
    for (std::size_t r = 0; r < dl; ++r) M.at(r, p) = model.basis(p)[r];
  return LinearMap{model.algebra(), base, M};
}

Vec tail(const Vec& v, std::size_t from) { return Vec(v.begin() + static_cast<long>(from), v.end()); }

// Shared checks for a subalgebra of L ⊕ Z mapping onto L.
void check_kernel(Report& rep, const EmbeddedLie& model, const LinearMap& proj, const std::vector<Vec>& kernel,
                  std::size_t base_dim, const HomologyModule& expected) {
  const Field& F = model.lie().field();
  auto& c = rep.add("kernel_dim", kernel.size() == expected.dim,
                    kernel.size() == expected.dim ? "" : std::to_string(kernel.size()) + " vs " +
                                                             std::to_string(expected.dim));
  c.dims = {{"kernel", static_cast<long long>(kernel.size())},
            {expected.name, static_cast<long long>(expected.dim)},
            {"model", static_cast<long long>(model.dim())}};

  std::string w;
  for (std::size_t k = 0; k < kernel.size() && w.empty(); ++k)
    for (std::size_t i = 0; i < model.dim(); ++i)
      if (!is_zero(model.lie().bracket(kernel[k], model.lie().basis(i)))) {
        w = "kernel vector " + std::to_string(k) + " vs basis " + std::to_string(i);
        break;
      }
  rep.add("kernel_central", w.empty(), w);

  w.clear();
  const std::size_t zdim = model.ambient()->dim() - base_dim;
  EchelonBasis H(F, zdim);
  for (const auto& b : expected.basis) H.insert(b);
  for (std::size_t k = 0; k < kernel.size() && w.empty(); ++k) {
    Vec e = model.embed(kernel[k]);
    for (std::size_t r = 0; r < base_dim; ++r)
      if (!e[r].is_zero()) w = "kernel vector " + std::to_string(k) + " has a base component";
    if (w.empty() && !H.contains(tail(e, base_dim)))
      w = "kernel vector " + std::to_string(k) + " outside " + expected.name;
  }
  rep.add("kernel_in_" + expected.name, w.empty(), w);

  std::size_t rk = rank(proj.matrix);
  rep.add("projection_onto", rk == proj.target->dim(),
          rk == proj.target->dim() ? "" : "rank " + std::to_string(rk));
  rep.merge(check_homomorphism(proj), "projection");
}

template <class Fn>
void check_pairs(Report& rep, const std::string& name, const SuperAlgebra& R, Fn fn) {
  std::string w;
  for (std::size_t s = 0; s < R.dim() && w.empty(); ++s)
    for (std::size_t t = 0; t < R.dim(); ++t)
      if (!fn(R.basis(s), R.basis(t), R.parity(s), R.parity(t))) {
        w = tuple_str({s, t});
        break;
      }
  rep.add(name, w.empty(), w);
}

template <class Fn>
void check_triples(Report& rep, const std::string& name, const SuperAlgebra& R, Fn fn) {
  std::string w;
  const std::size_t d = R.dim();
  for (std::size_t s = 0; s < d && w.empty(); ++s)
    for (std::size_t t = 0; t < d && w.empty(); ++t)
      for (std::size_t u = 0; u < d; ++u)
        if (!fn(R.basis(s), R.basis(t), R.basis(u), R.parity(s), R.parity(t), R.parity(u))) {
          w = tuple_str({s, t, u});
          break;
        }
  rep.add(name, w.empty(), w);
}

}  // namespace

// ---------------------------------------------------------------------------
// Cocycles and extensions

Vec Cocycle::eval(const Vec& x, const Vec& y) const {
  const std::size_t d = source->dim();
  Vec r = zeros(F, zdim());
  if (zdim() == 0) return r;
  std::vector<std::size_t> ny;
  for (std::size_t j = 0; j < d; ++j)
    if (!y[j].is_zero()) ny.push_back(j);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (auto j : ny) axpy(r, x[i] * y[j], value(i, j));
  }
  return r;
}

Cocycle Cocycle::with_pair_negated(std::size_t i, std::size_t j) const {
  Cocycle c = *this;
  const std::size_t d = source->dim();
  c.values[i * d + j] = scale(F.make(-1), values[i * d + j]);
  if (i != j) c.values[j * d + i] = scale(F.make(-1), values[j * d + i]);
  return c;
}

Cocycle zero_cocycle(const LiePtr& L, std::vector<int> zpar) {
  Cocycle c{L, L->field(), std::move(zpar), {}};
  c.values.assign(L->dim() * L->dim(), zeros(c.F, c.zdim()));
  return c;
}

Report verify_cocycle(const Cocycle& c) {
  Report rep;
  const auto& L = *c.source;
  const std::size_t d = L.dim(), zd = c.zdim();
  const Field& F = c.F;
  if (c.values.size() != d * d) throw InvalidInput("cocycle table must have dim^2 entries");

  std::string w;
  for (std::size_t i = 0; i < d && w.empty(); ++i)
    for (std::size_t j = 0; j < d && w.empty(); ++j)
      for (std::size_t q = 0; q < zd; ++q)
        if (!c.value(i, j)[q].is_zero() && c.zpar[q] != (L.parity(i) ^ L.parity(j))) {
          w = tuple_str({i, j});
          break;
        }
  rep.add("grading", w.empty(), w);

  w.clear();
  for (std::size_t i = 0; i < d && w.empty(); ++i)
    for (std::size_t j = i; j < d; ++j) {
      Vec s = add(c.value(i, j), scale(sgn(F, L.parity(i) & L.parity(j)), c.value(j, i)));
      if (!is_zero(s)) {
        w = tuple_str({i, j});
        break;
      }
    }
  const bool cc1 = w.empty();
  rep.add("CC1", cc1, w);

  // With CC1 the cyclic expression is graded-symmetric, so sorted triples suffice.
  w.clear();
  std::size_t triples = 0;
  auto term = [&](std::size_t a, std::size_t b, std::size_t k, Vec& acc, const Scalar& s) {
    for (const auto& [t, coef] : L.bracket_basis(a, b)) axpy(acc, s * coef, c.value(t, k));
  };
  if (zd > 0) {
    for (std::size_t i = 0; i < d && w.empty(); ++i)
      for (std::size_t j = cc1 ? i : 0; j < d && w.empty(); ++j)
        for (std::size_t k = cc1 ? j : 0; k < d; ++k) {
          ++triples;
          const int pi = L.parity(i), pj = L.parity(j), pk = L.parity(k);
          Vec acc = zeros(F, zd);
          term(i, j, k, acc, sgn(F, pi & pk));
          term(j, k, i, acc, sgn(F, pj & pi));
          term(k, i, j, acc, sgn(F, pk & pj));
          if (!is_zero(acc)) {
            w = tuple_str({i, j, k});
            break;
          }
        }
  }
  rep.add("CC2", w.empty(), w).dims = {{"triples", static_cast<long long>(triples)},
                                       {"dim", static_cast<long long>(d)},
                                       {"zdim", static_cast<long long>(zd)}};
  return rep;
}

Vec CentralExtension::lift(const Vec& x) const {
  Vec v = x;
  v.resize(base_dim() + z_dim(), cocycle.F.zero());
  return v;
}

Vec CentralExtension::central(const Vec& z) const {
  Vec v = zeros(cocycle.F, base_dim());
  v.insert(v.end(), z.begin(), z.end());
  return v;
}

CentralExtension central_extension(const Cocycle& c, bool verify) {
  if (verify) {
    Report r = verify_cocycle(c);
    if (!r.all_pass()) throw CocycleInvalid("cocycle check failed: " + r.summary());
  }
  const auto& L = *c.source;
  const std::size_t dl = L.dim(), dz = c.zdim(), dt = dl + dz;
  std::vector<int> par = L.parities();
  par.insert(par.end(), c.zpar.begin(), c.zpar.end());
  std::vector<SparseVec> table(dt * dt);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dl; ++i) names.push_back(L.name(i));
  for (std::size_t q = 0; q < dz; ++q) names.push_back("z" + std::to_string(q));
  for (std::size_t i = 0; i < dl; ++i)
    for (std::size_t j = 0; j < dl; ++j) {
      SparseVec e = L.bracket_basis(i, j);
      const Vec& v = c.value(i, j);
      for (std::size_t q = 0; q < dz; ++q)
        if (!v[q].is_zero()) e.emplace_back(static_cast<std::uint32_t>(dl + q), v[q]);
      table[i * dt + j] = std::move(e);
    }
  CentralExtension E;
  E.cocycle = c;
  E.total = std::make_shared<LieSuperAlgebra>(c.F, par, std::move(table), names);
  Matrix P(c.F, dl, dt);
  for (std::size_t i = 0; i < dl; ++i) P.at(i, i) = c.F.one();
  E.projection = LinearMap{E.total, c.source, P};
  return E;
}

Report check_central_extension(const CentralExtension& E) {
  Report rep;
  rep.merge(verify_lie(*E.total), "lie");
  EchelonBasis Z(E.cocycle.F, E.total->dim());
  for (const auto& v : center(*E.total)) Z.insert(v);
  std::string w;
  for (std::size_t q = 0; q < E.z_dim(); ++q)
    if (!Z.contains(E.central(unit_vector(E.cocycle.F, E.z_dim(), q)))) {
      w = "z" + std::to_string(q);
      break;
    }
  rep.add("z_in_center", w.empty(), w);
  rep.merge(check_homomorphism(E.projection), "projection");
  const std::size_t kd = kernel_dim(E.projection);
  rep.add("projection.kernel", kd == E.z_dim(), kd == E.z_dim() ? "" : std::to_string(kd));
  return rep;
}

// ---------------------------------------------------------------------------
// alpha on gl restricted to osp

Cocycle alpha_gl(const OspAlgebra& A, const TensorQuotient& Q) {
  const auto& R = *A.R;
  const Field& F = R.field();
  const std::size_t N = A.shape.size(), d = R.dim();
  const auto& L = A.osp.algebra();
  const std::size_t dim = L->dim();

  std::vector<Vec> P(d * d);
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = 0; t < d; ++t) P[s * d + t] = Q.pair(R.basis(s), R.basis(t));

  struct Entry {
    std::size_t i, j, s;
    Scalar c;
  };
  std::vector<std::vector<Entry>> nz(dim);
  std::vector<std::vector<std::vector<std::pair<std::size_t, Scalar>>>> byEntry(
      dim, std::vector<std::vector<std::pair<std::size_t, Scalar>>>(N * N));
  for (std::size_t p = 0; p < dim; ++p) {
    const Vec& X = A.osp.basis(p);
    for (std::size_t f = 0; f < X.size(); ++f) {
      if (X[f].is_zero()) continue;
      std::size_t s = f % d, ij = f / d;
      nz[p].push_back({ij / N, ij % N, s, X[f]});
      byEntry[p][ij].emplace_back(s, X[f]);
    }
  }

  Cocycle c{L, F, Q.Q.parities(), {}};
  c.values.assign(dim * dim, zeros(F, c.zdim()));
  if (c.zdim() == 0) return c;
  for (std::size_t p = 0; p < dim; ++p)
    for (std::size_t q = 0; q < dim; ++q) {
      Vec& v = c.values[p * dim + q];
      for (const auto& e : nz[p]) {
        const int pi = A.shape.index_parity(e.i + 1);
        for (const auto& [t, y] : byEntry[q][e.j * N + e.i]) {
          const int ex = pi & (pi ^ R.parity(e.s) ^ R.parity(t));
          axpy(v, sgn(F, ex) * e.c * y, P[e.s * d + t]);
        }
      }
    }
  return c;
}

// ---------------------------------------------------------------------------
// sto model

Vec StoModel::lift(GenKind kind, std::size_t i, std::size_t j, const Vec& a) const {
  Vec flat = generator(osp.shape, osp.R, kind, i, j, a).flatten();
  Vec oc = osp.osp.coordinates_or_throw(flat, "generator outside osp");
  return model.coordinates_or_throw(ext.lift(oc), "lift outside the model");
}

Vec StoModel::z_part(const Vec& model_vec) const { return tail(model.embed(model_vec), ext.base_dim()); }

StoModel sto_model(std::size_t m, std::size_t n, const AlgebraPtr& R) {
  if (m < 1 || n < 1 || (m == 1 && n == 1)) throw InvalidShape("sto model needs m,n >= 1 and (m,n) != (1,1)");
  StoModel S;
  S.osp = build_osp(m, n, R);
  S.hd = hd1_minus(R);
  S.ext = central_extension(alpha_gl(S.osp, S.hd.quotient));
  auto amb = std::make_shared<LieAmbient>(S.ext.total);
  std::vector<Vec> gens;
  for (const auto& G : presentation_generators(S.osp))
    gens.push_back(S.ext.lift(S.osp.osp.coordinates_or_throw(G, "generator outside osp")));
  S.model = generated_subalgebra(amb, gens, S.ext.total->dim());
  S.projection = project_model(S.model, S.ext, S.osp.osp.algebra());
  S.kernel = kernel_basis(S.projection.matrix);
  return S;
}

Report check_sto_model(const StoModel& S) {
  Report rep;
  check_kernel(rep, S.model, S.projection, S.kernel, S.ext.base_dim(), S.hd.homology);
  rep.add("perfect", is_perfect(S.model.lie()));
  return rep;
}

// ---------------------------------------------------------------------------
// Forms given on labelled spanning vectors

Cocycle cocycle_from_labels(const LiePtr& L, const Field& F, std::vector<int> zpar, const LabelledForm& form,
                            Report* rep) {
  const std::size_t dim = L->dim(), nl = form.labels.size(), zd = zpar.size();
  auto keep = independent_columns(F, dim, form.labels);
  if (keep.size() != dim) throw WellDefinednessFailure("labels do not span the algebra");

  std::vector<std::vector<std::pair<std::size_t, const Vec*>>> rows(nl), cols(nl);
  for (const auto& [a, b, v] : form.entries) {
    rows[a].emplace_back(b, &v);
    cols[b].emplace_back(a, &v);
  }
  auto kernel = kernel_basis(Matrix::from_columns(F, dim, form.labels));
  std::string w;
  for (std::size_t k = 0; k < kernel.size() && w.empty(); ++k) {
    std::map<std::size_t, Vec> left, right;
    for (std::size_t l = 0; l < nl; ++l) {
      const Scalar& c = kernel[k][l];
      if (c.is_zero()) continue;
      for (const auto& [b, v] : rows[l]) {
        auto it = left.try_emplace(b, zeros(F, zd)).first;
        axpy(it->second, c, *v);
      }
      for (const auto& [a, v] : cols[l]) {
        auto it = right.try_emplace(a, zeros(F, zd)).first;
        axpy(it->second, c, *v);
      }
    }
    for (const auto& [b, v] : left)
      if (!is_zero(v)) w = "relation " + std::to_string(k) + " against " + form.names[b];
    for (const auto& [a, v] : right)
      if (!is_zero(v) && w.empty()) w = "relation " + std::to_string(k) + " against " + form.names[a];
  }
  if (rep) {
    auto& c = rep->add("well_defined", w.empty(), w);
    c.dims = {{"labels", static_cast<long long>(nl)}, {"relations", static_cast<long long>(kernel.size())}};
  }
  if (!w.empty()) throw WellDefinednessFailure("labelled form not well defined: " + w);

  // Express each basis vector of L through the kept labels.
  std::vector<Vec> kcols;
  for (auto l : keep) kcols.push_back(form.labels[l]);
  Matrix P = Matrix::from_columns(F, dim, kcols);
  std::vector<long> slot(nl, -1);
  for (std::size_t r = 0; r < keep.size(); ++r) slot[keep[r]] = static_cast<long>(r);
  // coef[r] lists (basis p, coefficient of label keep[r] in basis p).
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> coef(dim);
  for (std::size_t p = 0; p < dim; ++p) {
    auto x = solve(P, unit_vector(F, dim, p));
    if (!x) throw WellDefinednessFailure("basis vector not reached by labels");
    for (std::size_t r = 0; r < dim; ++r)
      if (!(*x)[r].is_zero()) coef[r].emplace_back(p, (*x)[r]);
  }
  Cocycle c{L, F, std::move(zpar), {}};
  c.values.assign(dim * dim, zeros(F, zd));
  for (const auto& [a, b, v] : form.entries) {
    if (slot[a] < 0 || slot[b] < 0) continue;
    for (const auto& [p, x] : coef[static_cast<std::size_t>(slot[a])])
      for (const auto& [q, y] : coef[static_cast<std::size_t>(slot[b])]) axpy(c.values[p * dim + q], x * y, v);
  }
  return c;
}

// ---------------------------------------------------------------------------
// beta on sto_{2|2}

Sto22Beta beta_sto22(const AlgebraPtr& Rp) {
  const auto& R = *Rp;
  const Field& F = R.field();
  const std::size_t d = R.dim();
  Sto22Beta B;
  B.sto = sto_model(2, 1, Rp);
  B.rrr = quotient_rrr(Rp);
  const auto& S = B.sto;
  const auto& L = S.model.lie();
  const Vec one = R.unit();

  // Label layout: h_{i1}(a,b), t12(a), v1(a), w1(a), f_{i1}(a), g_{1i}(a).
  auto& lab = B.form;
  std::vector<int> lpar;
  auto push = [&](std::string name, Vec v, int p) {
    lab.names.push_back(std::move(name));
    lab.labels.push_back(std::move(v));
    lpar.push_back(p);
    return lab.labels.size() - 1;
  };
  std::vector<std::vector<std::size_t>> f(3, std::vector<std::size_t>(d)), g = f;
  std::vector<std::size_t> t12(d), v1(d), w1(d);
  std::vector<std::vector<std::vector<std::size_t>>> h(3, std::vector<std::vector<std::size_t>>(d, std::vector<std::size_t>(d)));
  for (std::size_t i = 1; i <= 2; ++i)
    for (std::size_t s = 0; s < d; ++s) {
      f[i][s] = push("f" + std::to_string(i) + "1(b" + std::to_string(s) + ")", S.lift(GenKind::f, i, 1, R.basis(s)),
                     1 ^ R.parity(s));
      g[i][s] = push("g1" + std::to_string(i) + "(b" + std::to_string(s) + ")", S.lift(GenKind::g, 1, i, R.basis(s)),
                     1 ^ R.parity(s));
    }
  for (std::size_t i = 1; i <= 2; ++i)
    for (std::size_t s = 0; s < d; ++s)
      for (std::size_t t = 0; t < d; ++t)
        h[i][s][t] = push("h" + std::to_string(i) + "1(b" + std::to_string(s) + ",b" + std::to_string(t) + ")",
                          L.bracket(lab.labels[f[i][s]], lab.labels[g[i][t]]), R.parity(s) ^ R.parity(t));
  const Vec g11one = S.lift(GenKind::g, 1, 1, one), f11one = S.lift(GenKind::f, 1, 1, one);
  for (std::size_t s = 0; s < d; ++s) {
    const std::string a = "(b" + std::to_string(s) + ")";
    t12[s] = push("t12" + a, S.lift(GenKind::t, 1, 2, R.basis(s)), R.parity(s));
    v1[s] = push("v1" + a, scale(F.make(-1), L.bracket(lab.labels[g[1][s]], g11one)), R.parity(s));
    w1[s] = push("w1" + a, L.bracket(f11one, lab.labels[f[1][s]]), R.parity(s));
  }

  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = 0; t < d; ++t) {
      const Vec a = R.basis(s), b = R.basis(t);
      const Vec val = B.rrr.pi(R.mul(a, R.bar(b)));
      if (is_zero(val)) continue;
      const Scalar partner = -sgn(F, (1 ^ R.parity(s)) & (1 ^ R.parity(t)));
      lab.entries.emplace_back(f[1][s], g[2][t], val);
      lab.entries.emplace_back(g[2][t], f[1][s], scale(partner, val));
      lab.entries.emplace_back(f[2][s], g[1][t], scale(F.make(-1), val));
      lab.entries.emplace_back(g[1][t], f[2][s], scale(-partner, val));
    }

  B.beta = cocycle_from_labels(S.model.algebra(), F, B.rrr.Q.parities(), lab, &B.report);
  B.report.merge(verify_cocycle(B.beta), "cocycle");

  // The eight case families of the cocycle lemma, written with the CC2 signs.
  auto J = [&](std::size_t x, std::size_t y, std::size_t z) {
    const Vec &X = lab.labels[x], &Y = lab.labels[y], &Z = lab.labels[z];
    const int px = lpar[x], py = lpar[y], pz = lpar[z];
    Vec r = scale(sgn(F, px & pz), B.beta.eval(L.bracket(X, Y), Z));
    r = add(r, scale(sgn(F, py & px), B.beta.eval(L.bracket(Y, Z), X)));
    r = add(r, scale(sgn(F, pz & py), B.beta.eval(L.bracket(Z, X), Y)));
    return r;
  };
  auto four = [&](const std::string& name, std::size_t hi, std::size_t fi, std::size_t gi) {
    std::string w;
    for (std::size_t a = 0; a < d && w.empty(); ++a)
      for (std::size_t b = 0; b < d && w.empty(); ++b)
        for (std::size_t c = 0; c < d && w.empty(); ++c)
          for (std::size_t e = 0; e < d; ++e)
            if (!is_zero(J(h[hi][a][b], f[fi][c], g[gi][e]))) {
              w = tuple_str({a, b, c, e});
              break;
            }
    B.report.add(name, w.empty(), w);
  };
  four("lemma_case.i", 1, 1, 2);
  four("lemma_case.ii", 1, 2, 1);
  four("lemma_case.iii", 2, 1, 2);
  four("lemma_case.iv", 2, 2, 1);
  auto three = [&](const std::string& name, auto x, auto y, auto z) {
    std::string w;
    for (std::size_t a = 0; a < d && w.empty(); ++a)
      for (std::size_t b = 0; b < d && w.empty(); ++b)
        for (std::size_t c = 0; c < d; ++c)
          if (!is_zero(J(x[a], y[b], z[c]))) {
            w = tuple_str({a, b, c});
            break;
          }
    B.report.add(name, w.empty(), w);
  };
  three("lemma_case.v", t12, f[1], g[1]);
  three("lemma_case.vi", t12, f[2], g[2]);
  three("lemma_case.vii", v1, f[1], f[2]);
  three("lemma_case.viii", w1, g[2], g[1]);
  return B;
}

Vec HatSto22::gen(GenKind kind, std::size_t i, std::size_t j, const Vec& a) const {
  return ext.lift(beta.sto.lift(kind, i, j, a));
}

Vec HatSto22::pi(const Vec& a) const { return ext.central(beta.rrr.pi(a)); }

HatSto22 hat_sto22(const AlgebraPtr& R) {
  HatSto22 H;
  H.beta = beta_sto22(R);
  H.ext = central_extension(H.beta.beta);
  return H;
}

Report check_hat_sto22(const HatSto22& H) {
  Report rep;
  const auto& R = *H.beta.sto.osp.R;
  const auto& E = *H.ext.total;
  const Field& F = R.field();
  const Scalar m1 = F.make(-1);
  auto t = [&](const Vec& a) { return H.gen(GenKind::t, 1, 2, a); };
  auto f = [&](std::size_t i, const Vec& a) { return H.gen(GenKind::f, i, 1, a); };
  auto g = [&](std::size_t i, const Vec& a) { return H.gen(GenKind::g, 1, i, a); };
  auto eq = [](const Vec& x, const Vec& y) { return x == y; };

  check_pairs(rep, "rel.t12_f11", R, [&](const Vec& a, const Vec& b, int, int) {
    return eq(E.bracket(t(a), f(1, b)), scale(m1, f(2, R.mul(R.bar(a), b))));
  });
  check_pairs(rep, "rel.t12_f21", R, [&](const Vec& a, const Vec& b, int, int) {
    return eq(E.bracket(t(a), f(2, b)), f(1, R.mul(a, b)));
  });
  check_pairs(rep, "rel.g11_t12", R, [&](const Vec& a, const Vec& b, int, int) {
    return eq(E.bracket(g(1, a), t(b)), g(2, R.mul(a, b)));
  });
  check_pairs(rep, "rel.g12_t12", R, [&](const Vec& a, const Vec& b, int, int) {
    return eq(E.bracket(g(2, a), t(b)), scale(m1, g(1, R.mul(a, R.bar(b)))));
  });
  check_pairs(rep, "rel.f11_f21", R,
              [&](const Vec& a, const Vec& b, int, int) { return is_zero(E.bracket(f(1, a), f(2, b))); });
  check_pairs(rep, "rel.g11_g12", R,
              [&](const Vec& a, const Vec& b, int, int) { return is_zero(E.bracket(g(1, a), g(2, b))); });
  check_pairs(rep, "rel.f11_g12", R, [&](const Vec& a, const Vec& b, int, int) {
    return eq(E.bracket(f(1, a), g(2, b)), add(t(R.mul(a, b)), H.pi(R.mul(a, R.bar(b)))));
  });
  check_pairs(rep, "rel.f21_g11", R, [&](const Vec& a, const Vec& b, int, int) {
    Vec rhs = add(t(R.bar(R.mul(a, b))), H.pi(R.mul(a, R.bar(b))));
    return eq(E.bracket(f(2, a), g(1, b)), scale(m1, rhs));
  });
  const std::size_t lhs = E.dim(), rhs = H.beta.sto.model.dim() + H.beta.rrr.Q.dim();
  rep.add("dims", lhs == rhs).dims = {{"hat_sto", static_cast<long long>(lhs)},
                                      {"sto_model", static_cast<long long>(H.beta.sto.model.dim())},
                                      {"rrr", static_cast<long long>(H.beta.rrr.Q.dim())}};
  rep.merge(check_central_extension(H.ext), "extension");
  return rep;
}

// ---------------------------------------------------------------------------
// alpha on osp_{1|2}

const char* jsign_name(JSign s) { return s == JSign::printed ? "printed" : "cyclic"; }
const char* ttsign_name(TTSign s) { return s == TTSign::printed ? "tt_printed" : "tt_negated"; }

namespace {

SuperMatrix t_matrix(const OspAlgebra& A, const Vec& a) {
  const auto& R = *A.R;
  SuperMatrix X(A.shape, A.R);
  X.add_entry(1, 1, R.minus(a));
  X.add_entry(2, 2, R.rho(a));
  X.add_entry(3, 3, scale(R.field().make(-1), R.rho(R.bar(a))));
  return X;
}

}  // namespace

Osp12Slots osp12_slots(const OspAlgebra& A, const Vec& flat) {
  if (A.shape.m != 1 || A.shape.n != 1) throw InvalidShape("slot decomposition is for osp_{1|2}");
  const auto& R = *A.R;
  SuperMatrix X = SuperMatrix::unflatten(A.shape, A.R, flat);
  Osp12Slots s;
  s.f = X.entry(1, 2);
  s.g = X.entry(2, 1);
  s.t = R.rho(X.entry(2, 2));
  s.e23 = X.entry(2, 3);
  s.e32 = X.entry(3, 2);
  s.e11 = sub(X.entry(1, 1), R.minus(s.t));
  SuperMatrix Y = generator(A.shape, A.R, GenKind::f, 1, 1, s.f) + generator(A.shape, A.R, GenKind::g, 1, 1, s.g) +
                  t_matrix(A, s.t) + matrix_unit(A.shape, A.R, 2, 3, s.e23) +
                  matrix_unit(A.shape, A.R, 3, 2, s.e32) + matrix_unit(A.shape, A.R, 1, 1, s.e11);
  if (!(Y == X)) throw NoDecomposition("element not of the form f + g + t + e23 + e32 + e11");
  if (R.bar(s.e23) != s.e23 || R.bar(s.e32) != s.e32) throw NoDecomposition("off-diagonal slot not in R_+");
  return s;
}

Cocycle alpha_osp12(const OspAlgebra& A, const TensorQuotient& Q, JSign sign, TTSign tt, Report* rep) {
  const auto& R = *A.R;
  const Field& F = R.field();
  const std::size_t d = R.dim();
  const Scalar half = F.make(1, 2), m1 = F.make(-1);
  const auto& L = A.osp.algebra();
  const std::size_t dim = L->dim();

  std::vector<Vec> P(d * d), PB(d * d);
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = 0; t < d; ++t) {
      P[s * d + t] = Q.pair(R.basis(s), R.basis(t));
      PB[s * d + t] = Q.pair(R.basis(s), R.bar(R.basis(t)));
    }
  auto pair = [&](const Vec& a, const Vec& b) { return Q.pair(a, b); };
  auto j = [&](const Vec& a, const Vec& b, const Vec& c) {
    const int pa = deg(R, a), pb = deg(R, b), pc = deg(R, c);
    Vec r = scale(sgn(F, pa & pc), pair(R.mul(a, b), c));
    r = add(r, scale(sgn(F, pb & pa), pair(R.mul(b, c), a)));
    const int third = sign == JSign::printed ? (pc & pa) : (pc & pb);
    return add(r, scale(sgn(F, third), pair(R.mul(c, a), b)));
  };

  // W = [R,R] ∩ R_- with a chosen decomposition of each basis vector.
  EchelonBasis W(F, d);
  for (const auto& w : subspace(R, Subspace::commutators_minus)) W.insert(w);
  const std::size_t r = W.size();
  std::vector<int> wpar(r);
  for (std::size_t k = 0; k < r; ++k) {
    auto p = R.degree(W.row(k));
    if (!p) throw NoDecomposition("[R,R] ∩ R_- basis is not homogeneous");
    wpar[k] = *p;
  }
  // T(x)(u) = Σ x_st (-1)^{|b_s||w_u|} j(b_s, b_t, w_u) for x over pairs (s,t).
  auto T = [&](const std::vector<std::pair<std::size_t, std::size_t>>& pairs, const Vec& x, std::size_t u) {
    Vec acc = Q.Q.zero();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (x[i].is_zero()) continue;
      auto [s, t] = pairs[i];
      axpy(acc, x[i] * sgn(F, R.parity(s) & wpar[u]), j(R.basis(s), R.basis(t), W.row(u)));
    }
    return acc;
  };
  std::vector<std::vector<Vec>> E(r, std::vector<Vec>(r));
  std::string w;
  std::size_t alternatives = 0;
  for (std::size_t k = 0; k < r; ++k) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<Vec> cols;
    for (std::size_t s = 0; s < d; ++s)
      for (std::size_t t = 0; t < d; ++t)
        if ((R.parity(s) ^ R.parity(t)) == wpar[k]) {
          pairs.emplace_back(s, t);
          cols.push_back(R.minus(R.bracket_basis(s, t)));
        }
    Matrix M = Matrix::from_columns(F, d, cols);
    auto x = solve(M, W.row(k));
    if (!x) throw NoDecomposition("[R,R] ∩ R_- element without a commutator decomposition");
    for (const auto& kv : kernel_basis(M)) {
      ++alternatives;
      for (std::size_t u = 0; u < r && w.empty(); ++u)
        if (!is_zero(T(pairs, kv, u))) w = "w" + std::to_string(k) + " against w" + std::to_string(u);
    }
    for (std::size_t u = 0; u < r; ++u)
      E[k][u] = sub(scale(half, pair(W.row(k), W.row(u))), T(pairs, *x, u));
  }
  if (rep)
    rep->add("e11_decomposition_independent", w.empty(), w).dims = {
        {"alternatives", static_cast<long long>(alternatives)}};
  if (!w.empty()) throw WellDefinednessFailure("e11 value depends on the decomposition: " + w);

  struct Slots {
    SparseVec f, g, t, e23, e32, e11;
    Vec wc;
  };
  std::vector<Slots> sl(dim);
  for (std::size_t p = 0; p < dim; ++p) {
    auto s = osp12_slots(A, A.osp.basis(p));
    auto wc = W.coordinates(s.e11);
    if (!wc) throw NoDecomposition("e11 slot outside [R,R] ∩ R_-");
    sl[p] = {sparse_of(s.f), sparse_of(s.g), sparse_of(s.t), sparse_of(s.e23), sparse_of(s.e32), sparse_of(s.e11), *wc};
  }

  Cocycle c{L, F, Q.Q.parities(), {}};
  c.values.assign(dim * dim, zeros(F, c.zdim()));
  if (c.zdim() == 0) return c;
  auto par = [&](std::size_t s) { return R.parity(s); };
  const Scalar ttc = tt == TTSign::printed ? F.one() : m1;
  for (std::size_t p = 0; p < dim; ++p)
    for (std::size_t q = 0; q < dim; ++q) {
      const Slots &X = sl[p], &Y = sl[q];
      Vec& v = c.values[p * dim + q];
      for (const auto& [s, x] : X.f)
        for (const auto& [t, y] : Y.g) axpy(v, x * y, P[s * d + t]);
      for (const auto& [s, x] : X.g)  // b = b_s, a = b_t
        for (const auto& [t, y] : Y.f) axpy(v, -sgn(F, (1 ^ par(t)) & (1 ^ par(s))) * x * y, P[t * d + s]);
      for (const auto& [s, x] : X.e23)
        for (const auto& [t, y] : Y.e32) axpy(v, -half * sgn(F, par(s) ^ par(t)) * x * y, P[s * d + t]);
      for (const auto& [s, x] : X.e32)  // b = b_s, a = b_t
        for (const auto& [t, y] : Y.e23)
          axpy(v, half * sgn(F, (par(t) & par(s)) ^ par(s) ^ par(t)) * x * y, P[t * d + s]);
      for (const auto& [s, x] : X.t)
        for (const auto& [t, y] : Y.t) axpy(v, ttc * x * y, PB[s * d + t]);
      for (const auto& [s, x] : X.t)
        for (const auto& [t, y] : Y.e11) axpy(v, x * y, P[s * d + t]);
      for (const auto& [s, x] : X.e11)  // b = b_s, a = b_t
        for (const auto& [t, y] : Y.t) axpy(v, -sgn(F, par(t) & par(s)) * x * y, P[t * d + s]);
      for (std::size_t k = 0; k < r; ++k) {
        if (X.wc[k].is_zero()) continue;
        for (std::size_t u = 0; u < r; ++u)
          if (!Y.wc[u].is_zero()) axpy(v, X.wc[k] * Y.wc[u], E[k][u]);
      }
    }
  return c;
}

// ---------------------------------------------------------------------------
// osp_{1|2} hat model

Vec HatOsp12::f(const Vec& a) const {
  Vec flat = generator(osp.shape, osp.R, GenKind::f, 1, 1, a).flatten();
  return model.coordinates_or_throw(ext.lift(osp.osp.coordinates_or_throw(flat, "f outside osp")), "f lift");
}

Vec HatOsp12::g(const Vec& a) const {
  Vec flat = generator(osp.shape, osp.R, GenKind::g, 1, 1, a).flatten();
  return model.coordinates_or_throw(ext.lift(osp.osp.coordinates_or_throw(flat, "g outside osp")), "g lift");
}

Vec HatOsp12::v(const Vec& a) const {
  return scale(osp.R->field().make(-1), model.lie().bracket(g(a), g(osp.R->unit())));
}

Vec HatOsp12::w(const Vec& a) const { return model.lie().bracket(f(osp.R->unit()), f(a)); }

Vec HatOsp12::h(const Vec& a, const Vec& b) const { return model.lie().bracket(f(a), g(b)); }

Vec HatOsp12::lambda(const Vec& a, const Vec& b) const {
  const auto& R = *osp.R;
  return sub(h(a, b), scale(sgn(R.field(), deg(R, a) & deg(R, b)), h(R.unit(), R.mul(b, a))));
}

Vec HatOsp12::z_part(const Vec& model_vec) const { return tail(model.embed(model_vec), ext.base_dim()); }

HatOsp12 hat_osp12(const AlgebraPtr& R) {
  HatOsp12 H;
  H.osp = build_osp(1, 1, R);
  H.hdt = hd1_tilde(R);
  std::optional<Cocycle> chosen;
  for (TTSign tt : {TTSign::printed, TTSign::negated})
    for (JSign s : {JSign::printed, JSign::cyclic}) {
      const std::string tag = std::string(ttsign_name(tt)) + "." + jsign_name(s);
      Report r;
      try {
        Cocycle c = alpha_osp12(H.osp, H.hdt.quotient, s, tt, &r);
        r.merge(verify_cocycle(c));
        if (r.all_pass() && !chosen) {
          chosen = std::move(c);
          H.sign = s;
          H.tt = tt;
        }
      } catch (const WellDefinednessFailure& e) {
        r.add("well_defined", false, e.what());
      }
      H.alpha_report.merge(r, tag);
    }
  if (!chosen) throw CocycleInvalid("no reading of the osp_{1|2} cocycle passes");
  H.ext = central_extension(*chosen, false);
  auto amb = std::make_shared<LieAmbient>(H.ext.total);
  std::vector<Vec> gens;
  for (std::size_t s = 0; s < R->dim(); ++s)
    for (GenKind k : {GenKind::f, GenKind::g}) {
      Vec flat = generator(H.osp.shape, R, k, 1, 1, R->basis(s)).flatten();
      gens.push_back(H.ext.lift(H.osp.osp.coordinates_or_throw(flat, "generator outside osp")));
    }
  H.model = generated_subalgebra(amb, gens, H.ext.total->dim());
  H.projection = project_model(H.model, H.ext, H.osp.osp.algebra());
  H.kernel = kernel_basis(H.projection.matrix);
  return H;
}

namespace {

// The relations shared by the hat and u models; vg/fw come from the caller.
template <class M>
void osp12_relations(Report& rep, const SuperAlgebra& R, const LieSuperAlgebra& L, const M& X) {
  const Field& F = R.field();
  auto br = [&](const Vec& x, const Vec& y) { return L.bracket(x, y); };
  check_pairs(rep, "rel.v_bar", R, [&](const Vec& a, const Vec&, int, int) { return X.v(R.bar(a)) == X.v(a); });
  check_pairs(rep, "rel.w_bar", R, [&](const Vec& a, const Vec&, int, int) { return X.w(R.bar(a)) == X.w(a); });
  check_pairs(rep, "rel.vv", R, [&](const Vec& a, const Vec& b, int, int) { return is_zero(br(X.v(a), X.v(b))); });
  check_pairs(rep, "rel.ww", R, [&](const Vec& a, const Vec& b, int, int) { return is_zero(br(X.w(a), X.w(b))); });
  check_pairs(rep, "rel.vf", R, [&](const Vec& a, const Vec& b, int, int pb) {
    return br(X.v(a), X.f(b)) == scale(sgn(F, pb), X.g(R.mul(R.plus(a), R.bar(b))));
  });
  check_pairs(rep, "rel.gw", R, [&](const Vec& a, const Vec& b, int pa, int) {
    return br(X.g(a), X.w(b)) == scale(-sgn(F, pa), X.f(R.mul(R.bar(a), R.plus(b))));
  });
  check_pairs(rep, "rel.ff", R, [&](const Vec& a, const Vec& b, int pa, int) {
    return br(X.f(a), X.f(b)) == scale(sgn(F, pa), X.w(R.mul(R.bar(a), b)));
  });
  check_pairs(rep, "rel.gg", R, [&](const Vec& a, const Vec& b, int, int pb) {
    return br(X.g(a), X.g(b)) == scale(-sgn(F, pb), X.v(R.mul(a, R.bar(b))));
  });
  check_triples(rep, "rel.fgf", R, [&](const Vec& a, const Vec& b, const Vec& c, int pa, int pb, int pc) {
    Vec ab = R.mul(a, b), cba = R.mul(R.mul(c, b), a);
    Vec arg = sub(sub(R.mul(ab, c), R.mul(R.bar(ab), c)), scale(sgn(F, (pa & pb) ^ (pb & pc) ^ (pc & pa)), cba));
    return br(br(X.f(a), X.g(b)), X.f(c)) == X.f(arg);
  });
  check_triples(rep, "rel.gfg", R, [&](const Vec& a, const Vec& b, const Vec& c, int pa, int pb, int pc) {
    Vec bc = R.mul(b, c), cba = R.mul(R.mul(c, b), a);
    Vec arg = sub(sub(R.mul(a, bc), R.mul(a, R.bar(bc))), scale(sgn(F, (pa & pb) ^ (pb & pc) ^ (pc & pa)), cba));
    return br(X.g(a), br(X.f(b), X.g(c))) == X.g(arg);
  });
}

}  // namespace

Report check_hat_osp12(const HatOsp12& H) {
  Report rep;
  const auto& R = *H.osp.R;
  const auto& L = H.model.lie();
  osp12_relations(rep, R, L, H);
  check_pairs(rep, "rel.vg", R, [&](const Vec& a, const Vec& b, int, int) { return is_zero(L.bracket(H.v(a), H.g(b))); });
  check_pairs(rep, "rel.fw", R, [&](const Vec& a, const Vec& b, int, int) { return is_zero(L.bracket(H.f(a), H.w(b))); });
  // lambda(a,b) projects to e11([a,b] - bar); the central part is compared with 2<a,b> separately.
  std::size_t doubled = 0, total = 0;
  check_pairs(rep, "lambda_image", R, [&](const Vec& a, const Vec& b, int, int) {
    Vec lhs = H.model.embed(H.lambda(a, b));
    Vec e11 = matrix_unit(H.osp.shape, H.osp.R, 1, 1, R.minus(R.bracket(a, b))).flatten();
    auto oc = H.osp.osp.coordinates(e11);
    if (!oc) return false;
    ++total;
    if (tail(lhs, H.ext.base_dim()) == scale(R.field().make(2), H.hdt.quotient.pair(a, b))) ++doubled;
    return Vec(lhs.begin(), lhs.begin() + static_cast<long>(H.ext.base_dim())) == *oc;
  });
  auto& c = rep.checks.back();
  c.dims = {{"pairs", static_cast<long long>(total)}, {"central_part_equals_2pair", static_cast<long long>(doubled)}};
  check_kernel(rep, H.model, H.projection, H.kernel, H.ext.base_dim(), H.hdt.homology);
  return rep;
}

// ---------------------------------------------------------------------------
// uosp_{1|2}

Vec Uosp12::f(const Vec& a) const { return ext.lift(hat.f(a)); }
Vec Uosp12::g(const Vec& a) const { return ext.lift(hat.g(a)); }
Vec Uosp12::v(const Vec& a) const { return ext.lift(hat.v(a)); }
Vec Uosp12::w(const Vec& a) const { return ext.lift(hat.w(a)); }
Vec Uosp12::pi1(const Vec& a) const { return ext.central(z.pi1(a)); }
Vec Uosp12::pi2(const Vec& a) const { return ext.central(z.pi2(a)); }

Uosp12 uosp12(const AlgebraPtr& Rp) {
  const auto& R = *Rp;
  const Field& F = R.field();
  const std::size_t d = R.dim();
  Uosp12 U;
  U.hat = hat_osp12(Rp);
  U.z = i3_and_z(Rp);
  const auto& H = U.hat;
  auto& lab = U.form;
  auto push = [&](std::string name, Vec v) {
    lab.names.push_back(std::move(name));
    lab.labels.push_back(std::move(v));
    return lab.labels.size() - 1;
  };
  std::vector<std::size_t> f(d), g(d), v(d), w(d);
  for (std::size_t s = 0; s < d; ++s) {
    const std::string a = "(b" + std::to_string(s) + ")";
    f[s] = push("f" + a, H.f(R.basis(s)));
    g[s] = push("g" + a, H.g(R.basis(s)));
    v[s] = push("v" + a, H.v(R.basis(s)));
    w[s] = push("w" + a, H.w(R.basis(s)));
  }
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = 0; t < d; ++t)
      push("h(b" + std::to_string(s) + ",b" + std::to_string(t) + ")", H.h(R.basis(s), R.basis(t)));

  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = 0; t < d; ++t) {
      const Vec a = R.basis(s), b = R.basis(t);
      const int pa = R.parity(s), pb = R.parity(t);
      Vec vg = U.z.pi1(R.mul(R.plus(a), b));
      if (!is_zero(vg)) {
        lab.entries.emplace_back(v[s], g[t], vg);
        lab.entries.emplace_back(g[t], v[s], scale(-sgn(F, pa & (1 ^ pb)), vg));
      }
      Vec fw = U.z.pi2(R.mul(a, R.plus(b)));
      if (!is_zero(fw)) {
        lab.entries.emplace_back(f[s], w[t], fw);
        lab.entries.emplace_back(w[t], f[s], scale(-sgn(F, (1 ^ pa) & pb), fw));
      }
    }
  U.beta = cocycle_from_labels(H.model.algebra(), F, U.z.z_parities(), lab, &U.report);
  U.report.merge(verify_cocycle(U.beta), "cocycle");
  U.ext = central_extension(U.beta, false);
  return U;
}

Report check_uosp12(const Uosp12& U) {
  Report rep;
  const auto& R = *U.hat.osp.R;
  const auto& L = *U.ext.total;
  osp12_relations(rep, R, L, U);
  check_pairs(rep, "rel.vg", R, [&](const Vec& a, const Vec& b, int, int) {
    return L.bracket(U.v(a), U.g(b)) == U.pi1(R.mul(R.plus(a), b));
  });
  check_pairs(rep, "rel.fw", R, [&](const Vec& a, const Vec& b, int, int) {
    return L.bracket(U.f(a), U.w(b)) == U.pi2(R.mul(a, R.plus(b)));
  });
  const std::size_t lhs = L.dim(), rhs = U.hat.model.dim() + U.z.z_dim();
  rep.add("dims", lhs == rhs).dims = {{"uosp", static_cast<long long>(lhs)},
                                      {"hat_osp", static_cast<long long>(U.hat.model.dim())},
                                      {"z", static_cast<long long>(U.z.z_dim())}};
  rep.merge(check_central_extension(U.ext), "extension");
  return rep;
}

}  // namespace ospx
