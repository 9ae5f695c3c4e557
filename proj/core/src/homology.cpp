#include "ospx/homology.hpp"

#include <functional>

namespace ospx {

Quotient::Quotient(Field F, std::vector<int> coord_parity, const std::vector<Vec>& relations)
    : F_(F), par_(std::move(coord_parity)), rel_(F, par_.size()) {
  for (const auto& r : relations) rel_.insert(r);
  free_ = rel_.free_columns();
}

std::vector<int> Quotient::parities() const {
  std::vector<int> p;
  for (auto f : free_) p.push_back(par_[f]);
  return p;
}

Vec Quotient::project(const Vec& v) const {
  Vec r = rel_.reduce(v);
  Vec q;
  q.reserve(free_.size());
  for (auto f : free_) q.push_back(r[f]);
  return q;
}

Vec tensor(const SuperAlgebra& R, const Vec& a, const Vec& b) {
  const std::size_t d = R.dim();
  Vec t = zeros(R.field(), d * d);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (!b[j].is_zero()) t[i * d + j] = a[i] * b[j];
  }
  return t;
}

namespace {

int deg(const SuperAlgebra& R, const Vec& a) { return R.degree(a).value_or(0); }

Scalar sgn(const Field& F, int e) { return (e & 1) ? F.make(-1) : F.one(); }

std::vector<int> pair_parity(const SuperAlgebra& R) {
  const std::size_t d = R.dim();
  std::vector<int> p(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) p[i * d + j] = R.parity(i) ^ R.parity(j);
  return p;
}

std::vector<Vec> antisymmetry(const SuperAlgebra& R) {
  std::vector<Vec> rel;
  const Field& F = R.field();
  for (std::size_t i = 0; i < R.dim(); ++i)
    for (std::size_t j = i; j < R.dim(); ++j) {
      Vec a = R.basis(i), b = R.basis(j);
      rel.push_back(add(tensor(R, a, b), scale(sgn(F, R.parity(i) & R.parity(j)), tensor(R, b, a))));
    }
  return rel;
}

std::vector<Vec> bar_relations(const SuperAlgebra& R) {
  std::vector<Vec> rel;
  for (std::size_t i = 0; i < R.dim(); ++i)
    for (std::size_t j = 0; j < R.dim(); ++j) {
      Vec a = R.basis(i), b = R.basis(j);
      rel.push_back(sub(tensor(R, a, b), tensor(R, R.bar(a), R.bar(b))));
    }
  return rel;
}

std::vector<Vec> j_relations(const SuperAlgebra& R) {
  std::vector<Vec> rel;
  for (std::size_t i = 0; i < R.dim(); ++i)
    for (std::size_t j = 0; j < R.dim(); ++j)
      for (std::size_t k = 0; k < R.dim(); ++k) rel.push_back(cyclic_j(R, R.basis(i), R.basis(j), R.basis(k)));
  return rel;
}

// Kernel of the map on the quotient induced by phi on pure tensors of basis elements;
// throws if phi does not vanish on the relations.
TensorHomology finish(const std::string& name, const AlgebraPtr& Rp, const std::vector<Vec>& rel,
                      const std::function<Vec(std::size_t, std::size_t)>& phi) {
  const SuperAlgebra& R = *Rp;
  const Field& F = R.field();
  const std::size_t d = R.dim();
  TensorHomology H{{Rp, Quotient(F, pair_parity(R), rel)}, {name, 0, {}}};
  auto apply = [&](const Vec& t) {
    Vec r = R.zero();
    for (std::size_t p = 0; p < d * d; ++p)
      if (!t[p].is_zero()) axpy(r, t[p], phi(p / d, p % d));
    return r;
  };
  const auto& E = H.quotient.Q.relations();
  for (std::size_t r = 0; r < E.size(); ++r)
    if (!is_zero(apply(E.row(r))))
      throw WellDefinednessFailure(name + ": induced map does not vanish on relation " + vec_str(E.row(r)));
  std::vector<Vec> cols;
  for (auto f : H.quotient.Q.basis_coords()) cols.push_back(phi(f / d, f % d));
  if (cols.empty()) return H;
  H.homology.basis = kernel_basis(Matrix::from_columns(F, d, cols));
  H.homology.dim = H.homology.basis.size();
  return H;
}

}  // namespace

Vec cyclic_j(const SuperAlgebra& R, const Vec& a, const Vec& b, const Vec& c) {
  const Field& F = R.field();
  int pa = deg(R, a), pb = deg(R, b), pc = deg(R, c);
  Vec t = scale(sgn(F, pa & pc), tensor(R, R.mul(a, b), c));
  axpy(t, sgn(F, pb & pa), tensor(R, R.mul(b, c), a));
  axpy(t, sgn(F, pc & pb), tensor(R, R.mul(c, a), b));
  return t;
}

TensorHomology hd1_minus(const AlgebraPtr& R) {
  auto rel = antisymmetry(*R);
  for (auto& v : bar_relations(*R)) rel.push_back(std::move(v));
  for (auto& v : j_relations(*R)) rel.push_back(std::move(v));
  return finish("HD1-", R, rel, [&](std::size_t i, std::size_t j) { return R->minus(R->bracket_basis(i, j)); });
}

TensorHomology hd1_tilde(const AlgebraPtr& Rp) {
  const SuperAlgebra& R = *Rp;
  const Field& F = R.field();
  const std::size_t d = R.dim();
  std::vector<Vec> rel;
  for (std::size_t i = 0; i < d; ++i) rel.push_back(tensor(R, R.basis(i), R.unit()));
  for (auto& v : antisymmetry(R)) rel.push_back(std::move(v));
  for (auto& v : bar_relations(R)) rel.push_back(std::move(v));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Vec a = R.basis(i), b = R.basis(j), c = R.basis(k);
        int e = (R.parity(i) & R.parity(j)) ^ (R.parity(j) & R.parity(k)) ^ (R.parity(k) & R.parity(i));
        Vec v = cyclic_j(R, b, a, c);
        Vec cm = R.minus(c);
        if (!is_zero(cm)) axpy(v, -sgn(F, e), cyclic_j(R, a, b, cm));
        rel.push_back(std::move(v));
      }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec ab = R.bracket_basis(i, j);
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
          Vec cd = R.bracket_basis(k, l);
          if (is_zero(ab) && is_zero(cd)) continue;
          Vec a = R.basis(i), b = R.basis(j), c = R.basis(k), dd = R.basis(l);
          Vec v = is_zero(cd) ? zeros(F, d * d) : cyclic_j(R, a, b, cd);
          if (!is_zero(ab))
            axpy(v, sgn(F, (R.parity(i) & R.parity(k)) ^ (R.parity(j) & R.parity(l))), cyclic_j(R, c, dd, ab));
          rel.push_back(std::move(v));
        }
    }
  auto comm = subspace(R, Subspace::commutators);
  for (const auto& x : comm)
    for (const auto& y : comm)
      for (const auto& z : comm) rel.push_back(cyclic_j(R, x, y, z));
  return finish("HD1-tilde", Rp, rel, [&](std::size_t i, std::size_t j) { return R.minus(R.bracket_basis(i, j)); });
}

TensorHomology hc1(const AlgebraPtr& S) {
  auto rel = antisymmetry(*S);
  for (auto& v : j_relations(*S)) rel.push_back(std::move(v));
  return finish("HC1", S, rel, [&](std::size_t i, std::size_t j) { return S->bracket_basis(i, j); });
}

AlgebraQuotient quotient_rrr(const AlgebraPtr& R) {
  return {R, Quotient(R->field(), R->parities(), subspace(*R, Subspace::commutators_times_R))};
}

Vec I3Data::pi1(const Vec& a) const {
  Vec q = quotient.pi(a);
  q.resize(z_dim(), quotient.Q.field().zero());
  return q;
}

Vec I3Data::pi2(const Vec& a) const {
  Vec q = quotient.Q.zero();
  Vec p = quotient.pi(a);
  q.insert(q.end(), p.begin(), p.end());
  return q;
}

std::vector<int> I3Data::z_parities() const {
  auto p = quotient.Q.parities();
  for (auto& x : p) x ^= 1;
  auto q = p;
  p.insert(p.end(), q.begin(), q.end());
  return p;
}

namespace {

Vec six_term(const SuperAlgebra& R, const Vec& a, const Vec& b, const Vec& c) {
  const Field& F = R.field();
  int pa = deg(R, a), pb = deg(R, b), pc = deg(R, c);
  Vec ab = R.bar(a), bb = R.bar(b), cb = R.bar(c);
  auto m3 = [&](const Vec& x, const Vec& y, const Vec& z) { return R.mul(R.mul(x, y), z); };
  Vec v = scale(sgn(F, pa & pc), add(m3(a, bb, c), m3(ab, b, cb)));
  axpy(v, sgn(F, pb & pa), add(m3(b, cb, a), m3(bb, c, ab)));
  axpy(v, sgn(F, pc & pb), add(m3(c, ab, b), m3(cb, a, bb)));
  return v;
}

Vec plus_family(const SuperAlgebra& R, const Vec& a, const Vec& b, const Vec& c) {
  Vec ap = R.plus(a), bp = R.plus(b);
  Vec v = R.mul(R.mul(ap, bp), c);
  axpy(v, sgn(R.field(), deg(R, a) & deg(R, b)) * R.field().make(-1), R.mul(R.mul(bp, ap), c));
  return v;
}

}  // namespace

I3Data i3_and_z(const AlgebraPtr& Rp) {
  const SuperAlgebra& R = *Rp;
  const Field& F = R.field();
  const std::size_t d = R.dim();
  std::vector<Vec> rel;
  for (std::size_t i = 0; i < d; ++i) {
    rel.push_back(scale(F.make(3), R.basis(i)));
    rel.push_back(R.minus(R.basis(i)));
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec cm = R.minus(R.bracket_basis(i, j));
      for (std::size_t k = 0; k < d; ++k) {
        Vec a = R.basis(i), b = R.basis(j), c = R.basis(k);
        if (!is_zero(cm)) rel.push_back(R.mul(cm, c));
        rel.push_back(plus_family(R, a, b, c));
        rel.push_back(six_term(R, a, b, c));
      }
    }
  return I3Data{{Rp, Quotient(F, R.parities(), rel)}};
}

Report check_pi_identities(const I3Data& z) {
  const SuperAlgebra& R = *z.quotient.R;
  const Field& F = R.field();
  const std::size_t d = R.dim();
  Report rep;
  std::string w[5];
  for (int which = 0; which < 2; ++which) {
    auto pi = [&](const Vec& a) { return which == 0 ? z.pi1(a) : z.pi2(a); };
    for (std::size_t i = 0; i < d; ++i) {
      Vec a = R.basis(i);
      if (!is_zero(scale(F.make(3), pi(a))) && w[0].empty()) w[0] = "a=" + R.basis_name(i);
      if (pi(a) != pi(R.bar(a)) && w[1].empty()) w[1] = "a=" + R.basis_name(i);
      for (std::size_t j = 0; j < d; ++j) {
        Vec b = R.basis(j);
        Vec ab = R.bracket_basis(i, j);
        for (std::size_t k = 0; k < d; ++k) {
          Vec c = R.basis(k);
          std::string t = "(" + R.basis_name(i) + "," + R.basis_name(j) + "," + R.basis_name(k) + ")";
          if (pi(R.mul(ab, c)) != pi(R.mul(R.bar(ab), c)) && w[2].empty()) w[2] = t;
          Vec lhs = pi(R.mul(R.mul(R.plus(a), R.plus(b)), c));
          Vec rhs = scale(sgn(F, R.parity(i) & R.parity(j)), pi(R.mul(R.mul(R.plus(b), R.plus(a)), c)));
          if (lhs != rhs && w[3].empty()) w[3] = t;
          if (!is_zero(pi(six_term(R, a, b, c))) && w[4].empty()) w[4] = t;
        }
      }
    }
  }
  rep.add("pi.three_torsion", w[0].empty(), w[0]);
  rep.add("pi.bar_invariant", w[1].empty(), w[1]);
  rep.add("pi.commutator_bar", w[2].empty(), w[2]);
  rep.add("pi.plus_swap", w[3].empty(), w[3]);
  rep.add("pi.six_term", w[4].empty(), w[4]);
  return rep;
}

HomologyModule as_module(const std::string& name, const Quotient& Q) {
  HomologyModule H{name, Q.dim(), {}};
  for (std::size_t i = 0; i < Q.dim(); ++i) H.basis.push_back(unit_vector(Q.field(), Q.dim(), i));
  return H;
}

}  // namespace ospx
