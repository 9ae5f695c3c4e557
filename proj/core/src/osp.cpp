#include "ospx/osp.hpp"

#include <functional>

#include "ospx/blocks.hpp"

namespace ospx {

OspAlgebra build_osp(std::size_t m, std::size_t n, AlgebraPtr R) {
  MatrixShape s{m, n};
  check_shape(s);
  if (!R) throw InvalidInput("missing coordinate algebra");
  auto amb = std::make_shared<MatrixAmbient>(s, R);
  const Field& F = R->field();
  const std::size_t D = amb->dim();
  EchelonBasis ech[2] = {EchelonBasis(F, D), EchelonBasis(F, D)};
  for (int p = 0; p < 2; ++p) {
    std::vector<std::size_t> coords;
    for (std::size_t f = 0; f < D; ++f)
      if (amb->parity(f) == p) coords.push_back(f);
    if (coords.empty()) continue;
    std::vector<Vec> cols;
    for (auto f : coords) {
      SuperMatrix X = SuperMatrix::unflatten(s, R, unit_vector(F, D, f));
      Vec img = add(osp_involution(X).flatten(), X.flatten());
      Vec r;
      r.reserve(coords.size());
      for (auto g : coords) r.push_back(img[g]);
      cols.push_back(std::move(r));
    }
    for (const auto& k : kernel_basis(Matrix::from_columns(F, coords.size(), cols))) {
      Vec v = zeros(F, D);
      for (std::size_t t = 0; t < coords.size(); ++t) v[coords[t]] = k[t];
      ech[p].insert(v);
    }
  }
  OspAlgebra A{s, R, amb, EmbeddedLie(amb, ech[0], ech[1]), {}};
  std::vector<Vec> brackets;
  const auto& T = A.tilde.lie();
  for (const auto& t : T.table())
    if (!t.empty()) brackets.push_back(A.tilde.embed(to_dense(F, T.dim(), t)));
  A.osp = span_subalgebra(amb, brackets);
  return A;
}

const char* kind_name(GenKind k) {
  switch (k) {
    case GenKind::t: return "t";
    case GenKind::u: return "u";
    case GenKind::v: return "v";
    case GenKind::w: return "w";
    case GenKind::f: return "f";
    case GenKind::g: return "g";
  }
  return "?";
}

SuperMatrix generator(const MatrixShape& s, const AlgebraPtr& R, GenKind kind, std::size_t i, std::size_t j,
                      const Vec& a) {
  const std::size_t m = s.m, n = s.n;
  auto need = [&](bool ok) {
    if (!ok)
      throw InvalidInput(std::string("generator ") + kind_name(kind) + " index out of range (" +
                         std::to_string(i) + "," + std::to_string(j) + ")");
  };
  auto E = [&](std::size_t p, std::size_t q, const Vec& x) { return matrix_unit(s, R, p, q, x); };
  Vec ab = R->bar(a);
  switch (kind) {
    case GenKind::t:
      need(i >= 1 && i <= m && j >= 1 && j <= m);
      return E(i, j, a) - E(j, i, ab);
    case GenKind::u:
      need(i >= 1 && i <= n && j >= 1 && j <= n);
      return E(m + i, m + j, a) - E(m + n + j, m + n + i, ab);
    case GenKind::v:
      need(i >= 1 && i <= n && j >= 1 && j <= n);
      return E(m + i, m + n + j, a) + E(m + j, m + n + i, ab);
    case GenKind::w:
      need(i >= 1 && i <= n && j >= 1 && j <= n);
      return E(m + n + i, m + j, a) + E(m + n + j, m + i, ab);
    case GenKind::f:
      need(i >= 1 && i <= m && j >= 1 && j <= n);
      return E(i, m + j, a) + E(m + n + j, i, R->rho(ab));
    case GenKind::g:
      need(i >= 1 && i <= n && j >= 1 && j <= m);
      return E(m + i, j, a) - E(j, m + n + i, R->rho(ab));
  }
  throw InvalidInput("unknown generator kind");
}

Vec epsilon(const OspAlgebra& A, const SuperMatrix& X) {
  if (!(X.shape() == A.shape) || X.algebra()->name() != A.R->name())
    throw InvalidInput("epsilon: matrix does not match the algebra");
  if (!(osp_involution(X) == X.scaled(A.R->field().make(-1))))
    throw InvalidInput("epsilon: matrix is not in osp-tilde");
  const auto& R = *A.R;
  Vec e = R.zero();
  for (std::size_t i = 1; i <= A.shape.m; ++i) e = add(e, X.entry(i, i));
  for (std::size_t k = 1; k <= A.shape.n; ++k) {
    Vec d = R.rho(X.entry(A.shape.m + k, A.shape.m + k));
    e = sub(e, sub(d, R.bar(d)));
  }
  return e;
}

std::vector<Vec> presentation_generators(const OspAlgebra& A) {
  const std::size_t m = A.shape.m, n = A.shape.n;
  std::vector<Vec> gens;
  for (std::size_t s = 0; s < A.R->dim(); ++s) {
    Vec a = A.R->basis(s);
    auto push = [&](GenKind k, std::size_t i, std::size_t j) {
      gens.push_back(generator(A.shape, A.R, k, i, j, a).flatten());
    };
    for (std::size_t i = 1; i <= m; ++i)
      for (std::size_t j = 1; j <= m; ++j)
        if (i != j) push(GenKind::t, i, j);
    for (std::size_t k = 1; k <= n; ++k)
      for (std::size_t l = 1; l <= n; ++l)
        if (k != l) {
          push(GenKind::u, k, l);
          push(GenKind::v, k, l);
          push(GenKind::w, k, l);
        }
    for (std::size_t i = 1; i <= m; ++i)
      for (std::size_t k = 1; k <= n; ++k) {
        push(GenKind::f, i, k);
        push(GenKind::g, k, i);
      }
  }
  return gens;
}

Report check_section2(const OspAlgebra& A) {
  Report rep;
  const auto& R = *A.R;
  const Field& F = R.field();
  if (A.shape.m < 1 || A.shape.n < 1) throw InvalidShape("section-2 checks need m, n >= 1");

  auto minus = subspace(R, Subspace::minus);
  auto comm_minus = subspace(R, Subspace::commutators_minus);
  long long gap = static_cast<long long>(A.tilde.dim()) - static_cast<long long>(A.osp.dim());
  long long quot = static_cast<long long>(minus.size()) - static_cast<long long>(comm_minus.size());
  auto& c = rep.add("exact_sequence.dims", gap == quot,
                    gap == quot ? "" : "dim gap " + std::to_string(gap) + " vs " + std::to_string(quot));
  c.dims = {{"osp_tilde", A.tilde.dim()}, {"osp", A.osp.dim()}, {"R_minus", minus.size()},
            {"comm_cap_minus", comm_minus.size()}};

  EchelonBasis CM(F, R.dim());
  for (const auto& v : comm_minus) CM.insert(v);
  std::string w;
  for (std::size_t i = 0; i < A.osp.dim() && w.empty(); ++i) {
    Vec e = epsilon(A, SuperMatrix::unflatten(A.shape, A.R, A.osp.basis(i)));
    if (!CM.contains(e)) w = "osp basis " + std::to_string(i) + " has epsilon " + R.element_str(e);
  }
  rep.add("exact_sequence.epsilon_on_osp", w.empty(), w);

  EchelonBasis img = CM;
  EchelonBasis Mi(F, R.dim());
  for (const auto& v : minus) Mi.insert(v);
  w.clear();
  for (std::size_t i = 0; i < A.tilde.dim(); ++i) {
    Vec e = epsilon(A, SuperMatrix::unflatten(A.shape, A.R, A.tilde.basis(i)));
    if (!Mi.contains(e) && w.empty()) w = "epsilon of osp~ basis " + std::to_string(i) + " not in R_-";
    img.insert(e);
  }
  if (w.empty() && img.size() != minus.size()) w = "epsilon not onto R_-/([R,R] ∩ R_-)";
  rep.add("exact_sequence.epsilon_onto", w.empty(), w);

  w.clear();
  auto gens = presentation_generators(A);
  for (std::size_t i = 0; i < gens.size() && w.empty(); ++i) {
    SuperMatrix G = SuperMatrix::unflatten(A.shape, A.R, gens[i]);
    if (!(osp_involution(G) == G.scaled(F.make(-1)))) w = "generator " + std::to_string(i) + " not skew";
  }
  rep.add("generators.skew", w.empty(), w);

  w.clear();
  std::size_t gdim = 0;
  try {
    EmbeddedLie G = generated_subalgebra(A.ambient, gens, A.tilde.dim());
    gdim = G.dim();
    for (std::size_t i = 0; i < G.dim() && w.empty(); ++i)
      if (!A.osp.contains(G.basis(i))) w = "generated element " + std::to_string(i) + " outside osp";
    if (w.empty() && gdim != A.osp.dim())
      w = "generated dim " + std::to_string(gdim) + " != osp dim " + std::to_string(A.osp.dim());
  } catch (const ClosureOverflow& e) {
    w = e.what();
  }
  rep.add("generation", w.empty(), w).dims = {{"generated", gdim}};

  rep.add("perfect", is_perfect(A.osp.lie()), is_perfect(A.osp.lie()) ? "" : "[osp,osp] is proper");
  return rep;
}

LiePtr tensor_with(const LieSuperAlgebra& L, const SuperAlgebra& R) {
  const std::size_t dl = L.dim(), dr = R.dim(), D = dl * dr;
  const Field& F = L.field();
  std::vector<int> par(D);
  std::vector<std::string> names(D);
  for (std::size_t p = 0; p < dl; ++p)
    for (std::size_t s = 0; s < dr; ++s) {
      par[p * dr + s] = L.parity(p) ^ R.parity(s);
      names[p * dr + s] = L.name(p) + "*" + R.basis_name(s);
    }
  std::vector<SparseVec> table(D * D);
  for (std::size_t p = 0; p < dl; ++p)
    for (std::size_t s = 0; s < dr; ++s)
      for (std::size_t q = 0; q < dl; ++q)
        for (std::size_t t = 0; t < dr; ++t) {
          const auto& lb = L.bracket_basis(p, q);
          const auto& rb = R.product(s, t);
          if (lb.empty() || rb.empty()) continue;
          Scalar sign = (R.parity(s) & L.parity(q)) ? F.make(-1) : F.one();
          Vec v = zeros(F, D);
          for (const auto& [r, c] : lb)
            for (const auto& [u, e] : rb) v[r * dr + u] += sign * c * e;
          table[(p * dr + s) * D + q * dr + t] = to_sparse(v);
        }
  return std::make_shared<LieSuperAlgebra>(F, par, std::move(table), std::move(names));
}

namespace {

Report map_checks(const LinearMap& phi) {
  Report rep = check_homomorphism(phi);
  std::size_t r = rank(phi.matrix);
  bool bij = r == phi.source->dim() && r == phi.target->dim();
  auto& c = rep.add("bijective", bij, bij ? "" : "rank " + std::to_string(r));
  c.dims = {{"source", phi.source->dim()}, {"target", phi.target->dim()}, {"rank", r}};
  return rep;
}

}  // namespace

Report example_supercommutative(std::size_t m, std::size_t n, const AlgebraPtr& R) {
  const Field& F = R->field();
  for (std::size_t i = 0; i < R->dim(); ++i) {
    if (R->bar(R->basis(i)) != R->basis(i)) throw InvalidInput("involution is not the identity");
    for (std::size_t j = 0; j < R->dim(); ++j)
      if (!is_zero(R->bracket_basis(i, j))) throw InvalidInput("algebra is not supercommutative");
  }
  AlgebraPtr k = plain_algebra("ground", F);
  OspAlgebra O0 = build_osp(m, n, k);
  OspAlgebra O1 = build_osp(m, n, R);
  MatrixShape s{m, n};

  // Families spanning osp(k) and their images at a in R.
  struct Fam {
    Vec mat;
    std::function<SuperMatrix(const Vec&)> image;
  };
  std::vector<Fam> fams;
  Vec one = k->unit();
  auto Ek = [&](std::size_t p, std::size_t q) { return matrix_unit(s, k, p, q, one); };
  auto Er = [&](std::size_t p, std::size_t q, const Vec& a) { return matrix_unit(s, R, p, q, a); };
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j)
      fams.push_back({(Ek(i, j) - Ek(j, i)).flatten(), [=](const Vec& a) { return Er(i, j, a) - Er(j, i, a); }});
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = 1; b <= n; ++b) {
      fams.push_back({(Ek(m + a, m + b) - Ek(m + n + b, m + n + a)).flatten(), [=](const Vec& x) {
                        Vec r = R->rho(x);
                        return Er(m + a, m + b, r) - Er(m + n + b, m + n + a, r);
                      }});
      if (a > b) continue;
      fams.push_back({(Ek(m + a, m + n + b) + Ek(m + b, m + n + a)).flatten(), [=](const Vec& x) {
                        Vec r = R->rho(x);
                        return Er(m + a, m + n + b, r) + Er(m + b, m + n + a, r);
                      }});
      fams.push_back({(Ek(m + n + a, m + b) + Ek(m + n + b, m + a)).flatten(), [=](const Vec& x) {
                        Vec r = R->rho(x);
                        return Er(m + n + a, m + b, r) + Er(m + n + b, m + a, r);
                      }});
    }
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t a = 1; a <= n; ++a) {
      fams.push_back({(Ek(i, m + a) + Ek(m + n + a, i)).flatten(),
                      [=](const Vec& x) { return Er(i, m + a, R->rho(x)) + Er(m + n + a, i, x); }});
      fams.push_back({(Ek(m + a, i) - Ek(i, m + n + a)).flatten(),
                      [=](const Vec& x) { return Er(m + a, i, x) - Er(i, m + n + a, R->rho(x)); }});
    }

  Report rep;
  std::vector<Vec> cols;
  for (const auto& f : fams) cols.push_back(O0.osp.coordinates_or_throw(f.mat, "family element"));
  Matrix C = Matrix::from_columns(F, O0.osp.dim(), cols);
  bool basis_ok = fams.size() == O0.osp.dim() && rank(C) == fams.size();
  rep.add("families_form_basis", basis_ok, basis_ok ? "" : "families do not form a basis of osp(k)");
  if (!basis_ok) return rep;

  LiePtr T = tensor_with(O0.osp.lie(), *R);
  const std::size_t dr = R->dim();
  Matrix M(F, O1.osp.dim(), T->dim());
  for (std::size_t p = 0; p < O0.osp.dim(); ++p) {
    Vec z = *solve(C, unit_vector(F, O0.osp.dim(), p));
    for (std::size_t t = 0; t < dr; ++t) {
      Vec img = zeros(F, O1.ambient->dim());
      for (std::size_t q = 0; q < fams.size(); ++q)
        if (!z[q].is_zero()) axpy(img, z[q], fams[q].image(R->basis(t)).flatten());
      Vec c = O1.osp.coordinates_or_throw(img, "image of a tensor basis element");
      for (std::size_t r = 0; r < c.size(); ++r) M.at(r, p * dr + t) = c[r];
    }
  }
  rep.merge(map_checks({T, O1.osp.algebra(), M}));
  return rep;
}

Report example_s_plus_sop(std::size_t m, std::size_t n, const AlgebraPtr& S) {
  const Field& F = S->field();
  AlgebraPtr SS = sum_with_opposite(*S);
  OspAlgebra O = build_osp(m, n, SS);
  MatrixShape s{m, n};
  const std::size_t N = s.size(), d = S->dim();
  auto gl_amb = std::make_shared<MatrixAmbient>(s, S);
  std::vector<Vec> units;
  for (std::size_t f = 0; f < gl_amb->dim(); ++f) units.push_back(unit_vector(F, gl_amb->dim(), f));
  EmbeddedLie gl = span_subalgebra(gl_amb, units);

  auto left = [&](const Vec& a) {
    Vec r = SS->zero();
    for (std::size_t i = 0; i < d; ++i) r[i] = a[i];
    return r;
  };
  auto right = [&](const Vec& a) {
    Vec r = SS->zero();
    for (std::size_t i = 0; i < d; ++i) r[d + i] = a[i];
    return r;
  };
  auto E = [&](std::size_t p, std::size_t q, const Vec& x) { return matrix_unit(s, SS, p, q, x); };
  // sign32 is the sign of the second term for the (3,2) block
  auto image = [&](std::size_t p, std::size_t q, const Vec& a, int sign32 = 1) -> SuperMatrix {
    int P = osp_block(m, n, p - 1), Q = osp_block(m, n, q - 1);
    Vec ra = S->rho(a);
    auto idx = [&](int b, std::size_t x) { return b == 1 ? x : (b == 2 ? x - m : x - m - n); };
    std::size_t x = idx(P, p), y = idx(Q, q);
    SuperMatrix head = E(p, q, left(a));
    switch (P * 10 + Q) {
      case 11: return head - E(q, p, right(a));
      case 12: return head + E(m + n + y, p, right(ra));
      case 13: return head - E(m + y, p, right(ra));
      case 21: return head - E(q, m + n + x, right(ra));
      case 22: return head - E(m + n + y, m + n + x, right(a));
      case 23: return head + E(m + y, m + n + x, right(a));
      case 31: return head + E(q, m + x, right(ra));
      case 32: return head + E(m + n + y, m + x, right(a)).scaled(F.make(sign32));
      case 33: return head - E(m + y, m + x, right(a));
    }
    throw InvalidInput("bad block");
  };

  Matrix M(F, O.tilde.dim(), gl.dim());
  std::vector<Vec> img_flat(gl.dim());
  for (std::size_t b = 0; b < gl.dim(); ++b) {
    const Vec& v = gl.basis(b);
    std::size_t f = 0;
    while (v[f].is_zero()) ++f;
    std::size_t k = f % d, ij = f / d;
    img_flat[b] = image(ij / N + 1, ij % N + 1, S->basis(k)).flatten();
    Vec c = O.tilde.coordinates_or_throw(img_flat[b], "image of a gl basis element");
    for (std::size_t r = 0; r < c.size(); ++r) M.at(r, b) = c[r];
  }
  Report rep = map_checks({gl.algebra(), O.tilde.algebra(), M});
  {
    bool printed_leaves = !O.tilde.contains(image(m + n + 1, m + 1, S->unit(), -1).flatten());
    auto& c = rep.add("block32_sign", printed_leaves, printed_leaves ? "" : "printed sign also lands in osp~");
    c.note = "e_{m+n+k,m+l}(a) maps with +e_{m+n+l,m+k}(0+a); the '-' reading leaves osp~ at k=l";
  }

  std::vector<Vec> br;
  for (const auto& t : gl.lie().table())
    if (!t.empty()) br.push_back(gl.embed(to_dense(F, gl.dim(), t)));
  EmbeddedLie sl = span_subalgebra(gl_amb, br);
  std::string w;
  for (std::size_t i = 0; i < sl.dim() && w.empty(); ++i) {
    Vec c = gl.coordinates_or_throw(sl.basis(i), "sl element");
    Vec img = zeros(F, O.ambient->dim());
    for (std::size_t b = 0; b < gl.dim(); ++b)
      if (!c[b].is_zero()) axpy(img, c[b], img_flat[b]);
    if (!O.osp.contains(img)) w = "image of sl basis " + std::to_string(i) + " outside osp";
  }
  if (w.empty() && sl.dim() != O.osp.dim())
    w = "dim sl " + std::to_string(sl.dim()) + " != dim osp " + std::to_string(O.osp.dim());
  rep.add("sl_onto_osp", w.empty(), w).dims = {{"sl", sl.dim()}, {"osp", O.osp.dim()}};
  return rep;
}

namespace {

Report dims_equal(const std::string& name, std::size_t lhs, std::size_t rhs) {
  Report rep;
  auto& c = rep.add(name, lhs == rhs, lhs == rhs ? "" : std::to_string(lhs) + " != " + std::to_string(rhs));
  c.dims = {{"lhs", lhs}, {"rhs", rhs}};
  return rep;
}

}  // namespace

Report example_periplectic_dims(std::size_t m, std::size_t n, std::size_t l, const Field& F) {
  AlgebraPtr R = preset_algebra("matrix_prp:" + F.name() + ":" + std::to_string(l));
  std::size_t lhs = build_osp(m, n, R).osp.dim();
  // p~_N is the skew part of M_{N|N} under prp, i.e. osp~ of a 1x1 matrix.
  AlgebraPtr big = preset_algebra("matrix_prp:" + F.name() + ":" + std::to_string((m + 2 * n) * l));
  std::size_t rhs = build_osp(1, 0, big).osp.dim();
  return dims_equal("periplectic_dims", lhs, rhs);
}

Report example_orthosymplectic_dims(std::size_t m, std::size_t n, std::size_t k, std::size_t l, const Field& F) {
  AlgebraPtr R = preset_algebra("matrix_osp:" + F.name() + ":" + std::to_string(k) + "," + std::to_string(2 * l));
  std::size_t lhs = build_osp(m, n, R).osp.dim();
  std::size_t M = m * k + 4 * n * l, Nn = n * k + m * l;
  std::size_t rhs = build_osp(M, Nn, plain_algebra("ground", F)).osp.dim();
  Report rep = dims_equal("orthosymplectic_dims", lhs, rhs);
  rep.merge(dims_equal("orthosymplectic_classical_count", rhs, classical_osp_dim(M, Nn)));
  return rep;
}

std::vector<Vec> osp_torus(const OspAlgebra& A) {
  const auto& R = *A.R;
  const std::size_t m = A.shape.m, n = A.shape.n;
  std::vector<SuperMatrix> cand;
  for (std::size_t k = 1; k <= n; ++k) cand.push_back(generator(A.shape, A.R, GenKind::u, k, k, R.unit()));
  std::vector<Vec> even_center;
  for (const auto& c : subspace(R, Subspace::super_center))
    if (R.degree(c) == std::optional<int>(0)) even_center.push_back(c);
  for (const auto& c : even_center) {
    Vec cm = R.minus(c);
    Vec corr = sub(R.rho(c), R.rho(R.bar(c)));
    for (std::size_t k = 1; k <= n; ++k)
      cand.push_back(generator(A.shape, A.R, GenKind::u, k, k, c) + matrix_unit(A.shape, A.R, 1, 1, corr));
    if (is_zero(cm)) continue;
    for (std::size_t i = 1; i <= m; ++i) {
      SuperMatrix X = matrix_unit(A.shape, A.R, i, i, cm);
      cand.push_back(i == 1 ? X : X - matrix_unit(A.shape, A.R, 1, 1, cm));
    }
  }
  std::vector<Vec> out;
  for (const auto& X : cand)
    if (auto c = A.osp.coordinates(X.flatten())) out.push_back(*c);
  return out;
}

std::size_t classical_osp_dim(std::size_t m, std::size_t n) { return m * (m - 1) / 2 + n * (2 * n + 1) + 2 * m * n; }

}  // namespace ospx
