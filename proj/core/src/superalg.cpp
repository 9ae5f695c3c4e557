#include "ospx/superalg.hpp"

#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "json.hpp"
#include "ospx/blocks.hpp"

namespace ospx {

namespace {

std::vector<SparseVec> table_from_dense(std::size_t d, const std::vector<Vec>& dense) {
  std::vector<SparseVec> t;
  t.reserve(d * d);
  for (const auto& v : dense) t.push_back(to_sparse(v));
  return t;
}

std::vector<std::string> default_names(std::size_t d) {
  std::vector<std::string> n;
  for (std::size_t i = 0; i < d; ++i) n.push_back("b" + std::to_string(i));
  return n;
}

}  // namespace

SuperAlgebra::SuperAlgebra(std::string name, Field F, std::vector<int> parity,
                           std::vector<SparseVec> products, Vec unit, Matrix involution,
                           std::vector<std::string> basis_names)
    : name_(std::move(name)),
      F_(F),
      parity_(std::move(parity)),
      mul_(std::move(products)),
      unit_(std::move(unit)),
      invol_(std::move(involution)),
      names_(std::move(basis_names)) {
  const std::size_t d = parity_.size();
  if (d == 0) throw InvalidInput("superalgebra must have positive dimension");
  for (int p : parity_)
    if (p != 0 && p != 1) throw InvalidInput("parity entries must be 0 or 1");
  if (mul_.size() != d * d) throw InvalidInput("product table must have dim^2 entries");
  for (const auto& e : mul_)
    for (const auto& [k, c] : e) {
      if (k >= d) throw InvalidInput("product index out of range");
      if (!F_.contains(c)) throw InvalidInput("product coefficient outside the field");
    }
  if (unit_.size() != d) throw InvalidInput("unit has wrong length");
  for (const auto& c : unit_)
    if (!F_.contains(c)) throw InvalidInput("unit coefficient outside the field");
  if (invol_.rows() != d || invol_.cols() != d) throw InvalidInput("involution must be dim x dim");
  if (invol_.field() != F_) throw InvalidInput("involution over a different field");
  invol_.check_entries();
  for (std::size_t i = 0; i < d; ++i) bar_.push_back(to_sparse(invol_.row(i)));
  if (names_.empty()) names_ = default_names(d);
  if (names_.size() != d) throw InvalidInput("basis name count mismatch");
}

Vec SuperAlgebra::scalar(long v) const { return scale(F_.make(v), unit_); }

Vec SuperAlgebra::mul(const Vec& a, const Vec& b) const {
  const std::size_t d = dim();
  Vec r = zero();
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j].is_zero()) continue;
      const auto& pr = mul_[i * d + j];
      if (pr.empty()) continue;
      axpy(r, a[i] * b[j], pr);
    }
  }
  return r;
}

Vec SuperAlgebra::bar(const Vec& a) const {
  Vec r = zero();
  for (std::size_t i = 0; i < dim(); ++i) axpy(r, a[i], bar_[i]);
  return r;
}

Vec SuperAlgebra::rho(const Vec& a) const {
  Vec r = a;
  for (std::size_t i = 0; i < dim(); ++i)
    if (parity_[i]) r[i] = -r[i];
  return r;
}

Vec SuperAlgebra::part(const Vec& a, int p) const {
  Vec r = a;
  for (std::size_t i = 0; i < dim(); ++i)
    if (parity_[i] != p) r[i] = F_.zero();
  return r;
}

std::optional<int> SuperAlgebra::degree(const Vec& a) const {
  bool e = false, o = false;
  for (std::size_t i = 0; i < dim(); ++i)
    if (!a[i].is_zero()) (parity_[i] ? o : e) = true;
  if (e == o) return std::nullopt;
  return o ? 1 : 0;
}

Vec SuperAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vec r = to_dense(F_, dim(), product(i, j));
  Scalar s = (parity_[i] & parity_[j]) ? F_.one() : F_.make(-1);
  axpy(r, s, product(j, i));
  return r;
}

Vec SuperAlgebra::bracket(const Vec& a, const Vec& b) const {
  Vec r = zero();
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q) {
      Vec ap = part(a, p), bq = part(b, q);
      axpy(r, F_.one(), mul(ap, bq));
      axpy(r, (p & q) ? F_.one() : F_.make(-1), mul(bq, ap));
    }
  return r;
}

std::string SuperAlgebra::element_str(const Vec& a) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    os << (first ? "" : " + ") << a[i].str() << "*" << names_[i];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Report verify_superalgebra(const SuperAlgebra& A) {
  Report rep;
  const std::size_t d = A.dim();
  const Field& F = A.field();
  rep.add("characteristic", F.characteristic() != 2);

  {
    std::string w;
    for (std::size_t i = 0; i < d && w.empty(); ++i)
      for (std::size_t j = 0; j < d && w.empty(); ++j)
        for (const auto& [k, c] : A.product(i, j))
          if (A.parity(k) != (A.parity(i) ^ A.parity(j))) {
            w = "b" + std::to_string(i) + "*b" + std::to_string(j) + " has component on b" +
                std::to_string(k);
            break;
          }
    rep.add("grading", w.empty(), w);
  }
  {
    std::string w;
    for (std::size_t i = 0; i < d && w.empty(); ++i)
      for (std::size_t j = 0; j < d && w.empty(); ++j) {
        Vec ij = to_dense(F, d, A.product(i, j));
        for (std::size_t k = 0; k < d; ++k) {
          Vec lhs = A.mul(ij, A.basis(k));
          Vec rhs = A.mul(A.basis(i), to_dense(F, d, A.product(j, k)));
          if (lhs != rhs) {
            w = "triple (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
            break;
          }
        }
      }
    rep.add("associativity", w.empty(), w);
  }
  {
    std::string w;
    auto deg = A.degree(A.unit());
    if (!deg || *deg != 0) w = "unit is not a nonzero even element";
    for (std::size_t i = 0; i < d && w.empty(); ++i) {
      Vec b = A.basis(i);
      if (A.mul(A.unit(), b) != b || A.mul(b, A.unit()) != b) w = "fails on b" + std::to_string(i);
    }
    rep.add("unit", w.empty(), w);
  }
  {
    std::string wp, ws, wa;
    for (std::size_t i = 0; i < d; ++i) {
      Vec bi = A.bar(A.basis(i));
      auto deg = A.degree(bi);
      if (wp.empty() && (!deg || *deg != A.parity(i))) wp = "bar(b" + std::to_string(i) + ") not of parity " + std::to_string(A.parity(i));
      if (ws.empty() && A.bar(bi) != A.basis(i)) ws = "bar(bar(b" + std::to_string(i) + ")) != b" + std::to_string(i);
    }
    for (std::size_t i = 0; i < d && wa.empty(); ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Vec lhs = A.bar(to_dense(F, d, A.product(i, j)));
        Vec rhs = A.mul(A.bar(A.basis(j)), A.bar(A.basis(i)));
        if (A.parity(i) & A.parity(j)) rhs = scale(F.make(-1), rhs);
        if (lhs != rhs) {
          wa = "bar(b" + std::to_string(i) + "*b" + std::to_string(j) + ")";
          break;
        }
      }
    rep.add("involution.parity", wp.empty(), wp);
    rep.add("involution.square", ws.empty(), ws);
    rep.add("involution.anti", wa.empty(), wa);
  }
  return rep;
}

namespace {

struct Builder {
  Field F;
  std::size_t d;
  std::vector<int> parity;
  std::vector<Vec> prod;  // d*d dense
  std::vector<std::string> names;
  Matrix invol;

  Builder(Field f, std::size_t dim) : F(f), d(dim), parity(dim, 0), prod(dim * dim, zeros(f, dim)), invol(f, dim, dim) {}
  void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) { prod[i * d + j][k] += c; }
  AlgebraPtr build(const std::string& name, const Vec& unit) {
    if (names.empty()) names = default_names(d);
    return std::make_shared<SuperAlgebra>(name, F, parity, table_from_dense(d, prod), unit, invol, names);
  }
};

// Matrix superalgebra M_{a|b}(k) with basis E_pq in row-major order.
Builder matrix_builder(const Field& F, std::size_t a, std::size_t b) {
  const std::size_t N = a + b;
  Builder B(F, N * N);
  auto idx = [N](std::size_t p, std::size_t q) { return p * N + q; };
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t q = 0; q < N; ++q) {
      B.parity[idx(p, q)] = (p >= a) ^ (q >= a);
      B.names.push_back("E" + std::to_string(p + 1) + "," + std::to_string(q + 1));
      for (std::size_t r = 0; r < N; ++r) B.set(idx(p, q), idx(q, r), idx(p, r), F.one());
    }
  return B;
}

Vec matrix_unit_elem(const Field& F, std::size_t N) {
  Vec u = zeros(F, N * N);
  for (std::size_t p = 0; p < N; ++p) u[p * N + p] = F.one();
  return u;
}

Field parse_field(const std::string& s) {
  if (s.empty() || s == "Q") return Field::rationals();
  if (s[0] == 'F') {
    try {
      return Field::prime(std::stoull(s.substr(1)));
    } catch (const std::logic_error&) {
      throw InvalidInput("bad field '" + s + "'");
    }
  }
  throw InvalidInput("unknown field '" + s + "' (use Q or F<p>)");
}

AlgebraPtr ground(const Field& F) {
  Builder B(F, 1);
  B.set(0, 0, 0, F.one());
  B.invol.at(0, 0) = F.one();
  B.names = {"1"};
  return B.build("ground_field_id:" + F.name(), unit_vector(F, 1, 0));
}

AlgebraPtr two_dim(const Field& F, int odd, const std::string& name, const std::string& gen) {
  Builder B(F, 2);
  B.parity = {0, odd};
  B.set(0, 0, 0, F.one());
  B.set(0, 1, 1, F.one());
  B.set(1, 0, 1, F.one());
  B.invol = Matrix::identity(F, 2);
  B.names = {"1", gen};
  return B.build(name + ":" + F.name(), unit_vector(F, 2, 0));
}

AlgebraPtr transpose_matrices(const Field& F, std::size_t l) {
  Builder B = matrix_builder(F, l, 0);
  for (std::size_t p = 0; p < l; ++p)
    for (std::size_t q = 0; q < l; ++q) B.invol.at(p * l + q, q * l + p) = F.one();
  return B.build("matrix_transpose:" + F.name() + ":" + std::to_string(l), matrix_unit_elem(F, l));
}

AlgebraPtr periplectic(const Field& F, std::size_t l) {
  const std::size_t N = 2 * l;
  Builder B = matrix_builder(F, l, l);
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t q = 0; q < N; ++q) {
      std::size_t tp, tq;
      long s = 1;
      if (p < l && q < l) { tp = l + q; tq = l + p; }
      else if (p < l) { tp = q - l; tq = l + p; s = -1; }
      else if (q < l) { tp = l + q; tq = p - l; }
      else { tp = q - l; tq = p - l; }
      B.invol.at(p * N + q, tp * N + tq) = F.make(s);
    }
  return B.build("matrix_prp:" + F.name() + ":" + std::to_string(l), matrix_unit_elem(F, N));
}

AlgebraPtr orthosymplectic(const Field& F, std::size_t k, std::size_t l) {
  const std::size_t N = k + 2 * l;
  Builder B = matrix_builder(F, k, 2 * l);
  // bar(E_pq) = sum over targets (r,c) whose source is (p,q)
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) {
      OspSource s = osp_source(k, l, r, c);
      B.invol.at(s.row * N + s.col, r * N + c) = F.make(s.sign);
    }
  return B.build("matrix_osp:" + F.name() + ":" + std::to_string(k) + "," + std::to_string(2 * l),
                 matrix_unit_elem(F, N));
}

}  // namespace

AlgebraPtr plain_algebra(const std::string& which, const Field& F) {
  if (which.empty() || which == "ground") return ground(F);
  if (which == "dual") return two_dim(F, 0, "dual_numbers_id", "eps");
  if (which == "grassmann") return two_dim(F, 1, "grassmann_id", "xi");
  if (which == "M2") return transpose_matrices(F, 2);
  throw InvalidInput("unknown base algebra '" + which + "'");
}

AlgebraPtr sum_with_opposite(const SuperAlgebra& S) {
  const Field& F = S.field();
  const std::size_t d = S.dim();
  Builder B(F, 2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    B.parity[i] = B.parity[d + i] = S.parity(i);
    B.names.push_back("(" + S.basis_name(i) + ",0)");
  }
  for (std::size_t i = 0; i < d; ++i) B.names.push_back("(0," + S.basis_name(i) + ")");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      for (const auto& [k, c] : S.product(i, j)) B.set(i, j, k, c);
      // b_i o b_j = (-1)^{|i||j|} b_j b_i in the opposite summand
      Scalar s = (S.parity(i) & S.parity(j)) ? F.make(-1) : F.one();
      for (const auto& [k, c] : S.product(j, i)) B.set(d + i, d + j, d + k, s * c);
    }
  for (std::size_t i = 0; i < d; ++i) {
    B.invol.at(i, d + i) = F.one();
    B.invol.at(d + i, i) = F.one();
  }
  Vec u = zeros(F, 2 * d);
  for (std::size_t i = 0; i < d; ++i) u[i] = u[d + i] = S.unit()[i];
  std::string base = S.name().substr(0, S.name().find(':'));
  return B.build("s_plus_sop:" + F.name() + ":" + base, u);
}

AlgebraPtr adjoin_sqrt_minus_one(const SuperAlgebra& R) {
  const Field& F = R.field();
  const std::size_t d = R.dim();
  Builder B(F, 2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    B.parity[i] = B.parity[d + i] = R.parity(i);
    B.names.push_back(R.basis_name(i));
  }
  for (std::size_t i = 0; i < d; ++i) B.names.push_back(R.basis_name(i) + "*i");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [k, c] : R.product(i, j)) {
        B.set(i, j, k, c);
        B.set(i, d + j, d + k, c);
        B.set(d + i, j, d + k, c);
        B.set(d + i, d + j, k, -c);
      }
  for (std::size_t i = 0; i < d; ++i)
    for (const auto& [k, c] : R.bar_basis(i)) {
      B.invol.at(i, k) = c;
      B.invol.at(d + i, d + k) = -c;
    }
  Vec u = zeros(F, 2 * d);
  for (std::size_t i = 0; i < d; ++i) u[i] = R.unit()[i];
  std::string base = R.name().substr(0, R.name().find(':'));
  return B.build("adjoin_i:" + F.name() + ":" + base, u);
}

AlgebraPtr preset_algebra(const std::string& id) {
  std::vector<std::string> parts;
  {
    std::stringstream ss(id);
    std::string p;
    while (std::getline(ss, p, ':')) parts.push_back(p);
  }
  if (parts.empty()) throw InvalidInput("empty preset id");
  const std::string& name = parts[0];
  Field F = parse_field(parts.size() > 1 ? parts[1] : "Q");
  std::string param = parts.size() > 2 ? parts[2] : "";
  if (parts.size() > 3) throw InvalidInput("too many ':' fields in preset '" + id + "'");
  auto need_int = [&](const std::string& s, long dflt) -> std::size_t {
    if (s.empty()) return static_cast<std::size_t>(dflt);
    try {
      long v = std::stol(s);
      if (v < 1 || v > 8) throw InvalidInput("parameter out of range in '" + id + "'");
      return static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
      throw InvalidInput("bad parameter in '" + id + "'");
    }
  };
  if (name == "ground_field_id") return ground(F);
  if (name == "dual_numbers_id") return two_dim(F, 0, "dual_numbers_id", "eps");
  if (name == "grassmann_id") return two_dim(F, 1, "grassmann_id", "xi");
  if (name == "matrix_transpose") return transpose_matrices(F, need_int(param, 2));
  if (name == "matrix_prp") return periplectic(F, need_int(param, 1));
  if (name == "matrix_osp") {
    std::size_t k = 1, l = 1;
    if (!param.empty()) {
      auto comma = param.find(',');
      if (comma == std::string::npos) throw InvalidInput("matrix_osp expects k,2l");
      k = need_int(param.substr(0, comma), 1);
      std::size_t two_l = need_int(param.substr(comma + 1), 2);
      if (two_l % 2) throw InvalidInput("matrix_osp expects an even odd-block size");
      l = two_l / 2;
    }
    return orthosymplectic(F, k, l);
  }
  if (name == "s_plus_sop") return sum_with_opposite(*plain_algebra(param, F));
  if (name == "adjoin_i") {
    if (param == "M2") throw InvalidInput("adjoin_i base must carry a superinvolution");
    return adjoin_sqrt_minus_one(*plain_algebra(param, F));
  }
  throw InvalidInput("unknown preset '" + name + "'");
}

std::vector<std::string> preset_catalog() {
  return {"ground_field_id", "dual_numbers_id", "grassmann_id", "matrix_transpose:Q:2",
          "matrix_prp:Q:1",  "matrix_osp:Q:1,2", "s_plus_sop:Q[:ground|dual|grassmann|M2]",
          "adjoin_i:Q[:ground|dual|grassmann]"};
}

namespace {

std::vector<Vec> span_rows(const Field& F, std::size_t n, const std::vector<Vec>& gens) {
  EchelonBasis E(F, n);
  for (const auto& g : gens) E.insert(g);
  return E.rows();
}

// Kernel of the linear conditions rows(x) = 0, one block of conditions per column of x.
std::vector<Vec> solution_space(const Field& F, std::size_t n, const std::vector<Vec>& cols_images) {
  // cols_images[i] = image of the i-th unit vector (stacked conditions)
  if (n == 0) return {};
  std::size_t rows = cols_images.empty() ? 0 : cols_images[0].size();
  if (rows == 0) {
    std::vector<Vec> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(unit_vector(F, n, i));
    return all;
  }
  return kernel_basis(Matrix::from_columns(F, rows, cols_images));
}

std::vector<Vec> center_part(const SuperAlgebra& R, int p, bool super) {
  const std::size_t d = R.dim();
  const Field& F = R.field();
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < d; ++i)
    if (R.parity(i) == p) idx.push_back(i);
  std::vector<Vec> images;
  for (std::size_t x : idx) {
    Vec cond;
    for (std::size_t i = 0; i < d; ++i) {
      Vec l = to_dense(F, d, R.product(i, x));
      Vec r = to_dense(F, d, R.product(x, i));
      Scalar s = (super && (p & R.parity(i))) ? F.make(-1) : F.one();
      Vec c = sub(l, scale(s, r));
      cond.insert(cond.end(), c.begin(), c.end());
    }
    images.push_back(std::move(cond));
  }
  std::vector<Vec> out;
  for (const auto& k : solution_space(F, idx.size(), images)) {
    Vec v = zeros(F, d);
    for (std::size_t t = 0; t < idx.size(); ++t) v[idx[t]] = k[t];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::vector<Vec> subspace(const SuperAlgebra& R, Subspace which) {
  const std::size_t d = R.dim();
  const Field& F = R.field();
  std::vector<Vec> gens;
  switch (which) {
    case Subspace::plus:
      for (std::size_t i = 0; i < d; ++i) gens.push_back(R.plus(R.basis(i)));
      break;
    case Subspace::minus:
      for (std::size_t i = 0; i < d; ++i) gens.push_back(R.minus(R.basis(i)));
      break;
    case Subspace::commutators:
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) gens.push_back(R.bracket_basis(i, j));
      break;
    case Subspace::commutators_minus: {
      auto c = subspace(R, Subspace::commutators);
      auto m = subspace(R, Subspace::minus);
      // both are graded, so intersect parity by parity to keep a homogeneous basis
      for (int p = 0; p < 2; ++p) {
        std::vector<Vec> cp, mp;
        for (auto& v : c) if (R.degree(v) == p) cp.push_back(v);
        for (auto& v : m) if (R.degree(v) == p) mp.push_back(v);
        for (auto& v : intersect(F, d, cp, mp)) gens.push_back(v);
      }
      break;
    }
    case Subspace::commutators_times_R:
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          Vec c = R.bracket_basis(i, j);
          for (std::size_t k = 0; k < d; ++k) gens.push_back(R.mul(c, R.basis(k)));
        }
      break;
    case Subspace::minus_plus_minus_sq: {
      auto m = subspace(R, Subspace::minus);
      gens = m;
      for (const auto& a : m)
        for (const auto& b : m) gens.push_back(R.mul(a, b));
      break;
    }
    case Subspace::super_center:
    case Subspace::plain_center: {
      bool super = which == Subspace::super_center;
      gens = center_part(R, 0, super);
      auto odd = center_part(R, 1, super);
      gens.insert(gens.end(), odd.begin(), odd.end());
      break;
    }
  }
  return span_rows(F, d, gens);
}

bool is_invertible(const SuperAlgebra& R, const Vec& e) {
  const std::size_t d = R.dim();
  std::vector<Vec> lcols, rcols;
  for (std::size_t i = 0; i < d; ++i) {
    lcols.push_back(R.mul(e, R.basis(i)));
    rcols.push_back(R.mul(R.basis(i), e));
  }
  return solve(Matrix::from_columns(R.field(), d, lcols), R.unit()).has_value() &&
         solve(Matrix::from_columns(R.field(), d, rcols), R.unit()).has_value();
}

AssumptionResult assumption_checker(const SuperAlgebra& R, bool use_super_center) {
  AssumptionResult res;
  res.super_center = use_super_center;
  const Field& F = R.field();
  const std::size_t d = R.dim();
  auto center = subspace(R, use_super_center ? Subspace::super_center : Subspace::plain_center);
  auto minus = subspace(R, Subspace::minus);
  for (int p = 0; p < 2; ++p) {
    std::vector<Vec> cp, mp;
    for (auto& v : center) if (R.degree(v) == p) cp.push_back(v);
    for (auto& v : minus) if (R.degree(v) == p) mp.push_back(v);
    auto V = intersect(F, d, cp, mp);
    res.search_space_dim += V.size();
    if (V.empty()) continue;
    for (const auto& v : V)
      if (is_invertible(R, v)) {
        res.holds = true;
        res.witness = v;
        res.detail = "basis vector of R_- ∩ Z(R)";
        return res;
      }
    const std::size_t k = V.size();
    auto try_coeffs = [&](const std::vector<long>& c) {
      Vec e = zeros(F, d);
      for (std::size_t t = 0; t < k; ++t) axpy(e, F.make(c[t]), V[t]);
      if (!is_zero(e) && is_invertible(R, e)) {
        res.holds = true;
        res.witness = e;
        return true;
      }
      return false;
    };
    std::uint64_t p_char = F.characteristic();
    double total = 1;
    for (std::size_t t = 0; t < k; ++t) total *= static_cast<double>(p_char ? p_char : 1);
    if (p_char && total <= 200000) {
      std::vector<long> c(k, 0);
      while (true) {
        if (try_coeffs(c)) { res.detail = "exhaustive search over F_p"; return res; }
        std::size_t t = 0;
        while (t < k && ++c[t] == static_cast<long>(p_char)) c[t++] = 0;
        if (t == k) break;
      }
    } else {
      std::mt19937_64 rng(0x5eed);
      std::uniform_int_distribution<long> dist(-3, 3);
      for (int trial = 0; trial < 256; ++trial) {
        std::vector<long> c(k);
        for (auto& x : c) x = dist(rng);
        if (try_coeffs(c)) { res.detail = "random combination"; return res; }
      }
    }
  }
  res.detail = res.search_space_dim == 0 ? "R_- ∩ Z(R) = 0" : "no unit found in R_- ∩ Z(R)";
  return res;
}

using nlohmann::json;

AlgebraPtr algebra_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("algebra config: ") + e.what());
  }
  try {
    Field F = Field::rationals();
    const auto& fj = j.at("field");
    std::string kind = fj.at("kind").get<std::string>();
    if (kind == "Fp") F = Field::prime(fj.at("p").get<std::uint64_t>());
    else if (kind != "Q") throw InvalidInput("field kind must be Q or Fp");
    auto parity = j.at("parity").get<std::vector<int>>();
    const std::size_t d = parity.size();
    Vec unit;
    for (const auto& s : j.at("unit")) unit.push_back(F.parse(s.get<std::string>()));
    std::vector<Vec> prod(d * d, zeros(F, d));
    for (const auto& e : j.at("mul")) {
      auto i = e.at(0).get<std::size_t>(), k = e.at(1).get<std::size_t>();
      if (i >= d || k >= d) throw InvalidInput("mul index out of range");
      for (const auto& t : e.at(2)) {
        auto c = t.at(0).get<std::size_t>();
        if (c >= d) throw InvalidInput("mul target index out of range");
        prod[i * d + k][c] += F.parse(t.at(1).get<std::string>());
      }
    }
    Matrix inv(F, d, d);
    const auto& ij = j.at("involution");
    if (ij.size() != d) throw InvalidInput("involution must have dim rows");
    for (std::size_t r = 0; r < d; ++r) {
      if (ij[r].size() != d) throw InvalidInput("involution rows must have dim entries");
      for (std::size_t c = 0; c < d; ++c) inv.at(r, c) = F.parse(ij[r][c].get<std::string>());
    }
    std::vector<std::string> names;
    if (j.contains("basis_names")) names = j["basis_names"].get<std::vector<std::string>>();
    return std::make_shared<SuperAlgebra>(j.value("name", std::string("config")), F, parity,
                                          table_from_dense(d, prod), unit, inv, names);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("algebra config: ") + e.what());
  }
}

AlgebraPtr algebra_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open algebra config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return algebra_from_json(ss.str());
}

std::string algebra_to_json(const SuperAlgebra& A) {
  json j;
  j["name"] = A.name();
  if (A.field().is_rational()) j["field"] = {{"kind", "Q"}};
  else j["field"] = {{"kind", "Fp"}, {"p", A.field().characteristic()}};
  j["parity"] = A.parities();
  json unit = json::array();
  for (const auto& c : A.unit()) unit.push_back(c.str());
  j["unit"] = unit;
  json mul = json::array();
  for (std::size_t a = 0; a < A.dim(); ++a)
    for (std::size_t b = 0; b < A.dim(); ++b) {
      if (A.product(a, b).empty()) continue;
      json terms = json::array();
      for (const auto& [k, c] : A.product(a, b)) terms.push_back(json::array({k, c.str()}));
      mul.push_back(json::array({a, b, terms}));
    }
  j["mul"] = mul;
  json inv = json::array();
  for (std::size_t r = 0; r < A.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < A.dim(); ++c) row.push_back(A.involution().at(r, c).str());
    inv.push_back(row);
  }
  j["involution"] = inv;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < A.dim(); ++i) names.push_back(A.basis_name(i));
  j["basis_names"] = names;
  return j.dump(1);
}

}  // namespace ospx
