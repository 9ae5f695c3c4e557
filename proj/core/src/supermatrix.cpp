#include "ospx/supermatrix.hpp"

#include <sstream>
#include <tuple>

#include "ospx/blocks.hpp"

namespace ospx {

void check_shape(const MatrixShape& s) {
  if (s.size() < 1) throw InvalidShape("matrix shape needs m + 2n >= 1");
}

SuperMatrix::SuperMatrix(MatrixShape shape, AlgebraPtr R) : shape_(shape), R_(std::move(R)) {
  check_shape(shape_);
  if (!R_) throw InvalidInput("null algebra");
  v_ = zeros(R_->field(), shape_.size() * shape_.size() * R_->dim());
}

SuperMatrix SuperMatrix::unflatten(MatrixShape shape, AlgebraPtr R, const Vec& v) {
  SuperMatrix X(shape, std::move(R));
  if (v.size() != X.v_.size()) throw InvalidInput("unflatten: length mismatch");
  X.v_ = v;
  return X;
}

Vec SuperMatrix::entry(std::size_t i, std::size_t j) const {
  const std::size_t N = shape_.size(), d = R_->dim();
  if (i < 1 || j < 1 || i > N || j > N) throw InvalidInput("matrix index out of range");
  std::size_t base = ((i - 1) * N + (j - 1)) * d;
  return Vec(v_.begin() + base, v_.begin() + base + d);
}

void SuperMatrix::add_entry(std::size_t i, std::size_t j, const Vec& a) {
  const std::size_t N = shape_.size(), d = R_->dim();
  if (i < 1 || j < 1 || i > N || j > N) throw InvalidInput("matrix index out of range");
  if (a.size() != d) throw InvalidInput("entry has wrong length");
  std::size_t base = ((i - 1) * N + (j - 1)) * d;
  for (std::size_t k = 0; k < d; ++k)
    if (!a[k].is_zero()) v_[base + k] += a[k];
}

int coordinate_parity(const MatrixShape& s, const SuperAlgebra& R, std::size_t flat) {
  const std::size_t N = s.size(), d = R.dim();
  std::size_t k = flat % d, ij = flat / d;
  std::size_t i = ij / N, j = ij % N;
  return s.index_parity(i + 1) ^ s.index_parity(j + 1) ^ R.parity(k);
}

SuperMatrix SuperMatrix::part(int deg) const {
  SuperMatrix X = *this;
  for (std::size_t f = 0; f < v_.size(); ++f)
    if (coordinate_parity(shape_, *R_, f) != deg) X.v_[f] = R_->field().zero();
  return X;
}

std::optional<int> SuperMatrix::degree() const {
  bool e = false, o = false;
  for (std::size_t f = 0; f < v_.size(); ++f)
    if (!v_[f].is_zero()) (coordinate_parity(shape_, *R_, f) ? o : e) = true;
  if (e == o) return std::nullopt;
  return o ? 1 : 0;
}

void SuperMatrix::check_compatible(const SuperMatrix& o) const {
  if (!(shape_ == o.shape_)) throw MixedShapes("matrices of different shapes");
  if (R_ != o.R_ && R_->name() != o.R_->name()) throw MixedShapes("matrices over different algebras");
}

SuperMatrix SuperMatrix::operator+(const SuperMatrix& o) const {
  check_compatible(o);
  return unflatten(shape_, R_, add(v_, o.v_));
}

SuperMatrix SuperMatrix::operator-(const SuperMatrix& o) const {
  check_compatible(o);
  return unflatten(shape_, R_, sub(v_, o.v_));
}

SuperMatrix SuperMatrix::scaled(const Scalar& s) const { return unflatten(shape_, R_, scale(s, v_)); }

namespace {

struct Nz {
  std::uint32_t i, j, k;
  Scalar c;
};

std::vector<Nz> nonzeros(std::size_t N, std::size_t d, const Vec& x) {
  std::vector<Nz> out;
  for (std::size_t f = 0; f < x.size(); ++f) {
    if (x[f].is_zero()) continue;
    std::size_t k = f % d, ij = f / d;
    out.push_back(Nz{static_cast<std::uint32_t>(ij / N), static_cast<std::uint32_t>(ij % N),
                     static_cast<std::uint32_t>(k), x[f]});
  }
  return out;
}

void accumulate_product(std::size_t N, const SuperAlgebra& R, const std::vector<Nz>& X,
                        const std::vector<std::vector<Nz>>& Yrows, const Scalar& s, Vec& out) {
  const std::size_t d = R.dim();
  for (const auto& a : X)
    for (const auto& b : Yrows[a.j]) {
      const auto& pr = R.product(a.k, b.k);
      if (pr.empty()) continue;
      Scalar c = s * a.c * b.c;
      std::size_t base = (static_cast<std::size_t>(a.i) * N + b.j) * d;
      for (const auto& [t, v] : pr) out[base + t] += c * v;
    }
}

std::vector<std::vector<Nz>> by_row(std::size_t N, const std::vector<Nz>& Y) {
  std::vector<std::vector<Nz>> rows(N);
  for (const auto& b : Y) rows[b.i].push_back(b);
  return rows;
}

}  // namespace

Vec flat_product(const MatrixShape& s, const SuperAlgebra& R, const Vec& x, const Vec& y) {
  const std::size_t N = s.size(), d = R.dim();
  Vec out = zeros(R.field(), N * N * d);
  accumulate_product(N, R, nonzeros(N, d, x), by_row(N, nonzeros(N, d, y)), R.field().one(), out);
  return out;
}

Vec flat_supercommutator(const MatrixShape& s, const SuperAlgebra& R, const Vec& x, const Vec& y) {
  const std::size_t N = s.size(), d = R.dim();
  const Field& F = R.field();
  std::vector<Nz> xp[2], yp[2];
  for (auto& e : nonzeros(N, d, x))
    xp[s.index_parity(e.i + 1) ^ s.index_parity(e.j + 1) ^ R.parity(e.k)].push_back(e);
  for (auto& e : nonzeros(N, d, y))
    yp[s.index_parity(e.i + 1) ^ s.index_parity(e.j + 1) ^ R.parity(e.k)].push_back(e);
  std::vector<std::vector<Nz>> xr[2] = {by_row(N, xp[0]), by_row(N, xp[1])};
  std::vector<std::vector<Nz>> yr[2] = {by_row(N, yp[0]), by_row(N, yp[1])};
  Vec out = zeros(F, N * N * d);
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q) {
      if (xp[p].empty() || yp[q].empty()) continue;
      accumulate_product(N, R, xp[p], yr[q], F.one(), out);
      accumulate_product(N, R, yp[q], xr[p], (p & q) ? F.one() : F.make(-1), out);
    }
  return out;
}

SuperMatrix SuperMatrix::operator*(const SuperMatrix& o) const {
  check_compatible(o);
  return unflatten(shape_, R_, flat_product(shape_, *R_, v_, o.v_));
}

std::string SuperMatrix::str() const {
  std::ostringstream os;
  const std::size_t N = shape_.size();
  bool first = true;
  for (std::size_t i = 1; i <= N; ++i)
    for (std::size_t j = 1; j <= N; ++j) {
      Vec e = entry(i, j);
      if (ospx::is_zero(e)) continue;
      os << (first ? "" : " + ") << "e" << i << "," << j << "(" << R_->element_str(e) << ")";
      first = false;
    }
  if (first) os << "0";
  return os.str();
}

SuperMatrix matrix_unit(const MatrixShape& shape, const AlgebraPtr& R, std::size_t i, std::size_t j,
                        const Vec& a) {
  SuperMatrix X(shape, R);
  X.add_entry(i, j, a);
  return X;
}

SuperMatrix osp_involution(const SuperMatrix& X) {
  const auto& s = X.shape();
  const auto& R = *X.algebra();
  SuperMatrix Y(s, X.algebra());
  const std::size_t N = s.size();
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t q = 0; q < N; ++q) {
      OspSource src = osp_source(s.m, s.n, p, q);
      Vec a = X.entry(src.row + 1, src.col + 1);
      if (ospx::is_zero(a)) continue;
      Vec b = R.bar(a);
      if (src.twist) b = R.rho(b);
      if (src.sign < 0) b = scale(R.field().make(-1), b);
      Y.add_entry(p + 1, q + 1, b);
    }
  return Y;
}

SuperMatrix supercommutator(const SuperMatrix& X, const SuperMatrix& Y) {
  if (!(X.shape() == Y.shape())) throw MixedShapes("supercommutator: shape mismatch");
  if (X.algebra()->name() != Y.algebra()->name()) throw MixedShapes("supercommutator: algebra mismatch");
  return SuperMatrix::unflatten(X.shape(), X.algebra(),
                                flat_supercommutator(X.shape(), *X.algebra(), X.flatten(), Y.flatten()));
}

SuperMatrix rho(const SuperMatrix& X) {
  SuperMatrix Y(X.shape(), X.algebra());
  const std::size_t N = X.shape().size();
  for (std::size_t i = 1; i <= N; ++i)
    for (std::size_t j = 1; j <= N; ++j) Y.add_entry(i, j, X.algebra()->rho(X.entry(i, j)));
  return Y;
}

}  // namespace ospx
