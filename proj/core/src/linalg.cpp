#include "ospx/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace ospx {

namespace {

using i128 = __int128;

bool fits64(i128 v) {
  return v >= static_cast<i128>(INT64_MIN) + 1 && v <= static_cast<i128>(INT64_MAX);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t modp(i128 v, std::uint64_t p) {
  i128 r = v % static_cast<i128>(p);
  if (r < 0) r += p;
  return static_cast<std::int64_t>(r);
}

std::int64_t powmod(std::int64_t b, std::uint64_t e, std::uint64_t p) {
  i128 r = 1, x = b;
  while (e) {
    if (e & 1) r = r * x % p;
    x = x * x % p;
    e >>= 1;
  }
  return static_cast<std::int64_t>(r);
}

mpq_class mpq_from(std::int64_t n, std::int64_t d) {
  mpz_class zn, zd;
  mpz_set_si(zn.get_mpz_t(), n);
  mpz_set_si(zd.get_mpz_t(), d);
  mpq_class q(zn, zd);
  q.canonicalize();
  return q;
}

}  // namespace

Scalar Scalar::rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidInput("zero denominator");
  i128 n = num, d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Scalar s;
  if (fits64(n) && fits64(d)) {
    s.num_ = static_cast<std::int64_t>(n);
    s.den_ = static_cast<std::int64_t>(d);
    return s;
  }
  return from_mpq(mpq_from(num, den));
}

Scalar Scalar::rational(const mpq_class& q) { return from_mpq(q); }

Scalar Scalar::residue(std::int64_t v, std::uint64_t p) {
  Scalar s;
  s.p_ = p;
  s.num_ = modp(v, p);
  return s;
}

Scalar Scalar::from_mpq(const mpq_class& q) {
  Scalar s;
  if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
    long n = mpz_get_si(q.get_num_mpz_t());
    long d = mpz_get_si(q.get_den_mpz_t());
    if (n != INT64_MIN) {
      s.num_ = n;
      s.den_ = d;
      return s;
    }
  }
  s.big_ = std::make_shared<const mpq_class>(q);
  s.num_ = 1;  // placeholder so is_zero() stays false
  return s;
}

mpq_class Scalar::to_mpq() const {
  if (big_) return *big_;
  return mpq_from(num_, den_);
}

void Scalar::check_same(const Scalar& o) const {
  if (p_ != o.p_) throw InvalidInput("scalars from different fields");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  if (p_) return residue(num_ + o.num_, p_);
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      i128 n = static_cast<i128>(num_) + o.num_;
      if (fits64(n)) {
        Scalar s;
        s.num_ = static_cast<std::int64_t>(n);
        return s;
      }
    }
    i128 g = gcd128(den_, o.den_);
    i128 n = static_cast<i128>(num_) * (o.den_ / g) + static_cast<i128>(o.num_) * (den_ / g);
    i128 d = static_cast<i128>(den_ / g) * o.den_;
    i128 h = gcd128(n, d);
    if (h > 1) {
      n /= h;
      d /= h;
    }
    if (n == 0) return Scalar();
    if (fits64(n) && fits64(d)) {
      Scalar s;
      s.num_ = static_cast<std::int64_t>(n);
      s.den_ = static_cast<std::int64_t>(d);
      return s;
    }
  }
  return from_mpq(to_mpq() + o.to_mpq());
}

Scalar Scalar::operator-() const {
  if (p_) return residue(num_ == 0 ? 0 : static_cast<std::int64_t>(p_) - num_, p_);
  if (big_) return from_mpq(-*big_);
  Scalar s = *this;
  s.num_ = -num_;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  if (p_) {
    Scalar s;
    s.p_ = p_;
    s.num_ = static_cast<std::int64_t>(static_cast<i128>(num_) * o.num_ % p_);
    return s;
  }
  if (is_zero() || o.is_zero()) return Scalar();
  if (!big_ && !o.big_) {
    i128 g1 = gcd128(num_, o.den_);
    i128 g2 = gcd128(o.num_, den_);
    i128 n = static_cast<i128>(num_ / g1) * (o.num_ / g2);
    i128 d = static_cast<i128>(den_ / g2) * (o.den_ / g1);
    if (fits64(n) && fits64(d)) {
      Scalar s;
      s.num_ = static_cast<std::int64_t>(n);
      s.den_ = static_cast<std::int64_t>(d);
      return s;
    }
  }
  return from_mpq(to_mpq() * o.to_mpq());
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InvalidInput("division by zero");
  if (p_) {
    Scalar s;
    s.p_ = p_;
    s.num_ = powmod(num_, p_ - 2, p_);
    return s;
  }
  if (!big_) return rational(den_, num_);
  return from_mpq(1 / *big_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  check_same(o);
  if (!big_ && !o.big_) return num_ == o.num_ && den_ == o.den_;
  return to_mpq() == o.to_mpq();
}

std::string Scalar::str() const {
  if (p_) return std::to_string(num_);
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Field Field::prime(std::uint64_t p) {
  if (p < 3 || (p >> 62) != 0) throw InvalidInput("prime field characteristic must be an odd prime");
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) throw InvalidInput("characteristic " + std::to_string(p) + " is not prime");
  return Field(p);
}

Scalar Field::make(std::int64_t v) const {
  return p_ ? Scalar::residue(v, p_) : Scalar::rational(v);
}

Scalar Field::make(std::int64_t num, std::int64_t den) const {
  if (!p_) return Scalar::rational(num, den);
  return make(num) / make(den);
}

Scalar Field::parse(const std::string& s) const {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      if (p_) {
        mpz_class z(s);
        mpz_class r = z % static_cast<unsigned long>(p_);
        if (r < 0) r += static_cast<unsigned long>(p_);
        return Scalar::residue(r.get_si(), p_);
      }
      return Scalar::rational(mpq_class(mpz_class(s)));
    }
    mpz_class n(s.substr(0, slash)), d(s.substr(slash + 1));
    if (d == 0) throw InvalidInput("zero denominator in '" + s + "'");
    if (p_) {
      mpz_class rn = n % static_cast<unsigned long>(p_), rd = d % static_cast<unsigned long>(p_);
      if (rn < 0) rn += static_cast<unsigned long>(p_);
      if (rd < 0) rd += static_cast<unsigned long>(p_);
      if (rd == 0) throw InvalidInput("denominator vanishes mod p in '" + s + "'");
      return Scalar::residue(rn.get_si(), p_) / Scalar::residue(rd.get_si(), p_);
    }
    mpq_class q(n, d);
    q.canonicalize();
    return Scalar::rational(q);
  } catch (const std::invalid_argument&) {
    throw InvalidInput("malformed scalar '" + s + "'");
  }
}

std::string Field::name() const { return p_ ? "F" + std::to_string(p_) : "Q"; }

Vec zeros(const Field& F, std::size_t n) { return Vec(n, F.zero()); }

Vec unit_vector(const Field& F, std::size_t n, std::size_t i) {
  Vec v = zeros(F, n);
  v[i] = F.one();
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

void axpy(Vec& y, const Scalar& a, const Vec& x) {
  if (a.is_zero()) return;
  if (y.size() != x.size()) throw InvalidInput("axpy: length mismatch");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

void axpy(Vec& y, const Scalar& a, const SparseVec& x) {
  if (a.is_zero()) return;
  for (const auto& [i, c] : x) y[i] += a * c;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InvalidInput("add: length mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!b[i].is_zero()) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InvalidInput("sub: length mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!b[i].is_zero()) r[i] -= b[i];
  return r;
}

Vec scale(const Scalar& s, const Vec& v) {
  Vec r = v;
  for (auto& x : r)
    if (!x.is_zero()) x = s * x;
  return r;
}

SparseVec to_sparse(const Vec& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return s;
}

Vec to_dense(const Field& F, std::size_t n, const SparseVec& v) {
  Vec d = zeros(F, n);
  for (const auto& [i, c] : v) d[i] = c;
  return d;
}

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].str();
  os << "]";
  return os.str();
}

Matrix::Matrix(const Field& F, std::size_t rows, std::size_t cols)
    : F_(F), r_(rows), c_(cols), a_(rows * cols, F.zero()) {}

Matrix Matrix::identity(const Field& F, std::size_t n) {
  Matrix M(F, n, n);
  for (std::size_t i = 0; i < n; ++i) M.at(i, i) = F.one();
  return M;
}

Matrix Matrix::from_rows(const Field& F, std::size_t cols, const std::vector<Vec>& rows) {
  Matrix M(F, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InvalidInput("from_rows: ragged input");
    for (std::size_t j = 0; j < cols; ++j) M.at(i, j) = rows[i][j];
  }
  return M;
}

Matrix Matrix::from_columns(const Field& F, std::size_t rows, const std::vector<Vec>& cols) {
  Matrix M(F, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw InvalidInput("from_columns: ragged input");
    for (std::size_t i = 0; i < rows; ++i) M.at(i, j) = cols[j][i];
  }
  return M;
}

Vec Matrix::row(std::size_t i) const { return Vec(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }

Vec Matrix::col(std::size_t j) const {
  Vec v;
  v.reserve(r_);
  for (std::size_t i = 0; i < r_; ++i) v.push_back(at(i, j));
  return v;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != c_) throw InvalidInput("apply: dimension mismatch");
  Vec y = zeros(F_, r_);
  for (std::size_t j = 0; j < c_; ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t i = 0; i < r_; ++i)
      if (!at(i, j).is_zero()) y[i] += at(i, j) * x[j];
  }
  return y;
}

Matrix Matrix::transpose() const {
  Matrix T(F_, c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) T.at(j, i) = at(i, j);
  return T;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (c_ != o.r_) throw InvalidInput("matrix product: dimension mismatch");
  Matrix P(F_, r_, o.c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < c_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < o.c_; ++j)
        if (!o.at(k, j).is_zero()) P.at(i, j) += at(i, k) * o.at(k, j);
    }
  return P;
}

void Matrix::check_entries() const {
  for (const auto& s : a_)
    if (!F_.contains(s)) throw InvalidInput("matrix entry outside the declared field");
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& M) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
    std::size_t p = r;
    while (p < M.rows() && M.at(p, c).is_zero()) ++p;
    if (p == M.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < M.cols(); ++j) std::swap(M.at(p, j), M.at(r, j));
    Scalar inv = M.at(r, c).inverse();
    for (std::size_t j = c; j < M.cols(); ++j)
      if (!M.at(r, j).is_zero()) M.at(r, j) *= inv;
    for (std::size_t i = 0; i < M.rows(); ++i) {
      if (i == r || M.at(i, c).is_zero()) continue;
      Scalar f = M.at(i, c);
      for (std::size_t j = c; j < M.cols(); ++j)
        if (!M.at(r, j).is_zero()) M.at(i, j) -= f * M.at(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

}  // namespace

std::size_t rank(const Matrix& M) {
  M.check_entries();
  std::vector<SparseVec> rows;
  rows.reserve(M.rows());
  for (std::size_t i = 0; i < M.rows(); ++i) rows.push_back(to_sparse(M.row(i)));
  return sparse_rank(M.field(), std::move(rows));
}

std::vector<Vec> kernel_basis(const Matrix& M) {
  M.check_entries();
  Matrix R = M;
  auto piv = rref(R);
  std::vector<bool> is_piv(M.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<Vec> ker;
  for (std::size_t f = 0; f < M.cols(); ++f) {
    if (is_piv[f]) continue;
    Vec v = zeros(M.field(), M.cols());
    v[f] = M.field().one();
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -R.at(r, f);
    ker.push_back(std::move(v));
  }
  return ker;
}

std::optional<Vec> solve(const Matrix& M, const Vec& b) {
  if (b.size() != M.rows()) throw InvalidInput("solve: dimension mismatch");
  M.check_entries();
  for (const auto& s : b)
    if (!M.field().contains(s)) throw InvalidInput("solve: right-hand side outside the field");
  Matrix A(M.field(), M.rows(), M.cols() + 1);
  for (std::size_t i = 0; i < M.rows(); ++i) {
    for (std::size_t j = 0; j < M.cols(); ++j) A.at(i, j) = M.at(i, j);
    A.at(i, M.cols()) = b[i];
  }
  auto piv = rref(A);
  if (!piv.empty() && piv.back() == M.cols()) return std::nullopt;
  Vec x = zeros(M.field(), M.cols());
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = A.at(r, M.cols());
  return x;
}

Vec EchelonBasis::reduce(const Vec& v) const {
  if (v.size() != n_) throw InvalidInput("EchelonBasis: length mismatch");
  Vec r = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = r[pivots_[i]];
    if (c.is_zero()) continue;
    for (const auto& [j, x] : sparse_[i]) r[j] -= c * x;
  }
  return r;
}

bool EchelonBasis::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool EchelonBasis::insert(const Vec& v) {
  Vec r = reduce(v);
  std::size_t p = 0;
  while (p < n_ && r[p].is_zero()) ++p;
  if (p == n_) return false;
  Scalar inv = r[p].inverse();
  for (auto& x : r)
    if (!x.is_zero()) x *= inv;
  SparseVec sr = to_sparse(r);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Scalar c = rows_[i][p];
    if (c.is_zero()) continue;
    for (const auto& [j, x] : sr) rows_[i][j] -= c * x;
    sparse_[i] = to_sparse(rows_[i]);
  }
  // keep rows sorted by pivot column
  std::size_t pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  rows_.insert(rows_.begin() + pos, std::move(r));
  sparse_.insert(sparse_.begin() + pos, std::move(sr));
  pivots_.insert(pivots_.begin() + pos, p);
  return true;
}

Vec EchelonBasis::coordinates_unchecked(const Vec& v) const {
  Vec c;
  c.reserve(rows_.size());
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

std::optional<Vec> EchelonBasis::coordinates(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  return coordinates_unchecked(v);
}

std::vector<std::size_t> EchelonBasis::free_columns() const {
  std::vector<bool> piv(n_, false);
  for (auto p : pivots_) piv[p] = true;
  std::vector<std::size_t> f;
  for (std::size_t j = 0; j < n_; ++j)
    if (!piv[j]) f.push_back(j);
  return f;
}

std::size_t sparse_rank(const Field& F, std::vector<SparseVec> rows) {
  std::map<std::uint32_t, SparseVec> pivots;
  SparseVec tmp;
  for (auto& row : rows) {
    SparseVec cur = std::move(row);
    while (!cur.empty()) {
      auto it = pivots.find(cur.front().first);
      if (it == pivots.end()) {
        Scalar inv = cur.front().second.inverse();
        for (auto& e : cur) e.second = e.second * inv;
        pivots.emplace(cur.front().first, std::move(cur));
        break;
      }
      const SparseVec& pr = it->second;
      Scalar f = cur.front().second;
      tmp.clear();
      std::size_t a = 0, b = 0;
      while (a < cur.size() || b < pr.size()) {
        if (b == pr.size() || (a < cur.size() && cur[a].first < pr[b].first)) {
          tmp.push_back(cur[a++]);
        } else if (a == cur.size() || pr[b].first < cur[a].first) {
          tmp.emplace_back(pr[b].first, -(f * pr[b].second));
          ++b;
        } else {
          Scalar s = cur[a].second - f * pr[b].second;
          if (!s.is_zero()) tmp.emplace_back(cur[a].first, s);
          ++a;
          ++b;
        }
      }
      std::swap(cur, tmp);
    }
  }
  (void)F;
  return pivots.size();
}

std::vector<Vec> intersect(const Field& F, std::size_t n, const std::vector<Vec>& U,
                           const std::vector<Vec>& W) {
  // x = sum a_i u_i = sum b_j w_j  <=>  [U | -W] (a;b) = 0
  std::vector<Vec> cols;
  for (const auto& u : U) cols.push_back(u);
  for (const auto& w : W) cols.push_back(scale(F.make(-1), w));
  if (cols.empty()) return {};
  Matrix M = Matrix::from_columns(F, n, cols);
  EchelonBasis out(F, n);
  for (const auto& k : kernel_basis(M)) {
    Vec x = zeros(F, n);
    for (std::size_t i = 0; i < U.size(); ++i) axpy(x, k[i], U[i]);
    out.insert(x);
  }
  return out.rows();
}

}  // namespace ospx
