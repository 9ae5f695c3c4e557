#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ospx/errors.hpp"

namespace ospx {

// Element of Q (modulus 0) or of F_p. Small rationals stay in machine words
// and spill into GMP on overflow.
class Scalar {
 public:
  Scalar() = default;
  static Scalar rational(std::int64_t num, std::int64_t den = 1);
  static Scalar rational(const mpq_class& q);
  static Scalar residue(std::int64_t v, std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  Scalar inverse() const;

  mpq_class to_mpq() const;
  std::string str() const;

 private:
  std::uint64_t p_ = 0;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;

  void check_same(const Scalar& o) const;
  static Scalar from_mpq(const mpq_class& q);
};

class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);

  std::uint64_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }
  Scalar zero() const { return make(0); }
  Scalar one() const { return make(1); }
  Scalar make(std::int64_t v) const;
  Scalar make(std::int64_t num, std::int64_t den) const;
  // Accepts "a", "a/b" (decimal integers).
  Scalar parse(const std::string& s) const;
  bool contains(const Scalar& s) const { return s.modulus() == p_; }
  std::string name() const;
  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

using Vec = std::vector<Scalar>;
using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>;

Vec zeros(const Field& F, std::size_t n);
Vec unit_vector(const Field& F, std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
void axpy(Vec& y, const Scalar& a, const Vec& x);  // y += a x
void axpy(Vec& y, const Scalar& a, const SparseVec& x);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& s, const Vec& v);
SparseVec to_sparse(const Vec& v);
Vec to_dense(const Field& F, std::size_t n, const SparseVec& v);
std::string vec_str(const Vec& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& F, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& F, std::size_t n);
  static Matrix from_rows(const Field& F, std::size_t cols, const std::vector<Vec>& rows);
  static Matrix from_columns(const Field& F, std::size_t rows, const std::vector<Vec>& cols);

  const Field& field() const { return F_; }
  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Scalar& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  Vec apply(const Vec& x) const;
  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  // Throws InvalidInput when some entry lies outside field().
  void check_entries() const;

 private:
  Field F_;
  std::size_t r_ = 0, c_ = 0;
  std::vector<Scalar> a_;
};

std::size_t rank(const Matrix& M);
std::vector<Vec> kernel_basis(const Matrix& M);
std::optional<Vec> solve(const Matrix& M, const Vec& b);

// Incrementally maintained reduced row echelon basis of a subspace of F^n.
class EchelonBasis {
 public:
  EchelonBasis() = default;
  EchelonBasis(const Field& F, std::size_t n) : F_(F), n_(n) {}

  const Field& field() const { return F_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t size() const { return rows_.size(); }
  const Vec& row(std::size_t i) const { return rows_[i]; }
  const std::vector<Vec>& rows() const { return rows_; }
  std::size_t pivot(std::size_t i) const { return pivots_[i]; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Residual of v after subtracting its projection along pivot columns.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  // Returns true when v enlarged the span.
  bool insert(const Vec& v);
  // Coefficients on rows(); nullopt when v is not in the span.
  std::optional<Vec> coordinates(const Vec& v) const;
  // Coordinates read off pivots without a membership check.
  Vec coordinates_unchecked(const Vec& v) const;
  // Non-pivot columns in increasing order.
  std::vector<std::size_t> free_columns() const;

 private:
  Field F_;
  std::size_t n_ = 0;
  std::vector<Vec> rows_;
  std::vector<SparseVec> sparse_;
  std::vector<std::size_t> pivots_;
  std::vector<long> pivot_row_;  // column -> row or -1
};

// Rank of a sparse row set via semi-echelon elimination.
std::size_t sparse_rank(const Field& F, std::vector<SparseVec> rows);

// Basis of U ∩ W for subspaces given by spanning rows.
std::vector<Vec> intersect(const Field& F, std::size_t n, const std::vector<Vec>& U,
                           const std::vector<Vec>& W);

}  // namespace ospx
