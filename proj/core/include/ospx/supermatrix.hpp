#pragma once

#include <optional>

#include "ospx/superalg.hpp"

namespace ospx {

struct MatrixShape {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t size() const { return m + 2 * n; }
  // |i| for 1-based i
  int index_parity(std::size_t i) const { return i > m ? 1 : 0; }
  bool operator==(const MatrixShape& o) const { return m == o.m && n == o.n; }
};

void check_shape(const MatrixShape& s);

// (m+2n) x (m+2n) matrix over R stored as a flat coordinate vector; coordinate
// ((i*N + j)*d + k) is the b_k-component of entry (i,j), with 0-based i,j.
class SuperMatrix {
 public:
  SuperMatrix(MatrixShape shape, AlgebraPtr R);
  static SuperMatrix unflatten(MatrixShape shape, AlgebraPtr R, const Vec& v);

  const MatrixShape& shape() const { return shape_; }
  const AlgebraPtr& algebra() const { return R_; }
  const Vec& flatten() const { return v_; }
  Vec entry(std::size_t i, std::size_t j) const;  // 1-based
  void add_entry(std::size_t i, std::size_t j, const Vec& a);  // 1-based

  // Degree d component: entries restricted to coordinates with |i|+|j|+|b_k| = d.
  SuperMatrix part(int d) const;
  std::optional<int> degree() const;
  bool is_zero() const { return ospx::is_zero(v_); }

  SuperMatrix operator+(const SuperMatrix& o) const;
  SuperMatrix operator-(const SuperMatrix& o) const;
  SuperMatrix scaled(const Scalar& s) const;
  SuperMatrix operator*(const SuperMatrix& o) const;
  bool operator==(const SuperMatrix& o) const { return shape_ == o.shape_ && v_ == o.v_; }
  std::string str() const;

 private:
  MatrixShape shape_;
  AlgebraPtr R_;
  Vec v_;
  void check_compatible(const SuperMatrix& o) const;
};

SuperMatrix matrix_unit(const MatrixShape& shape, const AlgebraPtr& R, std::size_t i, std::size_t j,
                        const Vec& a);
SuperMatrix osp_involution(const SuperMatrix& X);
SuperMatrix supercommutator(const SuperMatrix& X, const SuperMatrix& Y);
// Entrywise rho.
SuperMatrix rho(const SuperMatrix& X);

// Flat-coordinate helpers shared by the Lie ambient.
int coordinate_parity(const MatrixShape& s, const SuperAlgebra& R, std::size_t flat);
Vec flat_product(const MatrixShape& s, const SuperAlgebra& R, const Vec& x, const Vec& y);
Vec flat_supercommutator(const MatrixShape& s, const SuperAlgebra& R, const Vec& x, const Vec& y);

}  // namespace ospx
