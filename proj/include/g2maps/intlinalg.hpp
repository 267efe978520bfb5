#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2maps {

/// Dense row-major matrix over an exact ring (mpz_class or mpq_class).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  void set_column(std::size_t j, const std::vector<T>& c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMat = Matrix<mpz_class>;
using RatMat = Matrix<mpq_class>;
using RatVec = std::vector<mpq_class>;

RatMat to_rational(const IntMat& m);
/// Throws std::domain_error if some entry is not an integer.
IntMat to_integer(const RatMat& m);

mpz_class floor_div(const mpq_class& q);
mpz_class ceil_div(const mpq_class& q);
/// floor(sqrt(q)) for q >= 0.
mpz_class floor_sqrt(const mpq_class& q);

/// Column-style Hermite normal form: H = m*U with U unimodular, H lower
/// echelon with positive pivots and entries left of each pivot reduced into
/// [0, pivot). Zero columns are moved to the right.
IntMat hnf(const IntMat& m);

/// HNF of rational generators, with zero columns dropped.
RatMat lattice_basis(const RatMat& generators);

mpq_class det(const RatMat& m);
/// Throws std::domain_error on singular input.
RatMat inverse(const RatMat& m);
/// Coordinates of v in the column basis b (square, invertible).
RatVec solve(const RatMat& b, const RatVec& v);
bool in_lattice(const RatMat& basis, const RatVec& v);
/// True iff every column of sub lies in the lattice spanned by super.
bool contains(const RatMat& super, const RatMat& sub);

/// Basis of the intersection of two full-rank lattices in Q^n.
RatMat lattice_intersect(const RatMat& b1, const RatMat& b2);
/// [super : sub]; throws std::domain_error if sub is not contained in super.
mpz_class lattice_index(const RatMat& sub, const RatMat& super);

/// Canonical form of a full-rank lattice basis (HNF), for equality tests.
RatMat canonical_basis(const RatMat& basis);

struct ShortVector {
  std::vector<long> coords;
  mpq_class value;
};

/// All nonzero v in Z^n with v^T G v <= bound, for positive definite rational
/// G. Exact Fincke-Pohst: the per-level ranges are computed with rational
/// floor/ceil and candidates are re-checked exactly.
std::vector<ShortVector> short_vectors(const RatMat& gram, const mpq_class& bound);

/// Throws std::domain_error if gram is not positive definite.
void check_positive_definite(const RatMat& gram);

/// LLL (delta = 3/4) on a positive definite Gram matrix. Returns a unimodular
/// V whose columns are the reduced basis, so V^T G V is reduced.
IntMat lll_reduce(const RatMat& gram);

mpq_class quadratic_value(const RatMat& gram, const std::vector<long>& v);

std::string to_string(const mpq_class& q);

}  // namespace g2maps
