#pragma once

#include <optional>
#include <vector>

#include "qsplit/scalar.hpp"

namespace qsplit {

// Dense exact rational matrix. Row vectors act on the left throughout the
// library: x ↦ x·A, so composites multiply left-to-right.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const {
    return data_[static_cast<size_t>(r) * cols_ + c];
  }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  Matrix transpose() const;

  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  // In-place reduced row echelon form; returns pivot column per pivot row.
  std::vector<int> rref();
  int rank() const;
  Scalar det() const;  // square only
  bool invertible() const;

  std::vector<Scalar> row(int r) const;
  void set_row(int r, const std::vector<Scalar>& v);

  std::string str() const;  // debug aid

 private:
  int rows_, cols_;
  std::vector<Scalar> data_;
};

// Basis rows of { x : x·A = 0 } in canonical (RREF-derived) form.
Matrix left_nullspace(const Matrix& a);

// First solution of x·A = b with free variables set to zero, if consistent.
std::optional<std::vector<Scalar>> solve_left(const Matrix& a,
                                              const std::vector<Scalar>& b);

std::vector<Scalar> mul_row(const std::vector<Scalar>& x, const Matrix& a);

// A subspace of Q^n kept as RREF rows; supports canonical reduction and
// membership tests. Deterministic: depends only on the generator order fed in.
class Subspace {
 public:
  explicit Subspace(int ambient) : ambient_(ambient) {}

  // Returns true if the vector enlarged the subspace.
  bool add(std::vector<Scalar> v);

  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient() const { return ambient_; }

  // Canonical residue of v modulo the subspace.
  std::vector<Scalar> reduce(std::vector<Scalar> v) const;
  bool contains(const std::vector<Scalar>& v) const;

  const std::vector<std::vector<Scalar>>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

 private:
  int ambient_;
  std::vector<std::vector<Scalar>> rows_;  // RREF, pivot columns ascending
  std::vector<int> pivots_;
};

}  // namespace qsplit
