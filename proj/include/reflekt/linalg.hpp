#pragma once

// Dense exact linear algebra over Scalar with tensor-leg structure.
//
// A Matrix optionally carries legdims: an ordered list of tensor-factor
// dimensions whose product equals the row count.  Partial transpose and
// partial trace, and the leg permutations behind "21" subscripts, consume
// this metadata.  Legs are indexed from 0.

#include <vector>

#include "reflekt/scalar.hpp"

namespace reflekt {

class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols);

  static Matrix identity(int n);
  static Matrix diagonal(const std::vector<Scalar>& d);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Scalar& at(int i, int j) const { return data_[i * cols_ + j]; }
  Scalar& at(int i, int j) { return data_[i * cols_ + j]; }

  const std::vector<int>& legs() const { return legs_; }
  Matrix with_legs(std::vector<int> legs) const;

  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& c) const;

  Matrix transpose() const;
  Scalar trace() const;
  Matrix substitute(const std::map<int, Scalar>& bindings) const;
  Matrix derivative(int var) const;

  std::size_t term_count() const;

 private:
  int rows_, cols_;
  std::vector<Scalar> data_;  // row-major
  std::vector<int> legs_;     // empty = undeclared
};

Matrix kron(const Matrix& a, const Matrix& b);

// Leg-indexed operations; throw LegMismatch when legdims are absent or the
// leg is out of range.
Matrix partial_transpose(const Matrix& m, int leg);
Matrix partial_trace(const Matrix& m, int leg);

// Permutation operator on the tensor space with the given legdims sending
// leg i of the source to position perm[i] of the target.
Matrix leg_permutation(const std::vector<int>& legs,
                       const std::vector<int>& perm);

// Embed an operator acting on the chosen legs (in the operator's own leg
// order) into the identity on the full space described by legs.
Matrix embed(const Matrix& op, const std::vector<int>& legs,
             const std::vector<int>& targets);

// Gauss elimination backend: fraction-free Bareiss forward pass with final
// division, pivot = leftmost nonzero column entry of smallest term count.
Matrix inverse(const Matrix& m);                 // throws Singular
std::vector<Matrix> nullspace(const Matrix& m);  // right-kernel basis

}  // namespace reflekt
