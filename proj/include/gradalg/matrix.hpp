/**
 * @file gradalg/matrix.hpp
 * @copyright Apache License 2.0
 *
 * Dense exact matrices over Q or F_p and the row-reduction kernel the whole
 * library runs on.  Pivoting is deterministic: leftmost nonzero column,
 * first nonzero row, so every basis the library emits is reproducible.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gradalg/scalar.hpp"

namespace gradalg {

using Vec = std::vector<Scalar>;

Vec vec_zero(const Field& f, std::size_t n);
Vec vec_unit(const Field& f, std::size_t n, std::size_t i);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& a);
bool vec_is_zero(const Vec& a);
std::string vec_to_string(const Vec& a);

class Matrix {
 public:
  Matrix() : Matrix(Field::rationals(), 0, 0) {}  // empty placeholder
  Matrix(const Field& f, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_rows(const Field& f, std::size_t cols, const std::vector<Vec>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  void set_row(std::size_t r, const Vec& v);

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Vec apply(const Vec& v) const;  // matrix * column vector
  Matrix transpose() const;
  Matrix scaled(const Scalar& c) const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  /// Rows of `a` followed by rows of `b` (same column count).
  static Matrix stack_rows(const Matrix& a, const Matrix& b);
  /// [a | b] with the same row count.
  static Matrix concat_cols(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> e_;
};

struct RrefResult {
  Matrix mat;
  std::vector<std::size_t> pivots;  // strictly increasing pivot columns
  std::size_t rank() const { return pivots.size(); }
};

RrefResult rref(const Matrix& m);

/// Rows form the canonical (reduced) basis of {v : m v = 0}.
Matrix kernel_basis(const Matrix& m);

/// Some x with m x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

std::size_t rank(const Matrix& m);

/// Nonzero rref rows: canonical basis of the row space.
Matrix row_space_basis(const Matrix& m);

struct SumIntersection {
  Matrix sum;
  Matrix intersection;
};

/// Zassenhaus: canonical bases of span(u)+span(v) and span(u)∩span(v).
SumIntersection subspace_sum_and_intersection(const Matrix& u, const Matrix& v);

/// v ∈ row space of `space`?
bool subspace_contains(const Matrix& space, const Vec& v);
/// row space of `a` ⊆ row space of `b`?
bool subspace_leq(const Matrix& a, const Matrix& b);
bool subspace_eq(const Matrix& a, const Matrix& b);

/// Coordinates of v in the rows of `basis` (requires v ∈ row space).
Vec coordinates_in_basis(const Matrix& basis, const Vec& v);

}  // namespace gradalg
