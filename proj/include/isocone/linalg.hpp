// SPDX-License-Identifier: MIT
/**
 * @file linalg.hpp
 * @brief Dense exact linear algebra over F_p / F_{p^2}.
 *
 * Everything here targets the desk scale this project runs at (matrices up
 * to roughly 40x40), so the representation is a flat dense vector of field
 * elements with no attempt at sparsity or blocking.  Reduction is classical
 * Gauss-Jordan with a deterministic pivot rule (first nonzero entry in
 * column order), which makes rref() the canonical reduced row echelon form:
 * two matrices with the same row space reduce to the identical object.
 *
 * Kernel bases are derived from the RREF free columns in ascending column
 * order, so they are deterministic as well; downstream counting code relies
 * on this for reproducible output.
 */
#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "isocone/field.hpp"

namespace isocone {

/// Column/row vectors are plain element vectors over a single field.
using Vec = std::vector<FieldElement>;

/// Largest supported square size; guards against silent blowups.
inline constexpr int kMatrixDimCap = 40;

class Matrix {
 public:
  /// rows x cols zero matrix; throws std::invalid_argument beyond the cap.
  Matrix(const Field& f, int rows, int cols);
  static Matrix identity(const Field& f, int n);
  /// Build from integer literals (each reduced into the field).
  static Matrix from_rows(const Field& f, const std::vector<std::vector<long long>>& entries);
  /// Build from already-constructed rows (all in the same field).
  static Matrix from_vec_rows(const Field& f, const std::vector<Vec>& rows);

  [[nodiscard]] int rows() const { return rows_; }
  [[nodiscard]] int cols() const { return cols_; }
  [[nodiscard]] const Field& field() const { return field_; }

  [[nodiscard]] const FieldElement& at(int i, int j) const;
  void set(int i, int j, const FieldElement& v);

  [[nodiscard]] Matrix operator+(const Matrix& o) const;
  [[nodiscard]] Matrix operator-(const Matrix& o) const;
  [[nodiscard]] Matrix operator*(const Matrix& o) const;
  [[nodiscard]] Matrix operator-() const;
  [[nodiscard]] Matrix scaled(const FieldElement& c) const;
  [[nodiscard]] Matrix transpose() const;

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] Vec row_copy(int i) const;
  void set_row(int i, const Vec& v);
  [[nodiscard]] Matrix submatrix(int r0, int c0, int nrows, int ncols) const;
  /// Entry-wise lift of a degree-1 matrix into the quadratic extension.
  [[nodiscard]] Matrix lifted() const;

  [[nodiscard]] std::string str() const;

 private:
  Field field_;
  int rows_;
  int cols_;
  std::vector<FieldElement> data_;
};

/// A . v (v has cols() entries); named to avoid colliding with std::apply via ADL.
[[nodiscard]] Vec mat_vec(const Matrix& a, const Vec& v);
/// Plain coordinate dot product (no Gram matrix).
[[nodiscard]] FieldElement dot(const Vec& u, const Vec& v);
[[nodiscard]] Vec vec_add(const Vec& u, const Vec& v);
[[nodiscard]] Vec vec_sub(const Vec& u, const Vec& v);
[[nodiscard]] Vec vec_scaled(const Vec& u, const FieldElement& c);
[[nodiscard]] Vec zero_vec(const Field& f, int n);
[[nodiscard]] bool is_zero_vec(const Vec& v);
[[nodiscard]] Vec lift_vec(const Vec& v);

struct RrefResult {
  Matrix reduced;
  std::vector<int> pivot_cols;  ///< ascending
  int rank = 0;
};

/// Canonical reduced row echelon form (unique per row space).
[[nodiscard]] RrefResult rref(const Matrix& m);
[[nodiscard]] int rank(const Matrix& m);

/**
 * @brief Basis of the right kernel {v : M v = 0}, one basis vector per row.
 *
 * Rows correspond to the RREF free columns in ascending order, with the free
 * coordinate set to 1, so the result is deterministic.  A trivial kernel
 * yields a 0 x cols matrix.
 */
[[nodiscard]] Matrix kernel_basis(const Matrix& m);

struct SolveOutcome {
  bool consistent = false;
  Vec particular;     ///< empty when inconsistent
  Matrix homogeneous; ///< kernel basis rows; solution set = particular + span
};

/// Solve A x = b exactly; reports no-solution rather than throwing.
[[nodiscard]] SolveOutcome solve(const Matrix& a, const Vec& b);

/// Determinant (square input); Gaussian elimination with exact arithmetic.
[[nodiscard]] FieldElement det(const Matrix& m);
/// Inverse of a square matrix; std::domain_error when singular.
[[nodiscard]] Matrix inverse(const Matrix& m);

/// w_n: antidiagonal 1s — entry (i, n-1-i) = 1 (0-based).
[[nodiscard]] Matrix antidiag(const Field& f, int n);
/// w'_n: alternating antidiagonal — entry (i, n-1-i) = (-1)^i (0-based),
/// i.e. +1 in the top-right corner.
[[nodiscard]] Matrix antidiag_signed(const Field& f, int n);

}  // namespace isocone
