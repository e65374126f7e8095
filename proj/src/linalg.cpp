// SPDX-License-Identifier: MIT
#include "isocone/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace isocone {

namespace {

void require_shape(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// Validates before any allocation happens in the constructor's init list.
size_t checked_extent(int rows, int cols) {
  require_shape(rows >= 0 && cols >= 0, "matrix dimensions must be non-negative");
  require_shape(rows <= kMatrixDimCap && cols <= kMatrixDimCap, "matrix dimension cap exceeded");
  return static_cast<size_t>(rows) * static_cast<size_t>(cols);
}

}  // namespace

Matrix::Matrix(const Field& f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols), data_(checked_extent(rows, cols), f.zero()) {}

Matrix Matrix::identity(const Field& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, f.one());
  return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<std::vector<long long>>& entries) {
  const int r = static_cast<int>(entries.size());
  const int c = r == 0 ? 0 : static_cast<int>(entries.front().size());
  Matrix m(f, r, c);
  for (int i = 0; i < r; ++i) {
    require_shape(static_cast<int>(entries[static_cast<size_t>(i)].size()) == c,
                  "ragged rows in matrix literal");
    for (int j = 0; j < c; ++j) {
      m.set(i, j, f.from_int(entries[static_cast<size_t>(i)][static_cast<size_t>(j)]));
    }
  }
  return m;
}

Matrix Matrix::from_vec_rows(const Field& f, const std::vector<Vec>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  Matrix m(f, r, c);
  for (int i = 0; i < r; ++i) m.set_row(i, rows[static_cast<size_t>(i)]);
  return m;
}

const FieldElement& Matrix::at(int i, int j) const {
  require_shape(i >= 0 && i < rows_ && j >= 0 && j < cols_, "matrix index out of range");
  return data_[static_cast<size_t>(i) * cols_ + j];
}

void Matrix::set(int i, int j, const FieldElement& v) {
  require_shape(i >= 0 && i < rows_ && j >= 0 && j < cols_, "matrix index out of range");
  require_shape(v.field() == field_, "entry from a different field");
  data_[static_cast<size_t>(i) * cols_ + j] = v;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_shape(rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_,
                "shape/field mismatch in matrix addition");
  Matrix r(field_, rows_, cols_);
  for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const {
  Matrix r(field_, rows_, cols_);
  for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = -data_[k];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_shape(cols_ == o.rows_ && field_ == o.field_, "shape/field mismatch in matrix product");
  Matrix r(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const FieldElement& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        r.set(i, j, r.at(i, j) + aik * o.at(k, j));
      }
    }
  }
  return r;
}

Matrix Matrix::scaled(const FieldElement& c) const {
  Matrix r(field_, rows_, cols_);
  for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] * c;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  }
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool Matrix::is_zero() const {
  for (const auto& e : data_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

Vec Matrix::row_copy(int i) const {
  require_shape(i >= 0 && i < rows_, "row index out of range");
  Vec v;
  v.reserve(static_cast<size_t>(cols_));
  for (int j = 0; j < cols_; ++j) v.push_back(at(i, j));
  return v;
}

void Matrix::set_row(int i, const Vec& v) {
  require_shape(static_cast<int>(v.size()) == cols_, "row length mismatch");
  for (int j = 0; j < cols_; ++j) set(i, j, v[static_cast<size_t>(j)]);
}

Matrix Matrix::submatrix(int r0, int c0, int nrows, int ncols) const {
  require_shape(r0 >= 0 && c0 >= 0 && nrows >= 0 && ncols >= 0 && r0 + nrows <= rows_ &&
                    c0 + ncols <= cols_,
                "submatrix out of range");
  Matrix r(field_, nrows, ncols);
  for (int i = 0; i < nrows; ++i) {
    for (int j = 0; j < ncols; ++j) r.set(i, j, at(r0 + i, c0 + j));
  }
  return r;
}

Matrix Matrix::lifted() const {
  Matrix r(field_.extension(), rows_, cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j).lift());
  }
  return r;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).str();
    os << "]";
  }
  os << "]";
  return os.str();
}

Vec mat_vec(const Matrix& a, const Vec& v) {
  require_shape(static_cast<int>(v.size()) == a.cols(), "vector length mismatch in mat_vec");
  Vec r = zero_vec(a.field(), a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      r[static_cast<size_t>(i)] = r[static_cast<size_t>(i)] + a.at(i, j) * v[static_cast<size_t>(j)];
    }
  }
  return r;
}

FieldElement dot(const Vec& u, const Vec& v) {
  require_shape(u.size() == v.size() && !u.empty(), "vector length mismatch in dot");
  FieldElement acc = u.front().field().zero();
  for (size_t k = 0; k < u.size(); ++k) acc = acc + u[k] * v[k];
  return acc;
}

Vec vec_add(const Vec& u, const Vec& v) {
  require_shape(u.size() == v.size(), "vector length mismatch");
  Vec r = u;
  for (size_t k = 0; k < u.size(); ++k) r[k] = u[k] + v[k];
  return r;
}

Vec vec_sub(const Vec& u, const Vec& v) {
  require_shape(u.size() == v.size(), "vector length mismatch");
  Vec r = u;
  for (size_t k = 0; k < u.size(); ++k) r[k] = u[k] - v[k];
  return r;
}

Vec vec_scaled(const Vec& u, const FieldElement& c) {
  Vec r = u;
  for (auto& e : r) e = e * c;
  return r;
}

Vec zero_vec(const Field& f, int n) { return Vec(static_cast<size_t>(n), f.zero()); }

bool is_zero_vec(const Vec& v) {
  for (const auto& e : v) {
    if (!e.is_zero()) return false;
  }
  return true;
}

Vec lift_vec(const Vec& v) {
  Vec r;
  r.reserve(v.size());
  for (const auto& e : v) r.push_back(e.lift());
  return r;
}

namespace {

// Shared Gauss-Jordan: reduces `m` in place to canonical RREF and applies the
// same row operations to `rhs` (which may have zero columns).  The pivot in
// each column is the first nonzero entry scanning rows top-down, which fixes
// the elimination order and hence the (already unique) RREF representative.
RrefResult rref_with_rhs(Matrix m, Matrix* rhs) {
  const int nr = m.rows();
  const int nc = m.cols();
  std::vector<int> pivots;
  int cur = 0;
  for (int col = 0; col < nc && cur < nr; ++col) {
    int piv = -1;
    for (int r = cur; r < nr; ++r) {
      if (!m.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    // Swap rows piv <-> cur.
    if (piv != cur) {
      Vec tmp = m.row_copy(cur);
      m.set_row(cur, m.row_copy(piv));
      m.set_row(piv, tmp);
      if (rhs) {
        Vec t2 = rhs->row_copy(cur);
        rhs->set_row(cur, rhs->row_copy(piv));
        rhs->set_row(piv, t2);
      }
    }
    // Scale the pivot row to 1.
    FieldElement inv = m.at(cur, col).inverse();
    m.set_row(cur, vec_scaled(m.row_copy(cur), inv));
    if (rhs) rhs->set_row(cur, vec_scaled(rhs->row_copy(cur), inv));
    // Eliminate the column everywhere else.
    for (int r = 0; r < nr; ++r) {
      if (r == cur) continue;
      FieldElement factor = m.at(r, col);
      if (factor.is_zero()) continue;
      m.set_row(r, vec_sub(m.row_copy(r), vec_scaled(m.row_copy(cur), factor)));
      if (rhs) rhs->set_row(r, vec_sub(rhs->row_copy(r), vec_scaled(rhs->row_copy(cur), factor)));
    }
    pivots.push_back(col);
    ++cur;
  }
  return RrefResult{std::move(m), std::move(pivots), cur};
}

}  // namespace

RrefResult rref(const Matrix& m) { return rref_with_rhs(m, nullptr); }

int rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
  RrefResult r = rref(m);
  const Field& f = m.field();
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
  for (int c : r.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    Vec v = zero_vec(f, m.cols());
    v[static_cast<size_t>(free)] = f.one();
    for (int i = 0; i < r.rank; ++i) {
      v[static_cast<size_t>(r.pivot_cols[static_cast<size_t>(i)])] = -r.reduced.at(i, free);
    }
    basis.push_back(std::move(v));
  }
  Matrix out(f, static_cast<int>(basis.size()), m.cols());
  for (size_t i = 0; i < basis.size(); ++i) out.set_row(static_cast<int>(i), basis[i]);
  return out;
}

SolveOutcome solve(const Matrix& a, const Vec& b) {
  require_shape(static_cast<int>(b.size()) == a.rows(), "rhs length mismatch in solve");
  Matrix rhs(a.field(), a.rows(), 1);
  for (int i = 0; i < a.rows(); ++i) rhs.set(i, 0, b[static_cast<size_t>(i)]);
  RrefResult r = rref_with_rhs(a, &rhs);
  // Inconsistency: a zero row of A paired with a nonzero rhs entry.
  for (int i = r.rank; i < a.rows(); ++i) {
    if (!rhs.at(i, 0).is_zero()) return SolveOutcome{false, {}, Matrix(a.field(), 0, a.cols())};
  }
  Vec x = zero_vec(a.field(), a.cols());
  for (int i = 0; i < r.rank; ++i) {
    x[static_cast<size_t>(r.pivot_cols[static_cast<size_t>(i)])] = rhs.at(i, 0);
  }
  return SolveOutcome{true, std::move(x), kernel_basis(a)};
}

FieldElement det(const Matrix& m) {
  require_shape(m.rows() == m.cols(), "determinant requires a square matrix");
  const Field& f = m.field();
  Matrix a = m;
  FieldElement d = f.one();
  const int n = a.rows();
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return f.zero();
    if (piv != col) {
      Vec tmp = a.row_copy(col);
      a.set_row(col, a.row_copy(piv));
      a.set_row(piv, tmp);
      d = -d;
    }
    d = d * a.at(col, col);
    FieldElement inv = a.at(col, col).inverse();
    a.set_row(col, vec_scaled(a.row_copy(col), inv));
    for (int r = col + 1; r < n; ++r) {
      FieldElement factor = a.at(r, col);
      if (factor.is_zero()) continue;
      a.set_row(r, vec_sub(a.row_copy(r), vec_scaled(a.row_copy(col), factor)));
    }
  }
  return d;
}

Matrix inverse(const Matrix& m) {
  require_shape(m.rows() == m.cols(), "inverse requires a square matrix");
  Matrix id = Matrix::identity(m.field(), m.rows());
  RrefResult r = rref_with_rhs(m, &id);
  if (r.rank != m.rows()) throw std::domain_error("matrix is singular");
  return id;
}

Matrix antidiag(const Field& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.set(i, n - 1 - i, f.one());
  return m;
}

Matrix antidiag_signed(const Field& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.set(i, n - 1 - i, i % 2 == 0 ? f.one() : -f.one());
  return m;
}

}  // namespace isocone
