/**
 * @file matrix.cpp
 * @copyright Apache License 2.0
 */
#include "gradalg/matrix.hpp"

#include <sstream>

namespace gradalg {

Vec vec_zero(const Field& f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

Vec vec_unit(const Field& f, std::size_t n, std::size_t i) {
  Vec v = vec_zero(f, n);
  v[i] = Scalar::one(f);
  return v;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vec_add");
  Vec r = a;
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vec_sub");
  Vec r = a;
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vec_scale(const Scalar& c, const Vec& a) {
  Vec r = a;
  for (auto& x : r) x *= c;
  return r;
}

bool vec_is_zero(const Vec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

std::string vec_to_string(const Vec& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ", ";
    s += a[i].to_string();
  }
  return s + "]";
}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const Field& f, std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorKind::DimensionMismatch, "from_rows");
    m.set_row(i, rows[i]);
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_);
}

void Matrix::set_row(std::size_t r, const Vec& v) {
  for (std::size_t j = 0; j < cols_; ++j) {
    require_same_field(field_, v[j].field());
    e_[r * cols_ + j] = v[j];
  }
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same_field(field_, o.field_);
  if (cols_ != o.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same_field(field_, o.field_);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix sum");
  Matrix r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require_same_field(field_, o.field_);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix diff");
  Matrix r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix apply");
  Vec r = vec_zero(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r = *this;
  for (auto& x : r.e_) x *= c;
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

Matrix Matrix::stack_rows(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_);
  if (a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "stack_rows");
  Matrix r(a.field_, a.rows_ + b.rows_, a.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) r.set_row(i, a.row(i));
  for (std::size_t i = 0; i < b.rows_; ++i) r.set_row(a.rows_ + i, b.row(i));
  return r;
}

Matrix Matrix::concat_cols(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_);
  if (a.rows_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "concat_cols");
  Matrix r(a.field_, a.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
  }
  return r;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "\n" : "") << vec_to_string(row(i));
  }
  return os.str();
}

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    // deterministic pivot: first row at or below r with nonzero entry in c
    std::size_t pr = r;
    while (pr < a.rows() && a.at(pr, c).is_zero()) ++pr;
    if (pr == a.rows()) continue;
    if (pr != r) {
      Vec tmp = a.row(pr);
      a.set_row(pr, a.row(r));
      a.set_row(r, tmp);
    }
    Scalar inv = a.at(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      Scalar f = a.at(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return RrefResult{a, pivots};
}

Matrix kernel_basis(const Matrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rr.pivots) is_pivot[c] = true;
  std::vector<Vec> rows;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v = vec_zero(m.field(), m.cols());
    v[c] = Scalar::one(m.field());
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -rr.mat.at(i, c);
    rows.push_back(v);
  }
  Matrix k = Matrix::from_rows(m.field(), m.cols(), rows);
  return rref(k).mat.rows() ? row_space_basis(k) : k;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "solve: rhs size");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  RrefResult rr = rref(aug);
  for (std::size_t c : rr.pivots)
    if (c == m.cols()) return std::nullopt;  // inconsistent
  Vec x = vec_zero(m.field(), m.cols());
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) x[rr.pivots[i]] = rr.mat.at(i, m.cols());
  return x;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Matrix row_space_basis(const Matrix& m) {
  RrefResult rr = rref(m);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < rr.rank(); ++i) rows.push_back(rr.mat.row(i));
  return Matrix::from_rows(m.field(), m.cols(), rows);
}

SumIntersection subspace_sum_and_intersection(const Matrix& u, const Matrix& v) {
  require_same_field(u.field(), v.field());
  if (u.cols() != v.cols()) throw Error(ErrorKind::DimensionMismatch, "subspace ops");
  const std::size_t n = u.cols();
  // Zassenhaus block matrix [u | u; v | 0].
  Matrix big(u.field(), u.rows() + v.rows(), 2 * n);
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      big.at(i, j) = u.at(i, j);
      big.at(i, n + j) = u.at(i, j);
    }
  for (std::size_t i = 0; i < v.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) big.at(u.rows() + i, j) = v.at(i, j);
  RrefResult rr = rref(big);
  std::vector<Vec> sum_rows, int_rows;
  for (std::size_t i = 0; i < rr.rank(); ++i) {
    const Vec full = rr.mat.row(i);
    Vec left(full.begin(), full.begin() + n);
    Vec right(full.begin() + n, full.end());
    if (!vec_is_zero(left))
      sum_rows.push_back(left);
    else if (!vec_is_zero(right))
      int_rows.push_back(right);
  }
  Matrix s = row_space_basis(Matrix::from_rows(u.field(), n, sum_rows));
  Matrix x = row_space_basis(Matrix::from_rows(u.field(), n, int_rows));
  return SumIntersection{s, x};
}

bool subspace_contains(const Matrix& space, const Vec& v) {
  if (vec_is_zero(v)) return true;
  if (space.rows() == 0) return false;
  auto x = solve(space.transpose(), v);
  return x.has_value();
}

bool subspace_leq(const Matrix& a, const Matrix& b) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (!subspace_contains(b, a.row(i))) return false;
  return true;
}

bool subspace_eq(const Matrix& a, const Matrix& b) {
  return row_space_basis(a) == row_space_basis(b);
}

Vec coordinates_in_basis(const Matrix& basis, const Vec& v) {
  auto x = solve(basis.transpose(), v);
  if (!x) throw Error(ErrorKind::StructureError, "vector not in span of basis");
  return *x;
}

}  // namespace gradalg
