#include "support/oracles.hpp"

#include <algorithm>

namespace gradalg::oracles {

std::vector<Vec> all_vectors(const Field& f, std::size_t n) {
  const std::uint32_t p = f.characteristic();
  std::vector<Vec> out;
  std::vector<std::uint32_t> digits(n, 0);
  while (true) {
    Vec v;
    for (auto d : digits) v.push_back(Scalar::from_int(f, d));
    out.push_back(v);
    std::size_t i = 0;
    while (i < n && ++digits[i] == p) digits[i++] = 0;
    if (i == n) break;
  }
  return out;
}

namespace {

// all k-subsets of {0..n-1} in lexicographic order
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    std::size_t i = k;
    bool advanced = false;
    while (i-- > 0) {
      if (c[i] + (k - i) < n) {
        ++c[i];
        for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return out;
}

}  // namespace

std::vector<Matrix> all_subspaces(const Field& f, std::size_t n) {
  const std::uint32_t p = f.characteristic();
  std::vector<Matrix> out;
  out.push_back(Matrix(f, 0, n));  // zero subspace
  // enumerate rref shapes: pivot column sets, then free entries
  for (std::size_t k = 1; k <= n; ++k) {
    for (const auto& pivots : combinations(n, k)) {
      // free positions: (row i, col c) with c > pivots[i], c not a pivot
      std::vector<std::pair<std::size_t, std::size_t>> free_pos;
      std::vector<bool> is_pivot(n, false);
      for (auto c : pivots) is_pivot[c] = true;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t c = pivots[i] + 1; c < n; ++c)
          if (!is_pivot[c]) free_pos.emplace_back(i, c);
      std::vector<std::uint32_t> digits(free_pos.size(), 0);
      while (true) {
        Matrix m(f, k, n);
        for (std::size_t i = 0; i < k; ++i) m.at(i, pivots[i]) = Scalar::one(f);
        for (std::size_t t = 0; t < free_pos.size(); ++t)
          m.at(free_pos[t].first, free_pos[t].second) = Scalar::from_int(f, digits[t]);
        out.push_back(m);
        std::size_t i = 0;
        while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
        if (i == digits.size()) break;
      }
    }
  }
  return out;
}

namespace {

bool ideal_is_nilpotent(const Algebra& a, const Matrix& basis) {
  return a.is_ideal(basis) && a.nilpotency_index(basis).has_value();
}

// candidate generators over Q: all {-2..2} coordinate vectors
std::vector<Vec> rational_grid(const Field& f, std::size_t n) {
  std::vector<Vec> out;
  std::vector<int> digits(n, -2);
  while (true) {
    Vec v;
    bool zero = true;
    for (int d : digits) {
      v.push_back(Scalar::from_int(f, d));
      zero = zero && d == 0;
    }
    if (!zero) out.push_back(v);
    std::size_t i = 0;
    while (i < n && ++digits[i] == 3) digits[i++] = -2;
    if (i == n) break;
  }
  return out;
}

Matrix rational_oracle(const Algebra& a) {
  const Field& f = a.field();
  Matrix total(f, 0, a.dim());
  while (true) {
    AlgebraQuotient q = a.quotient_by_ideal(total);
    if (q.alg.dim() == 0) break;
    Matrix found(f, 0, q.alg.dim());
    for (const Vec& x : rational_grid(f, q.alg.dim())) {
      if (subspace_contains(found, x)) continue;
      Matrix ideal = q.alg.ideal_closure(Matrix::from_rows(f, q.alg.dim(), {x}));
      if (q.alg.nilpotency_index(ideal).has_value())
        found = row_space_basis(Matrix::stack_rows(found, ideal));
    }
    if (found.rows() == 0) break;
    // lift the found generators back along the section and close up
    std::vector<Vec> lifted;
    for (std::size_t r = 0; r < total.rows(); ++r) lifted.push_back(total.row(r));
    for (std::size_t r = 0; r < found.rows(); ++r)
      lifted.push_back(q.section.apply(found.row(r)));
    total = a.ideal_closure(Matrix::from_rows(f, a.dim(), lifted));
  }
  return total;
}

}  // namespace

Matrix largest_nilpotent_ideal(const Algebra& a) {
  const Field& f = a.field();
  if (f.is_rationals()) return rational_oracle(a);
  Matrix sum(f, 0, a.dim());
  for (const Matrix& s : all_subspaces(f, a.dim())) {
    if (s.rows() == 0) continue;
    if (ideal_is_nilpotent(a, s)) sum = row_space_basis(Matrix::stack_rows(sum, s));
  }
  return sum;
}

}  // namespace gradalg::oracles
