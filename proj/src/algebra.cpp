/**
 * @file algebra.cpp
 * @copyright Apache License 2.0
 */
#include "gradalg/algebra.hpp"

#include <sstream>

#include "gradalg/util.hpp"

namespace gradalg {

Algebra::Algebra(const Field& f, std::size_t dim, std::vector<std::string> labels)
    : field_(f), dim_(dim), unit_(vec_zero(f, dim)), labels_(std::move(labels)) {
  mult_.assign(dim, std::vector<Vec>(dim, vec_zero(f, dim)));
  if (labels_.empty()) {
    for (std::size_t i = 0; i < dim; ++i) labels_.push_back("b" + std::to_string(i));
  }
  if (labels_.size() != dim) throw Error(ErrorKind::StructureError, "label count");
}

void Algebra::set_product(std::size_t i, std::size_t j, const Vec& coords) {
  if (i >= dim_ || j >= dim_ || coords.size() != dim_)
    throw Error(ErrorKind::DimensionMismatch, "set_product");
  mult_[i][j] = coords;
}

void Algebra::set_unit(const Vec& coords) {
  if (coords.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "set_unit");
  unit_ = coords;
}

Vec Algebra::multiply(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "multiply");
  Vec r = vec_zero(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar c = x[i] * y[j];
      const Vec& p = mult_[i][j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (!p[k].is_zero()) r[k] += c * p[k];
    }
  }
  return r;
}

Matrix Algebra::left_mult(const Vec& x) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec col = multiply(x, vec_unit(field_, dim_, j));
    for (std::size_t i = 0; i < dim_; ++i) m.at(i, j) = col[i];
  }
  return m;
}

Matrix Algebra::right_mult(const Vec& x) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec col = multiply(vec_unit(field_, dim_, j), x);
    for (std::size_t i = 0; i < dim_; ++i) m.at(i, j) = col[i];
  }
  return m;
}

bool Algebra::is_idempotent(const Vec& x) const { return multiply(x, x) == x; }

void Algebra::validate() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    Vec bi = vec_unit(field_, dim_, i);
    if (multiply(unit_, bi) != bi || multiply(bi, unit_) != bi)
      throw Error(ErrorKind::NotUnital, "unit fails on basis element " + labels_[i]);
  }
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        Vec left = multiply(mult_[i][j], vec_unit(field_, dim_, k));
        Vec right = multiply(vec_unit(field_, dim_, i), mult_[j][k]);
        if (left != right)
          throw Error(ErrorKind::StructureError,
                      "associativity fails on (" + labels_[i] + ", " + labels_[j] + ", " +
                          labels_[k] + ")");
      }
}

Matrix Algebra::center() const {
  // z b_k = b_k z for all k: rows of the constraint matrix indexed by (k, coord)
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < dim_; ++k) {
    Matrix diff = left_mult(vec_unit(field_, dim_, k)) - right_mult(vec_unit(field_, dim_, k));
    // We need diff^T z = ... careful: z is unknown vector; constraint (b_k z - z b_k) = 0
    // z b_k as function of z: right_mult(b_k) * z ; b_k z: left_mult(b_k) * z
    for (std::size_t r = 0; r < dim_; ++r) rows.push_back(diff.row(r));
  }
  Matrix sys = Matrix::from_rows(field_, dim_, rows);
  return kernel_basis(sys);
}

Poly Algebra::minimal_polynomial(const Vec& x) const {
  // powers x^0, x^1, ... until linear dependence; solve for the monic relation
  std::vector<Vec> powers{unit_};
  Vec cur = unit_;
  while (true) {
    cur = multiply(cur, x);
    Matrix basis = Matrix::from_rows(field_, dim_, powers);
    if (subspace_contains(row_space_basis(basis), cur)) {
      // cur = sum c_i powers[i]
      Matrix stacked = Matrix::from_rows(field_, dim_, powers);
      Vec coords = coordinates_in_basis(stacked, cur);
      Vec poly_coeffs(powers.size() + 1, Scalar::zero(field_));
      for (std::size_t i = 0; i < powers.size(); ++i) poly_coeffs[i] = -coords[i];
      poly_coeffs[powers.size()] = Scalar::one(field_);
      return Poly(field_, poly_coeffs);
    }
    powers.push_back(cur);
    if (powers.size() > dim_ + 1)
      throw Error(ErrorKind::StructureError, "minimal polynomial did not terminate");
  }
}

Matrix Algebra::product_space(const Matrix& u, const Matrix& v) const {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < v.rows(); ++j) rows.push_back(multiply(u.row(i), v.row(j)));
  return row_space_basis(Matrix::from_rows(field_, dim_, rows));
}

Matrix Algebra::ideal_closure(const Matrix& seed) const {
  Matrix cur = row_space_basis(seed);
  while (true) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < cur.rows(); ++i) {
      rows.push_back(cur.row(i));
      for (std::size_t k = 0; k < dim_; ++k) {
        rows.push_back(multiply(vec_unit(field_, dim_, k), cur.row(i)));
        rows.push_back(multiply(cur.row(i), vec_unit(field_, dim_, k)));
      }
    }
    Matrix next = row_space_basis(Matrix::from_rows(field_, dim_, rows));
    if (next.rows() == cur.rows()) return next;
    cur = next;
  }
}

bool Algebra::is_ideal(const Matrix& basis) const {
  for (std::size_t i = 0; i < basis.rows(); ++i)
    for (std::size_t k = 0; k < dim_; ++k) {
      if (!subspace_contains(basis, multiply(vec_unit(field_, dim_, k), basis.row(i)))) return false;
      if (!subspace_contains(basis, multiply(basis.row(i), vec_unit(field_, dim_, k)))) return false;
    }
  return true;
}

std::optional<std::size_t> Algebra::nilpotency_index(const Matrix& ideal_basis) const {
  Matrix power = row_space_basis(ideal_basis);
  std::size_t m = 1;
  while (power.rows() > 0) {
    Matrix next = product_space(power, ideal_basis);
    if (next.rows() >= power.rows()) return std::nullopt;  // stabilized nonzero
    power = next;
    ++m;
  }
  return m;
}

AlgebraQuotient Algebra::quotient_by_ideal(const Matrix& ideal_basis) const {
  Matrix ideal = row_space_basis(ideal_basis);
  RrefResult rr = rref(ideal);
  std::vector<bool> is_pivot(dim_, false);
  for (std::size_t c : rr.pivots) is_pivot[c] = true;
  std::vector<std::size_t> comp_cols;
  for (std::size_t c = 0; c < dim_; ++c)
    if (!is_pivot[c]) comp_cols.push_back(c);
  const std::size_t qdim = comp_cols.size();

  // projection: reduce mod ideal, keep complement coordinates
  Matrix proj(field_, qdim, dim_);
  for (std::size_t c = 0; c < dim_; ++c) {
    Vec x = vec_unit(field_, dim_, c);
    // subtract pivot-row multiples to clear pivot coordinates
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
      Scalar f = x[rr.pivots[i]];
      if (!f.is_zero()) x = vec_sub(x, vec_scale(f, rr.mat.row(i)));
    }
    for (std::size_t q = 0; q < qdim; ++q) proj.at(q, c) = x[comp_cols[q]];
  }
  Matrix section(field_, dim_, qdim);
  for (std::size_t q = 0; q < qdim; ++q) section.at(comp_cols[q], q) = Scalar::one(field_);

  std::vector<std::string> qlabels;
  for (std::size_t q = 0; q < qdim; ++q) qlabels.push_back(labels_[comp_cols[q]] + "~");
  Algebra quot(field_, qdim, qlabels);
  for (std::size_t i = 0; i < qdim; ++i)
    for (std::size_t j = 0; j < qdim; ++j) {
      Vec prod = multiply(vec_unit(field_, dim_, comp_cols[i]), vec_unit(field_, dim_, comp_cols[j]));
      quot.set_product(i, j, proj.apply(prod));
    }
  quot.set_unit(proj.apply(unit_));
  return AlgebraQuotient{quot, proj, section};
}

AlgebraCorner Algebra::corner(const Vec& e) const {
  if (!is_idempotent(e)) throw Error(ErrorKind::IdempotentError, "corner of a non-idempotent");
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < dim_; ++k)
    rows.push_back(multiply(multiply(e, vec_unit(field_, dim_, k)), e));
  Matrix basis = row_space_basis(Matrix::from_rows(field_, dim_, rows));
  const std::size_t cdim = basis.rows();
  Algebra sub(field_, cdim);
  for (std::size_t i = 0; i < cdim; ++i)
    for (std::size_t j = 0; j < cdim; ++j)
      sub.set_product(i, j, coordinates_in_basis(basis, multiply(basis.row(i), basis.row(j))));
  sub.set_unit(coordinates_in_basis(basis, e));
  return AlgebraCorner{sub, basis};
}

std::uint64_t Algebra::canonical_hash() const {
  std::ostringstream os;
  os << field_.to_string() << ";" << dim_ << ";" << vec_to_string(unit_) << ";";
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) os << vec_to_string(mult_[i][j]) << ";";
  return fnv1a(os.str());
}

Algebra algebra_from_endomorphisms(const Field& f, const std::vector<Matrix>& basis,
                                   std::vector<std::string> labels) {
  if (basis.empty()) throw Error(ErrorKind::StructureError, "empty endomorphism basis");
  const std::size_t n = basis[0].rows();
  auto flatten = [&](const Matrix& m) {
    Vec v;
    v.reserve(n * n);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
  };
  std::vector<Vec> flat;
  for (const auto& m : basis) {
    if (m.rows() != n || m.cols() != n) throw Error(ErrorKind::DimensionMismatch, "endo basis");
    flat.push_back(flatten(m));
  }
  Matrix flat_basis = Matrix::from_rows(f, n * n, flat);
  if (rank(flat_basis) != basis.size())
    throw Error(ErrorKind::StructureError, "endomorphism basis is linearly dependent");

  Algebra a(f, basis.size(), std::move(labels));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      Matrix composed = basis[j] * basis[i];  // x.y = "x first": y o x
      a.set_product(i, j, coordinates_in_basis(flat_basis, flatten(composed)));
    }
  a.set_unit(coordinates_in_basis(flat_basis, flatten(Matrix::identity(f, n))));
  return a;
}

AlgebraModule::AlgebraModule(std::shared_ptr<const Algebra> alg, std::size_t dim)
    : alg_(std::move(alg)), dim_(dim) {
  action_.assign(alg_->dim(), Matrix(alg_->field(), dim, dim));
}

AlgebraModule AlgebraModule::regular(std::shared_ptr<const Algebra> alg) {
  AlgebraModule m(alg, alg->dim());
  for (std::size_t k = 0; k < alg->dim(); ++k)
    m.set_action(k, alg->left_mult(vec_unit(alg->field(), alg->dim(), k)));
  return m;
}

void AlgebraModule::set_action(std::size_t basis_index, const Matrix& m) {
  if (m.rows() != dim_ || m.cols() != dim_) throw Error(ErrorKind::DimensionMismatch, "set_action");
  action_[basis_index] = m;
}

Matrix AlgebraModule::act(const Vec& a) const {
  Matrix m(alg_->field(), dim_, dim_);
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!a[k].is_zero()) m = m + action_[k].scaled(a[k]);
  return m;
}

Vec AlgebraModule::act_vec(const Vec& a, const Vec& m) const { return act(a).apply(m); }

void AlgebraModule::validate() const {
  const Field& f = alg_->field();
  if (!(act(alg_->unit()) == Matrix::identity(f, dim_)))
    throw Error(ErrorKind::NotUnital, "unit does not act as identity");
  for (std::size_t i = 0; i < alg_->dim(); ++i)
    for (std::size_t j = 0; j < alg_->dim(); ++j) {
      Matrix lhs = act(alg_->product(i, j));
      Matrix rhs = action_[i] * action_[j];
      if (!(lhs == rhs))
        throw Error(ErrorKind::StructureError,
                    "module associativity fails on basis pair (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
    }
}

Matrix AlgebraModule::submodule_closure(const Matrix& seed) const {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < seed.rows(); ++i)
    for (std::size_t k = 0; k < alg_->dim(); ++k)
      rows.push_back(action_[k].apply(seed.row(i)));
  // A is unital, so span{ b_k . v } already contains v and is action-closed.
  return row_space_basis(Matrix::from_rows(alg_->field(), dim_, rows));
}

bool AlgebraModule::is_submodule(const Matrix& basis) const {
  for (std::size_t i = 0; i < basis.rows(); ++i)
    for (std::size_t k = 0; k < alg_->dim(); ++k)
      if (!subspace_contains(basis, action_[k].apply(basis.row(i)))) return false;
  return true;
}

ModuleSub AlgebraModule::submodule(const Matrix& basis) const {
  if (!is_submodule(basis)) throw Error(ErrorKind::StructureError, "subspace is not action-closed");
  const std::size_t sdim = basis.rows();
  AlgebraModule sub(alg_, sdim);
  for (std::size_t k = 0; k < alg_->dim(); ++k) {
    Matrix m(alg_->field(), sdim, sdim);
    for (std::size_t j = 0; j < sdim; ++j) {
      Vec img = action_[k].apply(basis.row(j));
      Vec coords = coordinates_in_basis(basis, img);
      for (std::size_t i = 0; i < sdim; ++i) m.at(i, j) = coords[i];
    }
    sub.set_action(k, m);
  }
  return ModuleSub{sub, basis.transpose()};
}

ModuleQuot AlgebraModule::quotient(const Matrix& sub_basis) const {
  Matrix sub = row_space_basis(sub_basis);
  if (!is_submodule(sub)) throw Error(ErrorKind::StructureError, "quotient by non-submodule");
  RrefResult rr = rref(sub);
  std::vector<bool> is_pivot(dim_, false);
  for (std::size_t c : rr.pivots) is_pivot[c] = true;
  std::vector<std::size_t> comp;
  for (std::size_t c = 0; c < dim_; ++c)
    if (!is_pivot[c]) comp.push_back(c);
  const std::size_t qdim = comp.size();
  const Field& f = alg_->field();

  Matrix proj(f, qdim, dim_);
  for (std::size_t c = 0; c < dim_; ++c) {
    Vec x = vec_unit(f, dim_, c);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
      Scalar s = x[rr.pivots[i]];
      if (!s.is_zero()) x = vec_sub(x, vec_scale(s, rr.mat.row(i)));
    }
    for (std::size_t q = 0; q < qdim; ++q) proj.at(q, c) = x[comp[q]];
  }
  Matrix section(f, dim_, qdim);
  for (std::size_t q = 0; q < qdim; ++q) section.at(comp[q], q) = Scalar::one(f);

  AlgebraModule quot(alg_, qdim);
  for (std::size_t k = 0; k < alg_->dim(); ++k) quot.set_action(k, proj * action_[k] * section);
  return ModuleQuot{quot, proj, section};
}

ModuleSummands AlgebraModule::direct_sum(const std::vector<const AlgebraModule*>& parts) {
  if (parts.empty()) throw Error(ErrorKind::StructureError, "empty direct sum");
  auto alg = parts[0]->alg_;
  const Field& f = alg->field();
  std::size_t total = 0;
  for (const auto* p : parts) total += p->dim_;
  AlgebraModule sum(alg, total);
  for (std::size_t k = 0; k < alg->dim(); ++k) {
    Matrix m(f, total, total);
    std::size_t off = 0;
    for (const auto* p : parts) {
      for (std::size_t i = 0; i < p->dim_; ++i)
        for (std::size_t j = 0; j < p->dim_; ++j) m.at(off + i, off + j) = p->action_[k].at(i, j);
      off += p->dim_;
    }
    sum.set_action(k, m);
  }
  ModuleSummands out{sum, {}, {}};
  std::size_t off = 0;
  for (const auto* p : parts) {
    Matrix inj(f, total, p->dim_), prj(f, p->dim_, total);
    for (std::size_t i = 0; i < p->dim_; ++i) {
      inj.at(off + i, i) = Scalar::one(f);
      prj.at(i, off + i) = Scalar::one(f);
    }
    out.inject.push_back(inj);
    out.project.push_back(prj);
    off += p->dim_;
  }
  return out;
}

std::vector<Matrix> AlgebraModule::hom_basis(const AlgebraModule& m, const AlgebraModule& n) {
  const Field& f = m.alg_->field();
  const std::size_t dm = m.dim_, dn = n.dim_;
  const std::size_t unknowns = dn * dm;  // X[i][j], index i*dm + j
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < m.alg_->dim(); ++k) {
    const Matrix& am = m.action_[k];
    const Matrix& an = n.action_[k];
    // constraint: X am - an X = 0, entry (i, j)
    for (std::size_t i = 0; i < dn; ++i)
      for (std::size_t j = 0; j < dm; ++j) {
        Vec row = vec_zero(f, unknowns);
        for (std::size_t t = 0; t < dm; ++t) row[i * dm + t] += am.at(t, j);
        for (std::size_t t = 0; t < dn; ++t) row[t * dm + j] -= an.at(i, t);
        rows.push_back(row);
      }
  }
  Matrix sys = Matrix::from_rows(f, unknowns, rows);
  Matrix ker = kernel_basis(sys);
  std::vector<Matrix> out;
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    Matrix x(f, dn, dm);
    for (std::size_t i = 0; i < dn; ++i)
      for (std::size_t j = 0; j < dm; ++j) x.at(i, j) = ker.at(r, i * dm + j);
    out.push_back(x);
  }
  return out;
}

bool AlgebraModule::are_isomorphic(const AlgebraModule& other) const {
  if (dim_ != other.dim_) return false;
  // an isomorphism exists iff some hom is invertible; over a field it is
  // enough to look for an invertible element in the hom space, which for the
  // small modules here we probe by deterministic combinations
  auto homs = hom_basis(*this, other);
  if (homs.empty()) return dim_ == 0;
  for (const auto& h : homs)
    if (rank(h) == dim_) return true;
  // deterministic small combinations
  const Field& f = alg_->field();
  SplitMix64 rng(kDefaultSeed ^ 0xA17E);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Matrix acc(f, dim_, dim_);
    for (const auto& h : homs) {
      long c = f.is_rationals() ? static_cast<long>(rng.below(7)) - 3
                                : static_cast<long>(rng.below(f.characteristic()));
      acc = acc + h.scaled(Scalar::from_int(f, c));
    }
    if (rank(acc) == dim_) return true;
  }
  return false;
}

Matrix left_ideal_of(const Algebra& a, const Vec& v) {
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < a.dim(); ++k)
    rows.push_back(a.multiply(vec_unit(a.field(), a.dim(), k), v));
  return row_space_basis(Matrix::from_rows(a.field(), a.dim(), rows));
}

}  // namespace gradalg
