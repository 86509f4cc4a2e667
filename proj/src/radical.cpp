/**
 * @file radical.cpp
 * @copyright Apache License 2.0
 */
#include "gradalg/radical.hpp"

namespace gradalg {

namespace {


// trace of left multiplication, as a linear functional on A
Vec trace_functional(const Algebra& a) {
  const Field& f = a.field();
  Vec tau = vec_zero(f, a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) {
    Matrix lk = a.left_mult(vec_unit(f, a.dim(), k));
    Scalar t = Scalar::zero(f);
    for (std::size_t i = 0; i < a.dim(); ++i) t += lk.at(i, i);
    tau[k] = t;
  }
  return tau;
}

Matrix trace_form_kernel(const Algebra& a) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  Vec tau = trace_functional(a);
  Matrix b(f, n, n);  // B[i][j] = tr(L_{b_i b_j})
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& p = a.product(i, j);
      Scalar s = Scalar::zero(f);
      for (std::size_t k = 0; k < n; ++k)
        if (!p[k].is_zero()) s += p[k] * tau[k];
      b.at(i, j) = s;
    }
  return kernel_basis(b);
}

bool element_generates_nilpotent_ideal(const Algebra& a, const Vec& x) {
  Matrix seed = Matrix::from_rows(a.field(), a.dim(), {x});
  Matrix ideal = a.ideal_closure(seed);
  return a.nilpotency_index(ideal).has_value();
}

Matrix exhaustive_radical(const Algebra& a) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  const std::uint64_t p = f.characteristic();
  Matrix found(f, 0, n);
  std::vector<std::uint32_t> digits(n, 0);
  while (true) {
    // advance odometer; the all-zero vector is skipped as a candidate
    std::size_t i = 0;
    while (i < n && ++digits[i] == p) digits[i++] = 0;
    if (i == n) break;
    Vec x(n, Scalar::zero(f));
    for (std::size_t k = 0; k < n; ++k) x[k] = Scalar::from_int(f, digits[k]);
    if (subspace_contains(found, x)) continue;
    if (element_generates_nilpotent_ideal(a, x))
      found = row_space_basis(Matrix::stack_rows(found, Matrix::from_rows(f, n, {x})));
  }
  return found;
}

double pow_size(std::uint64_t p, std::size_t n) {
  double s = 1;
  for (std::size_t i = 0; i < n; ++i) {
    s *= static_cast<double>(p);
    if (s > 1e18) return s;
  }
  return s;
}

// Characteristic-p radical through the chain of characteristic-polynomial
// coefficient maps: A_0 = A, A_{i+1} = {x in A_i : c_{p^i}(rho(x y)) = 0 for
// all y in A_i}, where c_j is the coefficient of lambda^{n-j} in the charpoly
// of the regular representation.  Over the prime field each map is linear on
// A_i, and the chain ends in Rad(A) once p^i exceeds n.  The i = 0 step is
// the trace form, so for p > n this agrees with the trace-form method.
Matrix charpoly_chain_radical(const Algebra& a) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  const std::uint64_t p = f.characteristic();
  Matrix current = Matrix::identity(f, n);  // rows: basis of A_i in A coords
  for (std::uint64_t pk = 1; pk <= n; pk *= p) {
    const std::size_t r = current.rows();
    if (r == 0) break;
    // cache charpoly coefficient c_{pk} of every product pair
    std::vector<Vec> rows;
    for (std::size_t yi = 0; yi < r; ++yi) {
      Vec row = vec_zero(f, r);
      for (std::size_t xi = 0; xi < r; ++xi) {
        Vec prod = a.multiply(current.row(xi), current.row(yi));
        Poly cp = characteristic_polynomial(a.left_mult(prod));
        row[xi] = cp.coeff(n - pk);
      }
      rows.push_back(row);
    }
    Matrix ker = kernel_basis(Matrix::from_rows(f, r, rows));
    // back to A coordinates
    std::vector<Vec> basis_rows;
    for (std::size_t i = 0; i < ker.rows(); ++i) {
      Vec v = vec_zero(f, n);
      for (std::size_t j = 0; j < r; ++j)
        if (!ker.at(i, j).is_zero()) v = vec_add(v, vec_scale(ker.at(i, j), current.row(j)));
      basis_rows.push_back(v);
    }
    current = row_space_basis(Matrix::from_rows(f, n, basis_rows));
  }
  return current;
}

}  // namespace

RadicalResult algebra_radical(const Algebra& a) {
  const Field& f = a.field();
  if (a.multiply(a.unit(), a.unit()) != a.unit() || vec_is_zero(a.unit()))
    throw Error(ErrorKind::NotUnital, "algebra_radical needs a unital algebra");

  Matrix jac(f, 0, a.dim());
  std::string method;
  if (f.is_rationals()) {
    method = "trace-form";
    jac = trace_form_kernel(a);
  } else if (f.characteristic() > a.dim()) {
    method = "trace-form";
    jac = trace_form_kernel(a);
  } else {
    method = "charpoly-chain";
    jac = charpoly_chain_radical(a);
    // belt and braces at tiny sizes: the chain must match the exhaustive sweep
    if (pow_size(f.characteristic(), a.dim()) <= 4096.0) {
      if (!subspace_eq(jac, exhaustive_radical(a)))
        throw Error(ErrorKind::StructureError,
                    "radical certification failed: chain disagrees with the exhaustive sweep");
    }
  }

  // certificates; any failure here is a hard bug, not an input error
  if (!a.is_ideal(jac))
    throw Error(ErrorKind::StructureError, "radical certification failed: not an ideal");
  auto ni = a.nilpotency_index(jac);
  if (!ni)
    throw Error(ErrorKind::StructureError, "radical certification failed: not nilpotent");
  AlgebraQuotient q = a.quotient_by_ideal(jac);
  bool ss;
  if (f.is_rationals() || f.characteristic() > q.alg.dim()) {
    ss = trace_form_kernel(q.alg).rows() == 0;
  } else {
    ss = charpoly_chain_radical(q.alg).rows() == 0;
  }
  if (!ss)
    throw Error(ErrorKind::StructureError, "radical certification failed: quotient not semisimple");

  RadicalResult out{jac, RadicalCertificate{method, jac.rows(), *ni, ss}};
  return out;
}

std::optional<std::size_t> nilpotency_index(const Algebra& a, const Matrix& ideal_basis) {
  return a.nilpotency_index(ideal_basis);
}

namespace {

HomRadical corner_of_radical(const std::vector<std::shared_ptr<const GradedModule>>& parts,
                             std::size_t from, std::size_t to) {
  GradedSum sum = graded_direct_sum(parts);
  EndAlgebra end = end_algebra(sum.module);
  RadicalResult rad = algebra_radical(*end.alg);

  // corner: pi_to o h o i_from for h in J, as a subspace of Hom(from, to)
  std::vector<Vec> corner_rows;
  std::size_t hom_len = 0;
  for (std::size_t r = 0; r < rad.basis.rows(); ++r) {
    GradedHom h(sum.module, sum.module);
    bool first = true;
    for (std::size_t k = 0; k < end.basis.size(); ++k) {
      Scalar c = rad.basis.at(r, k);
      if (c.is_zero()) continue;
      GradedHom term = end.basis[k].scaled(c);
      h = first ? term : h + term;
      first = false;
    }
    GradedHom f = sum.project[to].compose_after(h.compose_after(sum.inject[from]));
    Vec flat = f.flatten();
    hom_len = flat.size();
    corner_rows.push_back(flat);
  }
  const Field& field = parts[from]->field();
  if (corner_rows.empty())
    return HomRadical{{}};
  Matrix corner = row_space_basis(Matrix::from_rows(field, hom_len, corner_rows));

  // appendix membership check: embedding each corner basis element back into
  // End(D) must land in J
  for (std::size_t r = 0; r < corner.rows(); ++r) {
    GradedHom f =
        GradedHom::unflatten(parts[from], parts[to], corner.row(r));
    GradedHom emb = sum.inject[to].compose_after(f.compose_after(sum.project[from]));
    Vec coords = coordinates_in_basis(end.flat_basis, emb.flatten());
    if (!subspace_contains(rad.basis, coords))
      throw Error(ErrorKind::StructureError, "radical corner membership failed");
  }

  HomRadical out;
  for (std::size_t r = 0; r < corner.rows(); ++r)
    out.basis.push_back(GradedHom::unflatten(parts[from], parts[to], corner.row(r)));
  return out;
}

}  // namespace

HomRadical hom_radical(std::shared_ptr<const GradedModule> m,
                       std::shared_ptr<const GradedModule> n) {
  return corner_of_radical({m, n}, 0, 1);
}

HomRadical hom_radical_padded(std::shared_ptr<const GradedModule> m,
                              std::shared_ptr<const GradedModule> n,
                              std::shared_ptr<const GradedModule> padding) {
  return corner_of_radical({m, n, padding}, 0, 1);
}

Matrix module_radical(const AlgebraModule& m) {
  RadicalResult rad = algebra_radical(m.algebra());
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < rad.basis.rows(); ++r) {
    Matrix act = m.act(rad.basis.row(r));
    for (std::size_t j = 0; j < m.dim(); ++j)
      rows.push_back(act.apply(vec_unit(m.algebra().field(), m.dim(), j)));
  }
  if (rows.empty()) return Matrix(m.algebra().field(), 0, m.dim());
  return row_space_basis(Matrix::from_rows(m.algebra().field(), m.dim(), rows));
}

GradedSub module_radical_graded(const TotalHomAlgebra& e,
                                std::shared_ptr<const GradedModule> m) {
  TotalHomAlgebra::Transported t = e.to_total(m);
  Matrix rad = module_radical(t.mod);

  // split along the block idempotents: rad = (+) 1_i rad
  std::map<int, Matrix> bases;
  const Field& f = m->field();
  for (std::size_t i = 0; i < e.generators().size(); ++i) {
    const int g = e.generators()[i];
    const std::size_t d = m->dim(g);
    if (d == 0) continue;
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < rad.rows(); ++r) {
      Vec blocked = t.mod.act_vec(e.block_unit(i), rad.row(r));
      Vec local(blocked.begin() + t.offsets[i], blocked.begin() + t.offsets[i] + d);
      if (!vec_is_zero(local)) rows.push_back(local);
    }
    if (!rows.empty()) bases.emplace(g, row_space_basis(Matrix::from_rows(f, d, rows)));
  }
  return graded_submodule(m, bases);
}

}  // namespace gradalg
