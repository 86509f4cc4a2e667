/**
 * @file covers.cpp
 * @copyright Apache License 2.0
 */
#include "gradalg/covers.hpp"

#include <algorithm>
#include <sstream>

namespace gradalg {

namespace {

AlgebraAnalysis analyze_with_prims(std::shared_ptr<const Algebra> a, std::vector<Vec> prims,
                                   std::vector<std::string> labels, std::uint64_t seed) {
  AlgebraAnalysis an;
  an.alg = std::move(a);
  an.seed = seed;
  RadicalResult rad = algebra_radical(*an.alg);
  an.jacobson = rad.basis;
  an.nilindex = rad.cert.nilpotency_index;
  AlgebraQuotient q = an.alg->quotient_by_ideal(an.jacobson);
  an.quotient_projection = q.projection;
  an.quotient_section = q.section;
  an.quotient = std::make_shared<Algebra>(std::move(q.alg));
  an.prims = std::move(prims);
  an.labels = std::move(labels);

  // isomorphism classes: primitive idempotents f, g give isomorphic
  // projectives iff fbar (A/J) gbar != 0
  const std::size_t n = an.prims.size();
  std::vector<Vec> bars;
  for (const auto& e : an.prims) bars.push_back(an.quotient_projection.apply(e));
  auto linked = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < an.quotient->dim(); ++k) {
      Vec v = an.quotient->multiply(bars[i],
                                    an.quotient->multiply(vec_unit(an.alg->field(), an.quotient->dim(), k), bars[j]));
      if (!vec_is_zero(v)) return true;
    }
    return false;
  };
  an.iso_class.assign(n, -1);
  int next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (an.iso_class[i] >= 0) continue;
    an.iso_class[i] = next;
    an.class_rep.push_back(i);
    for (std::size_t j = i + 1; j < n; ++j)
      if (an.iso_class[j] < 0 && linked(i, j)) an.iso_class[j] = next;
    ++next;
  }
  return an;
}

}  // namespace

AlgebraAnalysis analyze_algebra(std::shared_ptr<const Algebra> a, std::uint64_t seed) {
  IdempotentSet set = complete_primitive_set(*a, seed);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < set.elements.size(); ++i) labels.push_back("e" + std::to_string(i));
  return analyze_with_prims(std::move(a), set.elements, labels, seed);
}

AlgebraAnalysis analyze_total(const TotalHomAlgebra& e, std::uint64_t seed) {
  std::vector<Vec> prims;
  std::vector<std::string> labels;
  const IndexCategory& cat = e.graded().category();
  for (std::size_t i = 0; i < e.generators().size(); ++i) {
    Vec u = e.block_unit(i);
    if (vec_is_zero(u)) continue;
    auto in_block = primitive_set_in_corner(e.algebra(), u, seed);
    for (std::size_t j = 0; j < in_block.size(); ++j) {
      prims.push_back(in_block[j]);
      labels.push_back(cat.arrow(e.generators()[i]).id + ":" + std::to_string(j));
    }
  }
  return analyze_with_prims(e.algebra_ptr(), std::move(prims), std::move(labels), seed);
}

ModuleSub projective_of_class(const AlgebraAnalysis& an, std::size_t cls) {
  const Vec& f = an.prims[an.class_rep[cls]];
  AlgebraModule reg = AlgebraModule::regular(an.alg);
  return reg.submodule(left_ideal_of(*an.alg, f));
}

AlgebraModule simple_of_class(const AlgebraAnalysis& an, std::size_t cls) {
  ModuleSub p = projective_of_class(an, cls);
  Matrix rad = module_radical(p.mod);
  return p.mod.quotient(rad).mod;
}

TopResult top_of(const AlgebraAnalysis& an, const AlgebraModule& m) {
  Matrix rad_m = module_radical(m);
  ModuleQuot quot = m.quotient(rad_m);
  TopResult out{std::vector<std::size_t>(an.class_rep.size(), 0), std::move(quot)};
  for (std::size_t c = 0; c < an.class_rep.size(); ++c) {
    const Vec& f = an.prims[an.class_rep[c]];
    Matrix act = out.quotient.projection * m.act(f) * out.quotient.section;
    out.multiplicities[c] = rank(act);
  }
  return out;
}

CoverResultE projective_cover_e(const AlgebraAnalysis& an, const AlgebraModule& m) {
  const Field& field = an.alg->field();
  TopResult top = top_of(an, m);

  // generators: for each class, elements of f M whose images form a basis of
  // fbar top(M)
  std::vector<std::pair<std::size_t, Vec>> generators;  // (class, x in f M)
  for (std::size_t c = 0; c < an.class_rep.size(); ++c) {
    if (top.multiplicities[c] == 0) continue;
    const Vec& f = an.prims[an.class_rep[c]];
    Matrix fm = row_space_basis(m.act(f).transpose());  // basis of f M
    Matrix chosen(field, 0, top.quotient.mod.dim());
    for (std::size_t r = 0; r < fm.rows(); ++r) {
      Vec image = top.quotient.projection.apply(fm.row(r));
      if (vec_is_zero(image) || subspace_contains(chosen, image)) continue;
      chosen = row_space_basis(Matrix::stack_rows(
          chosen, Matrix::from_rows(field, image.size(), {image})));
      generators.emplace_back(c, fm.row(r));
      if (chosen.rows() == top.multiplicities[c]) break;
    }
    if (chosen.rows() != top.multiplicities[c])
      throw Error(ErrorKind::LiftFailure, "cover generators do not span the top");
  }

  // cover = direct sum of the projectives A f_c, one copy per generator
  std::vector<ModuleSub> columns;
  std::vector<const AlgebraModule*> parts;
  for (const auto& [c, x] : generators) columns.push_back(projective_of_class(an, c));
  for (const auto& col : columns) parts.push_back(&col.mod);

  CoverResultE out{
      parts.empty() ? AlgebraModule(an.alg, 0) : AlgebraModule::direct_sum(parts).sum,
      {},
      {},
      {},
      Matrix(field, m.dim(), 0),
      Matrix(field, 0, 0),
      false};

  std::size_t offset = 0;
  Matrix epi(field, m.dim(), out.cover.dim());
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const auto& [c, x] = generators[g];
    out.summand_classes.push_back(c);
    out.summand_labels.push_back(an.labels[an.class_rep[c]]);
    out.summand_offsets.push_back(offset);
    // column basis rows u (elements of A f) map to u . x
    const Matrix& incl = columns[g].inclusion;  // alg_dim x col_dim
    for (std::size_t j = 0; j < columns[g].mod.dim(); ++j) {
      Vec u = incl.transpose().row(j);  // element of A
      Vec img = m.act(u).apply(x);
      for (std::size_t i = 0; i < m.dim(); ++i) epi.at(i, offset + j) = img[i];
    }
    offset += columns[g].mod.dim();
  }
  out.epi = epi;
  if (rank(epi) != m.dim())
    throw Error(ErrorKind::LiftFailure, "projective cover epi is not surjective");
  out.kernel = kernel_basis(epi);
  Matrix cover_rad = module_radical(out.cover);
  out.kernel_in_radical = subspace_leq(out.kernel, cover_rad);
  if (!out.kernel_in_radical)
    throw Error(ErrorKind::LiftFailure, "cover kernel escapes the radical");
  return out;
}

namespace {

std::vector<Matrix> all_submodules(const AlgebraModule& p) {
  const Field& f = p.algebra().field();
  if (f.is_rationals() || f.characteristic() > 3 || p.dim() > 6)
    throw Error(ErrorKind::OracleTooLarge,
                "submodule enumeration is limited to F_2/F_3 with dimension <= 6");
  const std::uint32_t q = f.characteristic();
  std::vector<Matrix> out;
  // all rref bases, filtered by action stability
  std::vector<std::size_t> dims(p.dim());
  // enumerate subspaces: reuse a local rref enumeration
  std::vector<Matrix> spaces;
  spaces.push_back(Matrix(f, 0, p.dim()));
  std::vector<std::size_t> idx(p.dim());
  // pivot subsets via bitmask
  for (std::uint32_t mask = 1; mask < (1u << p.dim()); ++mask) {
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < p.dim(); ++c)
      if (mask & (1u << c)) pivots.push_back(c);
    const std::size_t k = pivots.size();
    std::vector<std::pair<std::size_t, std::size_t>> free_pos;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t c = pivots[i] + 1; c < p.dim(); ++c)
        if (!(mask & (1u << c))) free_pos.emplace_back(i, c);
    std::vector<std::uint32_t> digits(free_pos.size(), 0);
    while (true) {
      Matrix mtx(f, k, p.dim());
      for (std::size_t i = 0; i < k; ++i) mtx.at(i, pivots[i]) = Scalar::one(f);
      for (std::size_t t = 0; t < free_pos.size(); ++t)
        mtx.at(free_pos[t].first, free_pos[t].second) = Scalar::from_int(f, digits[t]);
      spaces.push_back(mtx);
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == q) digits[i++] = 0;
      if (i == digits.size()) break;
    }
  }
  for (const auto& s : spaces)
    if (p.is_submodule(s)) out.push_back(s);
  return out;
}

}  // namespace

SmallnessResult is_small_subobject(const AlgebraModule& p, const Matrix& x,
                                   SmallnessMethod method) {
  if (!subspace_leq(x, Matrix::identity(p.algebra().field(), p.dim())))
    throw Error(ErrorKind::DimensionMismatch, "x must live inside p");

  std::optional<bool> by_radical, by_enum;
  if (method == SmallnessMethod::RadicalCriterion || method == SmallnessMethod::Both) {
    Matrix rad = module_radical(p);
    by_radical = subspace_leq(x, rad);
  }
  if (method == SmallnessMethod::Enumeration || method == SmallnessMethod::Both) {
    bool small = true;
    for (const Matrix& s : all_submodules(p)) {
      if (s.rows() == p.dim()) continue;  // S = p satisfies the implication
      auto si = subspace_sum_and_intersection(x, s);
      if (si.sum.rows() == p.dim()) {
        small = false;  // x + S = p with S proper
        break;
      }
    }
    by_enum = small;
  }
  if (by_radical && by_enum && *by_radical != *by_enum)
    throw Error(ErrorKind::StructureError,
                "smallness methods disagree: radical=" + std::to_string(*by_radical) +
                    " enumeration=" + std::to_string(*by_enum));
  SmallnessResult out;
  if (by_radical && by_enum) {
    out.small = *by_radical;
    out.method = "radical-criterion+enumeration";
  } else if (by_radical) {
    out.small = *by_radical;
    out.method = "radical-criterion";
  } else {
    out.small = *by_enum;
    out.method = "enumeration";
  }
  return out;
}

std::vector<std::map<std::string, std::size_t>> ResolutionComplex::betti() const {
  std::vector<std::map<std::string, std::size_t>> out;
  for (const auto& st : stages) {
    std::map<std::string, std::size_t> row;
    for (const auto& label : st.summand_labels) ++row[label];
    out.push_back(row);
  }
  return out;
}

ResolutionComplex minimal_resolution(const AlgebraAnalysis& an, const AlgebraModule& m,
                                     std::size_t length) {
  ResolutionComplex out;
  AlgebraModule current = m;            // module being covered at this stage
  std::optional<ModuleSub> kernel_sub;  // kernel inside the previous cover
  for (std::size_t k = 0; k <= length; ++k) {
    CoverResultE cover = projective_cover_e(an, current);
    if (k > 0) {
      // d_k: P_k -> P_{k-1} = (inclusion of kernel) o (epi onto kernel coords)
      const Matrix& incl = kernel_sub->inclusion;  // prev_cover_dim x kernel_dim
      out.differentials.push_back(incl * cover.epi);
    }
    Matrix kernel = cover.kernel;
    AlgebraModule cover_mod = cover.cover;
    out.stages.push_back(std::move(cover));
    if (kernel.rows() == 0) {
      out.terminated = true;
      break;
    }
    kernel_sub = cover_mod.submodule(kernel);
    current = kernel_sub->mod;
  }
  return out;
}

ResolutionCertificate verify_resolution(const AlgebraModule& m, const ResolutionComplex& r) {
  ResolutionCertificate cert;
  auto fail = [&](const std::string& msg) {
    if (cert.pass) {
      cert.pass = false;
      cert.first_failure = msg;
    }
  };
  if (r.stages.empty()) {
    fail("empty complex");
    return cert;
  }
  // augmentation is a cover of m
  const CoverResultE& aug = r.stages[0];
  if (rank(aug.epi) != m.dim()) fail("augmentation not surjective");
  Matrix rad0 = module_radical(aug.cover);
  if (!subspace_leq(kernel_basis(aug.epi), rad0)) fail("augmentation kernel not small");

  for (std::size_t k = 0; k < r.differentials.size(); ++k) {
    const Matrix& d = r.differentials[k];  // P_{k+1} -> P_k
    // previous map out of P_k
    const Matrix& prev = k == 0 ? aug.epi : r.differentials[k - 1];
    Matrix composed = prev * d;
    if (!composed.is_zero()) {
      fail("d o d != 0 at stage " + std::to_string(k + 1));
      continue;
    }
    // exactness: im d_{k+1} = ker prev
    Matrix image = row_space_basis(d.transpose());
    Matrix ker = kernel_basis(prev);
    if (!subspace_eq(image, ker)) fail("complex not exact at stage " + std::to_string(k));
    // minimality: im d_{k+1} inside rad P_k, and d_{k+1} is itself a cover of
    // the kernel, so its own kernel must be small in P_{k+1}
    Matrix rad = module_radical(r.stages[k].cover);
    if (!subspace_leq(image, rad)) fail("differential image escapes the radical at stage " +
                                        std::to_string(k + 1));
    Matrix own_kernel = kernel_basis(d);
    Matrix rad_src = module_radical(r.stages[k + 1].cover);
    if (!subspace_leq(own_kernel, rad_src))
      fail("differential kernel is not small at stage " + std::to_string(k + 1));
  }
  // when the complex claims termination, the last differential must be injective
  if (r.terminated && !r.differentials.empty()) {
    const Matrix& last = r.differentials.back();
    if (rank(last) != r.stages.back().cover.dim()) fail("terminating stage has a kernel");
  } else if (r.terminated && r.differentials.empty()) {
    if (kernel_basis(aug.epi).rows() != 0) fail("terminating augmentation has a kernel");
  }
  return cert;
}

GradedCoverResult projective_cover_graded(const TotalHomAlgebra& e, const AlgebraAnalysis& an,
                                          std::shared_ptr<const GradedModule> m) {
  TotalHomAlgebra::Transported t = e.to_total(m);
  CoverResultE cov = projective_cover_e(an, t.mod);

  TotalHomAlgebra::GradedView cover_view = e.view_as_graded(cov.cover);

  // aligned view of the transported target: block bases are coordinate slices
  TotalHomAlgebra::GradedView target_view;
  target_view.module = m;
  for (std::size_t i = 0; i < e.generators().size(); ++i) {
    const int g = e.generators()[i];
    const std::size_t d = m->dim(g);
    if (d == 0) continue;
    Matrix rows(m->field(), d, t.mod.dim());
    for (std::size_t r = 0; r < d; ++r) rows.at(r, t.offsets[i] + r) = Scalar::one(m->field());
    target_view.block_bases.emplace(g, rows);
  }

  GradedCoverResult out{cover_view.module,
                        e.hom_as_graded(cov.epi, cover_view, target_view),
                        {},
                        cov.kernel_in_radical,
                        cov.summand_labels};
  // kernel degree-wise: split the flat kernel along the cover's block bases
  for (const auto& [g, basis] : cover_view.block_bases) {
    std::size_t pos = 0;
    (void)pos;
    std::vector<Vec> rows;
    // project each kernel row onto the block and express in the block basis
    std::size_t gen_index = 0;
    for (std::size_t i = 0; i < e.generators().size(); ++i)
      if (e.generators()[i] == g) gen_index = i;
    for (std::size_t r = 0; r < cov.kernel.rows(); ++r) {
      Vec blocked = cov.cover.act_vec(e.block_unit(gen_index), cov.kernel.row(r));
      if (vec_is_zero(blocked)) continue;
      rows.push_back(coordinates_in_basis(basis, blocked));
    }
    if (!rows.empty())
      out.kernel.emplace(g, row_space_basis(Matrix::from_rows(m->field(), basis.rows(), rows)));
  }
  return out;
}

}  // namespace gradalg
