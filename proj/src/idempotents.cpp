/**
 * @file idempotents.cpp
 * @copyright Apache License 2.0
 */
#include "gradalg/idempotents.hpp"

#include <algorithm>
#include <sstream>

namespace gradalg {

namespace {

Vec eval_poly_at(const Algebra& a, const Poly& p, const Vec& x) {
  Vec acc = vec_zero(a.field(), a.dim());
  for (int i = p.degree(); i >= 0; --i) {
    acc = a.multiply(acc, x);
    if (!p.coeff(i).is_zero()) acc = vec_add(acc, vec_scale(p.coeff(i), a.unit()));
  }
  return acc;
}

bool vec_lex_less(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return scalar_less(a[i], b[i]);
  }
  return a.size() < b.size();
}

Vec random_element(const Algebra& a, SplitMix64& rng) {
  const Field& f = a.field();
  Vec v = vec_zero(f, a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    long c = f.is_rationals() ? static_cast<long>(rng.below(7)) - 3
                              : static_cast<long>(rng.below(f.characteristic()));
    v[i] = Scalar::from_int(f, c);
  }
  return v;
}

Vec random_in_span(const Matrix& basis, SplitMix64& rng) {
  const Field& f = basis.field();
  Vec v = vec_zero(f, basis.cols());
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    long c = f.is_rationals() ? static_cast<long>(rng.below(7)) - 3
                              : static_cast<long>(rng.below(f.characteristic()));
    v = vec_add(v, vec_scale(Scalar::from_int(f, c), basis.row(i)));
  }
  return v;
}

struct SplitWitness {
  bool sound_nonsplit = false;  // a central element generates a proper field extension
  std::string detail;
};

// Coprime factor split of the minimal polynomial, if one is reachable:
// returns f1 with m = f1 * f2, gcd(f1, f2) = 1, both nonconstant.
std::optional<Poly> coprime_factor(const Poly& m, bool central, std::size_t ambient_dim,
                                   SplitWitness& witness) {
  const Field& k = m.field();
  if (m.degree() <= 1) return std::nullopt;
  if (!k.is_rationals()) {
    auto facs = factor_over_prime_field(m);
    if (facs.size() >= 2) {
      Poly f1 = Poly::one(k);
      for (std::size_t i = 0; i < facs[0].multiplicity; ++i) f1 = f1 * facs[0].factor;
      return f1;
    }
    if (facs.size() == 1 && facs[0].multiplicity >= 2) return std::nullopt;  // nilpotent path
    if (central && facs.size() == 1 && facs[0].factor.degree() > 1) {
      witness.sound_nonsplit = true;
      witness.detail = "central element with irreducible minimal polynomial of degree " +
                       std::to_string(facs[0].factor.degree());
    }
    return std::nullopt;
  }
  // over Q: rational roots first, then squarefree parts
  auto roots = rational_roots(m);
  if (!roots.empty()) {
    Poly lin(k, Vec{-roots[0].root, Scalar::one(k)});
    Poly f1 = Poly::one(k);
    for (std::size_t i = 0; i < roots[0].multiplicity; ++i) f1 = f1 * lin;
    if (f1.degree() < m.degree()) return f1;
    return std::nullopt;  // m = (x - r)^deg: nilpotent path handles it
  }
  auto parts = squarefree_decomposition(m);
  if (parts.size() >= 2) {
    Poly f1 = Poly::one(k);
    for (std::size_t i = 0; i < parts[0].multiplicity; ++i) f1 = f1 * parts[0].factor;
    return f1;
  }
  if (parts.size() == 1 && parts[0].multiplicity == 1 && central) {
    // squarefree without rational roots: a field-extension witness when the
    // degree matches the block (or is provably irreducible)
    bool irr = false;
    try {
      irr = is_irreducible(m);
    } catch (const Error&) {
      irr = m.degree() == static_cast<int>(ambient_dim);
    }
    if (irr || m.degree() == static_cast<int>(ambient_dim)) {
      witness.sound_nonsplit = true;
      witness.detail = "central element with non-split minimal polynomial of degree " +
                       std::to_string(m.degree());
    }
  }
  return std::nullopt;
}

// One split attempt with a candidate element of a unital algebra c
// (semisimple by assumption).  Yields two nonzero orthogonal idempotents
// summing to the unit when it succeeds.
std::optional<std::pair<Vec, Vec>> try_split_with(const Algebra& c, const Vec& cand, bool central,
                                                  SplitWitness& witness) {
  Poly m = c.minimal_polynomial(cand);
  if (m.degree() <= 1) return std::nullopt;
  if (auto f1 = coprime_factor(m, central, c.dim(), witness)) {
    Poly f2 = m / *f1;
    PolyExtGcd bez = poly_ext_gcd(*f1, f2);
    if (bez.g.degree() != 0) return std::nullopt;  // not coprime after all
    // e1 = (v f2)(cand) is 1 mod f1 and 0 mod f2
    Poly e1_poly = (bez.v * f2) % m;
    Vec e1 = eval_poly_at(c, e1_poly, cand);
    if (!c.is_idempotent(e1))
      throw Error(ErrorKind::LiftFailure, "CRT idempotent failed the exact check");
    Vec e2 = vec_sub(c.unit(), e1);
    if (vec_is_zero(e1) || vec_is_zero(e2)) return std::nullopt;
    return std::make_pair(e1, e2);
  }
  // repeated-factor path: a nilpotent element spawns a proper left ideal
  auto parts = squarefree_decomposition(m);
  if (parts.size() == 1 && parts[0].multiplicity >= 2) {
    Vec z = eval_poly_at(c, parts[0].factor, cand);
    if (vec_is_zero(z)) return std::nullopt;
    Matrix ideal = left_ideal_of(c, z);
    // solve for e in the ideal with x e = x for every basis row x
    const Field& f = c.field();
    const std::size_t r = ideal.rows();
    if (r == 0) return std::nullopt;
    std::vector<Vec> rows;
    Vec rhs;
    for (std::size_t x = 0; x < r; ++x) {
      // sum_t t_j (ideal_x * ideal_j) = ideal_x, coordinates give dim(c) rows
      std::vector<Vec> prods;
      for (std::size_t j = 0; j < r; ++j) prods.push_back(c.multiply(ideal.row(x), ideal.row(j)));
      for (std::size_t coord = 0; coord < c.dim(); ++coord) {
        Vec row = vec_zero(f, r);
        for (std::size_t j = 0; j < r; ++j) row[j] = prods[j][coord];
        rows.push_back(row);
        rhs.push_back(ideal.at(x, coord));
      }
    }
    auto t = solve(Matrix::from_rows(f, r, rows), rhs);
    if (!t) return std::nullopt;  // would contradict semisimplicity; stay defensive
    Vec e1 = vec_zero(f, c.dim());
    for (std::size_t j = 0; j < r; ++j) e1 = vec_add(e1, vec_scale((*t)[j], ideal.row(j)));
    if (!c.is_idempotent(e1)) return std::nullopt;
    Vec e2 = vec_sub(c.unit(), e1);
    if (vec_is_zero(e1) || vec_is_zero(e2)) return std::nullopt;
    return std::make_pair(e1, e2);
  }
  return std::nullopt;
}

// Finds one nontrivial idempotent split of the semisimple algebra s, or
// nullopt when the deterministic budget runs out.
std::optional<std::pair<Vec, Vec>> find_split(const Algebra& s, SplitMix64& rng,
                                              SplitWitness& witness) {
  // center candidates first (both their splits and their witnesses are sound)
  Matrix center = s.center();
  if (center.rows() > 1) {
    for (std::size_t i = 0; i < center.rows(); ++i)
      if (auto r = try_split_with(s, center.row(i), true, witness)) return r;
    for (int attempt = 0; attempt < 24; ++attempt)
      if (auto r = try_split_with(s, random_in_span(center, rng), true, witness)) return r;
  }
  if (witness.sound_nonsplit) return std::nullopt;
  // general zero-divisor search inside the (now central-simple-ish) block
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (auto r = try_split_with(s, vec_unit(s.field(), s.dim(), i), false, witness)) return r;
  }
  const int budget = 16 + 4 * static_cast<int>(s.dim() * s.dim());
  for (int attempt = 0; attempt < budget; ++attempt)
    if (auto r = try_split_with(s, random_element(s, rng), false, witness)) return r;
  return std::nullopt;
}

// Complete primitive idempotents of a SEMISIMPLE algebra, in its own
// coordinates.  Recursion by corner splitting.
void split_semisimple(const Algebra& s, const Vec& u, SplitMix64& rng, std::vector<Vec>& out) {
  AlgebraCorner c = s.corner(u);
  if (c.alg.dim() == 0) return;
  if (c.alg.dim() == 1) {
    out.push_back(u);
    return;
  }
  SplitWitness witness;
  auto split = find_split(c.alg, rng, witness);
  if (!split) {
    std::ostringstream os;
    os << "semisimple block of dimension " << c.alg.dim() << " over " << s.field().to_string()
       << " did not split: "
       << (witness.sound_nonsplit ? witness.detail
                                  : "no splitting element within the deterministic budget");
    throw Error(ErrorKind::NonSplitSemisimpleQuotient, os.str());
  }
  auto embed = [&](const Vec& x) {
    Vec v = vec_zero(s.field(), s.dim());
    for (std::size_t i = 0; i < c.alg.dim(); ++i)
      if (!x[i].is_zero()) v = vec_add(v, vec_scale(x[i], c.basis.row(i)));
    return v;
  };
  split_semisimple(s, embed(split->first), rng, out);
  split_semisimple(s, embed(split->second), rng, out);
}

}  // namespace

Vec lift_idempotent(const Algebra& a, const Matrix& jac, const Vec& preimage) {
  Vec x = preimage;
  Vec defect = vec_sub(a.multiply(x, x), x);
  if (!subspace_contains(jac, defect))
    throw Error(ErrorKind::InputNotIdempotentModJ, "preimage is not idempotent modulo J");
  for (int iter = 0; iter < 64; ++iter) {
    if (a.is_idempotent(x)) return x;
    Vec x2 = a.multiply(x, x);
    Vec x3 = a.multiply(x2, x);
    // 3 x^2 - 2 x^3 in every characteristic
    x = vec_sub(vec_scale(Scalar::from_int(a.field(), 3), x2),
                vec_scale(Scalar::from_int(a.field(), 2), x3));
  }
  throw Error(ErrorKind::LiftFailure, "idempotent lift did not stabilize");
}

std::vector<Vec> primitive_set_in_corner(const Algebra& a, const Vec& u, std::uint64_t seed) {
  if (!a.is_idempotent(u))
    throw Error(ErrorKind::IdempotentError, "corner element is not idempotent");
  if (vec_is_zero(u)) return {};
  AlgebraCorner c = a.corner(u);
  SplitMix64 rng(seed ^ a.canonical_hash());

  RadicalResult rad = algebra_radical(c.alg);
  AlgebraQuotient q = c.alg.quotient_by_ideal(rad.basis);
  std::vector<Vec> bars;
  split_semisimple(q.alg, q.alg.unit(), rng, bars);

  // lift sequentially inside shrinking corners to preserve orthogonality
  std::vector<Vec> lifted;  // in c.alg coordinates
  Vec remaining = c.alg.unit();
  for (std::size_t i = 0; i + 1 < bars.size(); ++i) {
    Vec pre = q.section.apply(bars[i]);
    Vec corner_pre = c.alg.multiply(c.alg.multiply(remaining, pre), remaining);
    Vec e = lift_idempotent(c.alg, rad.basis, corner_pre);
    lifted.push_back(e);
    remaining = vec_sub(remaining, e);
  }
  if (!bars.empty()) {
    if (!c.alg.is_idempotent(remaining))
      throw Error(ErrorKind::LiftFailure, "residual idempotent check failed");
    lifted.push_back(remaining);
  }

  // embed into the ambient algebra
  std::vector<Vec> out;
  for (const auto& e : lifted) {
    Vec v = vec_zero(a.field(), a.dim());
    for (std::size_t i = 0; i < c.alg.dim(); ++i)
      if (!e[i].is_zero()) v = vec_add(v, vec_scale(e[i], c.basis.row(i)));
    out.push_back(v);
  }
  std::sort(out.begin(), out.end(), vec_lex_less);
  return out;
}

IdempotentSet complete_primitive_set(const Algebra& a, std::uint64_t seed) {
  IdempotentSet set;
  set.seed = seed;
  set.elements = primitive_set_in_corner(a, a.unit(), seed);

  set.orthogonal = true;
  for (std::size_t i = 0; i < set.elements.size(); ++i)
    for (std::size_t j = 0; j < set.elements.size(); ++j) {
      if (i == j) continue;
      if (!vec_is_zero(a.multiply(set.elements[i], set.elements[j]))) set.orthogonal = false;
    }
  Vec sum = vec_zero(a.field(), a.dim());
  for (const auto& e : set.elements) sum = vec_add(sum, e);
  set.complete = sum == a.unit();
  for (const auto& e : set.elements) {
    AlgebraCorner corner = a.corner(e);
    set.primitive.push_back(is_local(corner.alg, seed).local);
  }
  if (!set.orthogonal || !set.complete)
    throw Error(ErrorKind::LiftFailure, "complete_primitive_set postcondition failed");
  return set;
}

LocalCertificate is_local(const Algebra& a, std::uint64_t seed) {
  RadicalResult rad = algebra_radical(a);
  AlgebraQuotient q = a.quotient_by_ideal(rad.basis);
  LocalCertificate cert;
  cert.quotient_dim = q.alg.dim();
  if (q.alg.dim() == 1) {
    cert.local = true;
    cert.split = true;
    cert.note = "quotient is the base field";
    return cert;
  }
  SplitMix64 rng(seed ^ a.canonical_hash() ^ 0x10CA1);
  SplitWitness witness;
  if (find_split(q.alg, rng, witness)) {
    cert.local = false;
    cert.note = "quotient splits into a proper idempotent pair";
    return cert;
  }
  if (witness.sound_nonsplit) {
    // the quotient is a division ring exactly when it has no nontrivial
    // idempotents; a field-extension witness plus commutativity settles it
    Matrix center = q.alg.center();
    if (center.rows() == q.alg.dim()) {
      cert.local = true;
      cert.note = "quotient is a field extension: " + witness.detail;
      return cert;
    }
  }
  cert.local = true;
  cert.note = "no zero divisor found within the deterministic budget (division-ring evidence)";
  return cert;
}

ProjectiveDecomposition decompose_projective(std::shared_ptr<const GradedModule> p,
                                             std::uint64_t seed) {
  EndAlgebra end = end_algebra(p);
  IdempotentSet prims = complete_primitive_set(*end.alg, seed);

  ProjectiveDecomposition out;
  out.parent = p;
  out.seed = seed;
  for (std::size_t k = 0; k < prims.elements.size(); ++k) {
    // assemble the idempotent endomorphism
    GradedHom e(p, p);
    bool first = true;
    for (std::size_t i = 0; i < end.basis.size(); ++i) {
      Scalar c = prims.elements[k][i];
      if (c.is_zero()) continue;
      GradedHom term = end.basis[i].scaled(c);
      e = first ? term : e + term;
      first = false;
    }
    // image subspaces per degree
    std::map<int, Matrix> bases;
    for (int g : p->support()) {
      Matrix img = row_space_basis(e.component(g).transpose());
      if (img.rows() > 0) bases.emplace(g, img);
    }
    GradedSub sub = graded_submodule(p, bases);
    // projection: coordinates of e(m) in the image basis
    GradedHom proj(p, sub.module);
    for (const auto& [g, basis] : bases) {
      Matrix comp(p->field(), basis.rows(), p->dim(g));
      Matrix eg = e.component(g);
      for (std::size_t col = 0; col < p->dim(g); ++col) {
        Vec img = eg.apply(vec_unit(p->field(), p->dim(g), col));
        Vec coords = coordinates_in_basis(basis, img);
        for (std::size_t r = 0; r < basis.rows(); ++r) comp.at(r, col) = coords[r];
      }
      proj.set_component(g, comp);
    }
    AlgebraCorner corner = end.alg->corner(prims.elements[k]);
    out.summands.push_back(
        ProjectiveSummand{e, sub.module, proj, sub.inclusion, is_local(corner.alg, seed)});
  }
  return out;
}

}  // namespace gradalg
