/**
 * @file graded.cpp
 * @copyright Apache License 2.0
 */
#include "gradalg/graded.hpp"

#include <algorithm>
#include <sstream>

namespace gradalg {

namespace {

std::string pair_name(const IndexCategory& c, int a, int b) {
  return "(" + c.arrow(a).id + ", " + c.arrow(b).id + ")";
}

}  // namespace

void GradedAlgebra::set_component(int arrow, std::vector<std::string> labels) {
  if (arrow < 0 || arrow >= static_cast<int>(cat_->arrow_count()))
    throw Error(ErrorKind::StructureError, "component on unknown arrow");
  if (labels.empty()) {
    comps_.components.erase(arrow);
    return;
  }
  comps_.components[arrow] = std::move(labels);
}

void GradedAlgebra::set_product(int alpha, int beta, std::size_t i, std::size_t j,
                                const Vec& coords) {
  if (!cat_->composable(alpha, beta))
    throw Error(ErrorKind::StructureError,
                "product on non-composable pair " + pair_name(*cat_, alpha, beta));
  auto tgt = cat_->compose(alpha, beta);
  if (!tgt) {
    if (!vec_is_zero(coords))
      throw Error(ErrorKind::StructureError, "nonzero product on an absorbed pair");
    return;  // product into the absorbed component is definitionally zero
  }
  const std::size_t da = dim(alpha), db = dim(beta), dt = dim(*tgt);
  if (i >= da || j >= db || coords.size() != dt)
    throw Error(ErrorKind::DimensionMismatch, "set_product on " + pair_name(*cat_, alpha, beta));
  auto& table = mult_[{alpha, beta}];
  if (table.empty()) table.assign(da, std::vector<Vec>(db, vec_zero(field_, dt)));
  table[i][j] = coords;
}

void GradedAlgebra::set_local_unit(const std::string& object, const Vec& coords) {
  int e = cat_->identity_arrow(object);
  if (coords.size() != dim(e))
    throw Error(ErrorKind::DimensionMismatch, "local unit for '" + object + "'");
  units_[object] = coords;
}

std::optional<std::pair<int, Vec>> GradedAlgebra::basis_product(int alpha, std::size_t i, int beta,
                                                                std::size_t j) const {
  auto tgt = cat_->compose(alpha, beta);
  if (!tgt) return std::nullopt;
  auto it = mult_.find({alpha, beta});
  if (it == mult_.end()) return std::make_pair(*tgt, vec_zero(field_, dim(*tgt)));
  return std::make_pair(*tgt, it->second[i][j]);
}

std::optional<std::pair<int, Vec>> GradedAlgebra::component_product(int alpha, const Vec& x,
                                                                    int beta, const Vec& y) const {
  auto tgt = cat_->compose(alpha, beta);
  if (!tgt) return std::nullopt;
  Vec out = vec_zero(field_, dim(*tgt));
  auto it = mult_.find({alpha, beta});
  if (it != mult_.end()) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (y[j].is_zero()) continue;
        Scalar c = x[i] * y[j];
        const Vec& p = it->second[i][j];
        for (std::size_t k = 0; k < out.size(); ++k)
          if (!p[k].is_zero()) out[k] += c * p[k];
      }
    }
  }
  return std::make_pair(*tgt, out);
}

const Vec& GradedAlgebra::local_unit(const std::string& object) const {
  auto it = units_.find(object);
  if (it == units_.end())
    throw Error(ErrorKind::StructureError, "no local unit for object '" + object + "'");
  return it->second;
}

GradedReport GradedAlgebra::validate() const {
  GradedReport rep;
  auto add = [&](const std::string& code, const std::string& msg) {
    rep.violations.push_back(GradedViolation{code, msg});
  };
  const auto support = comps_.support();

  // local units must exist wherever a component touches an object
  for (int a : support) {
    const Arrow& ar = cat_->arrow(a);
    for (const auto& obj : {ar.src, ar.tgt})
      if (!units_.count(obj)) add("unit", "missing local unit e_" + obj);
  }

  // unit laws: e_t a = a = a e_s on every basis element
  for (int a : support) {
    const Arrow& ar = cat_->arrow(a);
    if (!units_.count(ar.src) || !units_.count(ar.tgt)) continue;
    int es = cat_->identity_arrow(ar.src), et = cat_->identity_arrow(ar.tgt);
    for (std::size_t i = 0; i < dim(a); ++i) {
      Vec basis = vec_unit(field_, dim(a), i);
      auto left = component_product(et, units_.at(ar.tgt), a, basis);
      if (!left || left->second != basis)
        add("unit-law", "e_" + ar.tgt + " . basis " + std::to_string(i) + " of A_" + ar.id +
                            " differs from the element");
      auto right = component_product(a, basis, es, units_.at(ar.src));
      if (!right || right->second != basis)
        add("unit-law", "basis " + std::to_string(i) + " of A_" + ar.id + " . e_" + ar.src +
                            " differs from the element");
    }
  }

  // associativity a(bc) = (ab)c on representable basis triples
  for (int a : support)
    for (int b : support) {
      if (!cat_->composable(a, b)) continue;
      auto ab = cat_->compose(a, b);
      for (int c : support) {
        if (!cat_->composable(b, c)) continue;
        auto bc = cat_->compose(b, c);
        if (!ab || !bc) continue;  // clipped intermediate: not representable
        for (std::size_t i = 0; i < dim(a); ++i)
          for (std::size_t j = 0; j < dim(b); ++j) {
            auto ab_val = basis_product(a, i, b, j);
            for (std::size_t k = 0; k < dim(c); ++k) {
              auto bc_val = basis_product(b, j, c, k);
              // (ab)c
              auto left = component_product(*ab, ab_val->second, c, vec_unit(field_, dim(c), k));
              // a(bc)
              auto right = component_product(a, vec_unit(field_, dim(a), i), *bc, bc_val->second);
              bool lz = !left || vec_is_zero(left->second);
              bool rz = !right || vec_is_zero(right->second);
              if (lz && rz) continue;
              if (lz != rz || left->second != right->second)
                add("associativity", "a(bc) != (ab)c at arrows (" + cat_->arrow(a).id + ", " +
                                         cat_->arrow(b).id + ", " + cat_->arrow(c).id +
                                         "), basis (" + std::to_string(i) + "," +
                                         std::to_string(j) + "," + std::to_string(k) + ")");
            }
          }
      }
    }
  return rep;
}

void GradedModule::set_component(int arrow, std::vector<std::string> labels) {
  if (arrow < 0 || arrow >= static_cast<int>(category().arrow_count()))
    throw Error(ErrorKind::StructureError, "component on unknown arrow");
  if (labels.empty()) {
    comps_.components.erase(arrow);
    return;
  }
  comps_.components[arrow] = std::move(labels);
}

void GradedModule::set_action(int alpha, int beta, std::size_t i, std::size_t j,
                              const Vec& coords) {
  const IndexCategory& cat = category();
  if (!cat.composable(alpha, beta))
    throw Error(ErrorKind::StructureError,
                "action on non-composable pair " + pair_name(cat, alpha, beta));
  auto tgt = cat.compose(alpha, beta);
  if (!tgt) {
    if (!vec_is_zero(coords))
      throw Error(ErrorKind::StructureError, "nonzero action into an absorbed component");
    return;
  }
  const std::size_t da = alg_->dim(alpha), db = dim(beta), dt = dim(*tgt);
  if (i >= da || j >= db || coords.size() != dt)
    throw Error(ErrorKind::DimensionMismatch, "set_action on " + pair_name(cat, alpha, beta));
  auto& table = action_[{alpha, beta}];
  if (table.empty()) table.assign(da, std::vector<Vec>(db, vec_zero(field(), dt)));
  table[i][j] = coords;
}

std::optional<std::pair<int, Vec>> GradedModule::basis_action(int alpha, std::size_t i, int beta,
                                                              std::size_t j) const {
  auto tgt = category().compose(alpha, beta);
  if (!tgt) return std::nullopt;
  auto it = action_.find({alpha, beta});
  if (it == action_.end()) return std::make_pair(*tgt, vec_zero(field(), dim(*tgt)));
  return std::make_pair(*tgt, it->second[i][j]);
}

std::optional<std::pair<int, Vec>> GradedModule::act(int alpha, const Vec& a, int beta,
                                                     const Vec& m) const {
  auto tgt = category().compose(alpha, beta);
  if (!tgt) return std::nullopt;
  Vec out = vec_zero(field(), dim(*tgt));
  auto it = action_.find({alpha, beta});
  if (it != action_.end()) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < m.size(); ++j) {
        if (m[j].is_zero()) continue;
        Scalar c = a[i] * m[j];
        const Vec& p = it->second[i][j];
        for (std::size_t k = 0; k < out.size(); ++k)
          if (!p[k].is_zero()) out[k] += c * p[k];
      }
    }
  }
  return std::make_pair(*tgt, out);
}

GradedReport GradedModule::validate() const {
  GradedReport rep;
  auto add = [&](const std::string& code, const std::string& msg) {
    rep.violations.push_back(GradedViolation{code, msg});
  };
  const IndexCategory& cat = category();
  const auto msupport = comps_.support();
  const auto asupport = alg_->support();

  // e_t m = m
  for (int g : msupport) {
    const Arrow& ar = cat.arrow(g);
    if (!alg_->has_local_unit(ar.tgt)) {
      add("unit", "missing local unit e_" + ar.tgt + " for module component " + ar.id);
      continue;
    }
    int et = cat.identity_arrow(ar.tgt);
    for (std::size_t j = 0; j < dim(g); ++j) {
      Vec basis = vec_unit(field(), dim(g), j);
      auto r = act(et, alg_->local_unit(ar.tgt), g, basis);
      if (!r || r->second != basis)
        add("unit-law", "e_" + ar.tgt + " m != m at component " + ar.id + ", basis " +
                            std::to_string(j));
    }
  }

  // a(bm) = (ab)m on representable triples
  for (int a : asupport)
    for (int b : asupport) {
      if (!cat.composable(a, b)) continue;
      auto ab = cat.compose(a, b);
      for (int g : msupport) {
        if (!cat.composable(b, g)) continue;
        auto bg = cat.compose(b, g);
        if (!ab || !bg) continue;
        for (std::size_t i = 0; i < alg_->dim(a); ++i)
          for (std::size_t j = 0; j < alg_->dim(b); ++j) {
            auto ab_val = alg_->basis_product(a, i, b, j);
            for (std::size_t k = 0; k < dim(g); ++k) {
              auto bm = basis_action(b, j, g, k);
              auto left = act(*ab, ab_val->second, g, vec_unit(field(), dim(g), k));
              auto right = act(a, vec_unit(field(), alg_->dim(a), i), *bg, bm->second);
              bool lz = !left || vec_is_zero(left->second);
              bool rz = !right || vec_is_zero(right->second);
              if (lz && rz) continue;
              if (lz != rz || left->second != right->second)
                add("associativity", "a(bm) != (ab)m at arrows (" + cat.arrow(a).id + ", " +
                                         cat.arrow(b).id + ", " + cat.arrow(g).id + "), basis (" +
                                         std::to_string(i) + "," + std::to_string(j) + "," +
                                         std::to_string(k) + ")");
            }
          }
      }
    }
  return rep;
}

GradedHom::GradedHom(std::shared_ptr<const GradedModule> src,
                     std::shared_ptr<const GradedModule> tgt)
    : src_(std::move(src)), tgt_(std::move(tgt)) {
  require_same_field(src_->field(), tgt_->field());
}

GradedHom GradedHom::identity(std::shared_ptr<const GradedModule> m) {
  GradedHom h(m, m);
  for (int g : m->support()) h.set_component(g, Matrix::identity(m->field(), m->dim(g)));
  return h;
}

void GradedHom::set_component(int arrow, const Matrix& m) {
  if (m.rows() != tgt_->dim(arrow) || m.cols() != src_->dim(arrow))
    throw Error(ErrorKind::DimensionMismatch, "hom component shape");
  if (m.is_zero())
    comps_.erase(arrow);
  else
    comps_.insert_or_assign(arrow, m);
}

Matrix GradedHom::component(int arrow) const {
  auto it = comps_.find(arrow);
  if (it != comps_.end()) return it->second;
  return Matrix(src_->field(), tgt_->dim(arrow), src_->dim(arrow));
}

GradedHom GradedHom::compose_after(const GradedHom& first) const {
  GradedHom h(first.src_, tgt_);
  for (int g : first.src_->support()) {
    Matrix m = component(g) * first.component(g);
    if (!m.is_zero()) h.set_component(g, m);
  }
  return h;
}

GradedHom GradedHom::operator+(const GradedHom& o) const {
  GradedHom h(src_, tgt_);
  for (int g : src_->support()) {
    Matrix m = component(g) + o.component(g);
    if (!m.is_zero()) h.set_component(g, m);
  }
  return h;
}

GradedHom GradedHom::scaled(const Scalar& c) const {
  GradedHom h(src_, tgt_);
  for (const auto& [g, m] : comps_) {
    Matrix s = m.scaled(c);
    if (!s.is_zero()) h.set_component(g, s);
  }
  return h;
}

bool GradedHom::is_zero() const {
  for (const auto& [g, m] : comps_)
    if (!m.is_zero()) return false;
  return true;
}

bool GradedHom::operator==(const GradedHom& o) const {
  for (int g : src_->support())
    if (!(component(g) == o.component(g))) return false;
  return true;
}

bool GradedHom::is_surjective() const {
  for (int g : tgt_->support())
    if (rank(component(g)) != tgt_->dim(g)) return false;
  return true;
}

GradedReport GradedHom::validate() const {
  GradedReport rep;
  const IndexCategory& cat = src_->category();
  const GradedAlgebra& alg = src_->algebra();
  for (int a : alg.support())
    for (int b : src_->support()) {
      if (!cat.composable(a, b)) continue;
      auto ab = cat.compose(a, b);
      if (!ab) continue;
      for (std::size_t i = 0; i < alg.dim(a); ++i)
        for (std::size_t j = 0; j < src_->dim(b); ++j) {
          auto am = src_->basis_action(a, i, b, j);
          Vec lhs = component(*ab).apply(am->second);
          Vec fm = component(b).apply(vec_unit(src_->field(), src_->dim(b), j));
          auto rhs = tgt_->act(a, vec_unit(src_->field(), alg.dim(a), i), b, fm);
          Vec rhs_v = rhs ? rhs->second : vec_zero(src_->field(), tgt_->dim(*ab));
          if (lhs != rhs_v)
            rep.violations.push_back(GradedViolation{
                "equivariance", "f(am) != a f(m) at arrows " + pair_name(cat, a, b) + ", basis (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")"});
        }
    }
  return rep;
}

Vec GradedHom::flatten() const {
  Vec out;
  for (const auto& [g, labels] : src_->space().components) {
    (void)labels;
    Matrix m = component(g);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.at(i, j));
  }
  if (out.empty()) out = vec_zero(src_->field(), 0);
  return out;
}

GradedHom GradedHom::unflatten(std::shared_ptr<const GradedModule> src,
                               std::shared_ptr<const GradedModule> tgt, const Vec& coords) {
  GradedHom h(src, tgt);
  std::size_t pos = 0;
  for (const auto& [g, labels] : src->space().components) {
    (void)labels;
    Matrix m(src->field(), tgt->dim(g), src->dim(g));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = coords[pos++];
    if (!m.is_zero()) h.set_component(g, m);
  }
  if (pos != coords.size()) throw Error(ErrorKind::DimensionMismatch, "unflatten length");
  return h;
}

/// ---- free functor -------------------------------------------------------

FreeModule free_module(std::shared_ptr<const GradedAlgebra> a, const GradedVectorSpace& v) {
  const IndexCategory& cat = a->category();
  const Field& f = a->field();
  auto mod = std::make_shared<GradedModule>(a);

  FreeModule out;
  std::map<int, std::map<std::tuple<int, std::size_t, int, std::size_t>, std::size_t>> index;

  for (std::size_t g = 0; g < cat.arrow_count(); ++g) {
    std::vector<FreeBasisElem> elems;
    std::vector<std::string> labels;
    for (auto [alpha, beta] : cat.factorizations(static_cast<int>(g))) {
      const std::size_t da = a->dim(alpha), dv = v.dim(beta);
      if (da == 0 || dv == 0) continue;
      for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < dv; ++j) {
          index[g][{alpha, i, beta, j}] = elems.size();
          elems.push_back(FreeBasisElem{alpha, i, beta, j});
          labels.push_back(a->space().components.at(alpha)[i] + "(x)" +
                           v.components.at(beta)[j]);
        }
    }
    if (!elems.empty()) {
      mod->set_component(static_cast<int>(g), labels);
      out.basis[static_cast<int>(g)] = std::move(elems);
    }
  }

  // action r_{delta,gamma} restricted to A_delta (x) A_alpha (x) V_beta is
  // mu_{delta,alpha} (x) V_beta
  for (const auto& [g, elems] : out.basis) {
    for (int delta : a->support()) {
      if (!cat.composable(delta, g)) continue;
      auto dg = cat.compose(delta, g);
      if (!dg || !out.basis.count(*dg)) continue;
      const auto& tgt_index = index.at(*dg);
      for (std::size_t j = 0; j < elems.size(); ++j) {
        const FreeBasisElem& e = elems[j];
        for (std::size_t i = 0; i < a->dim(delta); ++i) {
          auto prod = a->basis_product(delta, i, e.alg_arrow, e.alg_index);
          if (!prod) continue;  // absorbed: contributes zero
          Vec coords = vec_zero(f, mod->dim(*dg));
          const auto& [target_arrow, pcoords] = *prod;
          for (std::size_t k = 0; k < pcoords.size(); ++k) {
            if (pcoords[k].is_zero()) continue;
            auto it = tgt_index.find({target_arrow, k, e.v_arrow, e.v_index});
            if (it == tgt_index.end())
              throw Error(ErrorKind::StructureError, "free module index bookkeeping");
            coords[it->second] += pcoords[k];
          }
          mod->set_action(delta, g, i, j, coords);
        }
      }
    }
  }
  out.module = mod;
  return out;
}

FreeModule generator_module(std::shared_ptr<const GradedAlgebra> a, int gamma) {
  GradedVectorSpace v;
  v.components[gamma] = {"[" + a->category().arrow(gamma).id + "]"};
  return free_module(std::move(a), v);
}

std::shared_ptr<const GradedModule> regular_graded_module(std::shared_ptr<const GradedAlgebra> a) {
  const IndexCategory& cat = a->category();
  auto m = std::make_shared<GradedModule>(a);
  for (int g : a->support()) m->set_component(g, a->space().components.at(g));
  for (int alpha : a->support())
    for (int beta : a->support()) {
      if (!cat.composable(alpha, beta)) continue;
      auto tgt = cat.compose(alpha, beta);
      if (!tgt) continue;
      for (std::size_t i = 0; i < a->dim(alpha); ++i)
        for (std::size_t j = 0; j < a->dim(beta); ++j) {
          auto prod = a->basis_product(alpha, i, beta, j);
          m->set_action(alpha, beta, i, j, prod->second);
        }
    }
  return m;
}

GradedHom counit(const FreeModule& free, std::shared_ptr<const GradedModule> m) {
  GradedHom eps(free.module, m);
  for (const auto& [g, elems] : free.basis) {
    Matrix comp(m->field(), m->dim(g), elems.size());
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const FreeBasisElem& e = elems[j];
      auto r = m->basis_action(e.alg_arrow, e.alg_index, e.v_arrow, e.v_index);
      if (!r) continue;
      for (std::size_t i = 0; i < r->second.size(); ++i) comp.at(i, j) = r->second[i];
    }
    if (!comp.is_zero()) eps.set_component(g, comp);
  }
  return eps;
}

CounitData counit_of(std::shared_ptr<const GradedModule> m) {
  FreeModule f = free_module(m->algebra_ptr(), m->space());
  GradedHom eps = counit(f, m);
  return CounitData{std::move(f), std::move(eps)};
}

/// ---- divisor spaces ------------------------------------------------------

DivisorSpace divisor_space(const GradedAlgebra& a, int gamma, int beta) {
  const IndexCategory& cat = a.category();
  if (gamma < 0 || gamma >= static_cast<int>(cat.arrow_count()) || beta < 0 ||
      beta >= static_cast<int>(cat.arrow_count()))
    throw Error(ErrorKind::StructureError, "divisor_space: arrow out of range");

  DivisorSpace out;
  out.gamma = gamma;
  out.beta = beta;
  std::size_t offset = 0;
  std::vector<int> alphas;
  for (std::size_t alpha = 0; alpha < cat.arrow_count(); ++alpha) {
    if (!cat.composable(static_cast<int>(alpha), beta)) continue;
    auto r = cat.compose(static_cast<int>(alpha), beta);
    if (!r || *r != gamma) continue;
    std::size_t d = a.dim(static_cast<int>(alpha));
    if (d == 0) continue;
    out.summands.push_back(DivisorSummand{static_cast<int>(alpha), d, offset});
    alphas.push_back(static_cast<int>(alpha));
    offset += d;
  }
  out.dim = offset;

  if (beta == gamma) {
    const Field& f = a.field();
    std::vector<std::string> labels;
    for (const auto& s : out.summands)
      for (std::size_t i = 0; i < s.dim; ++i)
        labels.push_back(cat.arrow(s.alpha).id + ":" + a.space().components.at(s.alpha)[i]);
    Algebra ring(f, out.dim, labels);
    for (std::size_t si = 0; si < out.summands.size(); ++si)
      for (std::size_t sj = 0; sj < out.summands.size(); ++sj) {
        const auto& A = out.summands[si];
        const auto& B = out.summands[sj];
        for (std::size_t i = 0; i < A.dim; ++i)
          for (std::size_t j = 0; j < B.dim; ++j) {
            auto prod = a.basis_product(A.alpha, i, B.alpha, j);
            Vec coords = vec_zero(f, out.dim);
            if (prod) {
              // locate the target summand (alpha.alpha' also right-divides gamma)
              for (const auto& t : out.summands)
                if (t.alpha == prod->first) {
                  for (std::size_t k = 0; k < prod->second.size(); ++k)
                    coords[t.offset + k] = prod->second[k];
                  break;
                }
            }
            ring.set_product(A.offset + i, B.offset + j, coords);
          }
      }
    // unit e_t, t = tgt(gamma); the identity arrow 1_t is one of the summands
    const std::string& t = cat.arrow(gamma).tgt;
    int id_arrow = cat.identity_arrow(t);
    Vec unit = vec_zero(f, out.dim);
    const Vec& e = a.local_unit(t);
    for (const auto& s : out.summands)
      if (s.alpha == id_arrow)
        for (std::size_t k = 0; k < e.size(); ++k) unit[s.offset + k] = e[k];
    ring.set_unit(unit);
    out.ring = std::move(ring);
  }
  return out;
}

/// ---- hom spaces ----------------------------------------------------------

std::vector<GradedHom> hom_space(std::shared_ptr<const GradedModule> m,
                                 std::shared_ptr<const GradedModule> n) {
  if (m->algebra_ptr().get() != n->algebra_ptr().get())
    throw Error(ErrorKind::StructureError, "hom_space requires a common algebra");
  const IndexCategory& cat = m->category();
  const GradedAlgebra& alg = m->algebra();
  const Field& f = m->field();

  // unknown layout: components f_g for arrows g in source support order
  std::map<int, std::size_t> offset;
  std::size_t total = 0;
  for (const auto& [g, labels] : m->space().components) {
    (void)labels;
    offset[g] = total;
    total += n->dim(g) * m->dim(g);
  }

  std::vector<Vec> rows;
  for (int a : alg.support())
    for (const auto& [b, labels] : m->space().components) {
      (void)labels;
      if (!cat.composable(a, b)) continue;
      auto ab = cat.compose(a, b);
      if (!ab) continue;
      const std::size_t dn_ab = n->dim(*ab), dm_ab = m->dim(*ab);
      const std::size_t dn_b = n->dim(b), dm_b = m->dim(b);
      for (std::size_t i = 0; i < alg.dim(a); ++i) {
        // action matrices of basis a_i on the relevant components
        for (std::size_t j = 0; j < dm_b; ++j) {
          auto am = m->basis_action(a, i, b, j);  // coords in M_{ab}
          // constraint rows: f_{ab}(am) - a f_b(e_j) = 0, one per target coord
          for (std::size_t r = 0; r < dn_ab; ++r) {
            Vec row = vec_zero(f, total);
            bool nontrivial = false;
            if (dm_ab > 0 && m->space().components.count(*ab)) {
              for (std::size_t c = 0; c < dm_ab; ++c) {
                if (am->second[c].is_zero()) continue;
                row[offset.at(*ab) + r * dm_ab + c] += am->second[c];
                nontrivial = true;
              }
            }
            // a . f_b(e_j): f_b(e_j) = sum_t f[t][j] n-basis_t
            for (std::size_t t = 0; t < dn_b; ++t) {
              auto anb = n->act(a, vec_unit(f, alg.dim(a), i), b, vec_unit(f, dn_b, t));
              if (!anb) continue;
              if (!anb->second[r].is_zero()) {
                row[offset.at(b) + t * dm_b + j] -= anb->second[r];
                nontrivial = true;
              }
            }
            if (nontrivial) rows.push_back(row);
          }
        }
      }
    }

  Matrix sys = rows.empty() ? Matrix(f, 0, total) : Matrix::from_rows(f, total, rows);
  Matrix ker = total == 0 ? Matrix(f, 0, 0) : kernel_basis(sys);
  std::vector<GradedHom> out;
  for (std::size_t r = 0; r < ker.rows(); ++r) out.push_back(GradedHom::unflatten(m, n, ker.row(r)));
  return out;
}

EndAlgebra end_algebra(std::shared_ptr<const GradedModule> d) {
  std::vector<GradedHom> basis = hom_space(d, d);
  if (basis.empty()) throw Error(ErrorKind::StructureError, "zero endomorphism algebra");
  const Field& f = d->field();
  std::vector<Vec> flat;
  for (const auto& h : basis) flat.push_back(h.flatten());
  Matrix fb = Matrix::from_rows(f, flat[0].size(), flat);

  Algebra alg(f, basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      GradedHom comp = basis[j].compose_after(basis[i]);  // x.y = apply x first
      alg.set_product(i, j, coordinates_in_basis(fb, comp.flatten()));
    }
  alg.set_unit(coordinates_in_basis(fb, GradedHom::identity(d).flatten()));
  return EndAlgebra{std::make_shared<Algebra>(std::move(alg)), std::move(basis), fb};
}

/// ---- submodules, quotients, direct sums ----------------------------------

GradedSub graded_submodule(std::shared_ptr<const GradedModule> m,
                           const std::map<int, Matrix>& bases_in) {
  const IndexCategory& cat = m->category();
  const GradedAlgebra& alg = m->algebra();
  const Field& f = m->field();
  std::map<int, Matrix> bases;
  for (const auto& [g, b] : bases_in) {
    Matrix r = row_space_basis(b);
    if (r.rows() > 0) bases.emplace(g, r);
  }
  auto sub = std::make_shared<GradedModule>(m->algebra_ptr());
  for (const auto& [g, b] : bases) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < b.rows(); ++i)
      labels.push_back("s" + std::to_string(i) + "@" + cat.arrow(g).id);
    sub->set_component(g, labels);
  }
  // induced action; closedness check
  for (int a : alg.support())
    for (const auto& [g, b] : bases) {
      if (!cat.composable(a, g)) continue;
      auto ag = cat.compose(a, g);
      if (!ag) continue;
      const std::size_t target_dim = sub->dim(*ag);
      for (std::size_t i = 0; i < alg.dim(a); ++i)
        for (std::size_t j = 0; j < b.rows(); ++j) {
          auto img = m->act(a, vec_unit(f, alg.dim(a), i), g, b.row(j));
          if (!img || vec_is_zero(img->second)) {
            if (target_dim > 0) sub->set_action(a, g, i, j, vec_zero(f, target_dim));
            continue;
          }
          auto it = bases.find(*ag);
          if (it == bases.end() || !subspace_contains(it->second, img->second))
            throw Error(ErrorKind::StructureError,
                        "subspace is not action-closed at arrow " + cat.arrow(*ag).id);
          sub->set_action(a, g, i, j, coordinates_in_basis(it->second, img->second));
        }
    }
  GradedHom incl(sub, m);
  for (const auto& [g, b] : bases) incl.set_component(g, b.transpose());
  return GradedSub{sub, incl};
}

GradedQuot graded_quotient(std::shared_ptr<const GradedModule> m,
                           const std::map<int, Matrix>& bases_in) {
  const IndexCategory& cat = m->category();
  const GradedAlgebra& alg = m->algebra();
  const Field& f = m->field();

  std::map<int, Matrix> bases;
  for (const auto& [g, b] : bases_in) {
    Matrix r = row_space_basis(b);
    if (r.rows() > 0) bases.emplace(g, r);
  }

  // per-degree projections to complement coordinates
  std::map<int, Matrix> proj;
  auto quot = std::make_shared<GradedModule>(m->algebra_ptr());
  for (const auto& [g, labels] : m->space().components) {
    (void)labels;
    const std::size_t d = m->dim(g);
    Matrix sub = bases.count(g) ? bases.at(g) : Matrix(f, 0, d);
    RrefResult rr = rref(sub);
    std::vector<bool> is_pivot(d, false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;
    std::vector<std::size_t> comp;
    for (std::size_t c = 0; c < d; ++c)
      if (!is_pivot[c]) comp.push_back(c);
    Matrix p(f, comp.size(), d);
    for (std::size_t c = 0; c < d; ++c) {
      Vec x = vec_unit(f, d, c);
      for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
        Scalar s = x[rr.pivots[i]];
        if (!s.is_zero()) x = vec_sub(x, vec_scale(s, rr.mat.row(i)));
      }
      for (std::size_t q = 0; q < comp.size(); ++q) p.at(q, c) = x[comp[q]];
    }
    proj.emplace(g, p);
    if (!comp.empty()) {
      std::vector<std::string> qlabels;
      for (std::size_t q = 0; q < comp.size(); ++q)
        qlabels.push_back("q" + std::to_string(q) + "@" + cat.arrow(g).id);
      quot->set_component(g, qlabels);
    }
  }

  for (int a : alg.support())
    for (const auto& [g, labels] : m->space().components) {
      (void)labels;
      if (!cat.composable(a, g) || quot->dim(g) == 0) continue;
      auto ag = cat.compose(a, g);
      if (!ag || quot->dim(*ag) == 0) continue;
      // section: lift quotient basis q of degree g to m, act, project
      const Matrix& pg = proj.at(g);
      // build a right inverse of pg: columns = preimages of quotient basis
      Matrix section(f, m->dim(g), quot->dim(g));
      {
        RrefResult rr = rref(bases.count(g) ? bases.at(g) : Matrix(f, 0, m->dim(g)));
        std::vector<bool> is_pivot(m->dim(g), false);
        for (std::size_t c : rr.pivots) is_pivot[c] = true;
        std::size_t q = 0;
        for (std::size_t c = 0; c < m->dim(g); ++c)
          if (!is_pivot[c]) section.at(c, q++) = Scalar::one(f);
      }
      for (std::size_t i = 0; i < alg.dim(a); ++i)
        for (std::size_t j = 0; j < quot->dim(g); ++j) {
          Vec lift = section.transpose().row(j);
          auto img = m->act(a, vec_unit(f, alg.dim(a), i), g, lift);
          Vec coords = img ? proj.at(*ag).apply(img->second) : vec_zero(f, quot->dim(*ag));
          quot->set_action(a, g, i, j, coords);
        }
      (void)pg;
    }

  GradedHom projection(m, quot);
  for (const auto& [g, p] : proj)
    if (p.rows() > 0 && !p.is_zero()) projection.set_component(g, p);
  return GradedQuot{quot, projection};
}

GradedSum graded_direct_sum(const std::vector<std::shared_ptr<const GradedModule>>& parts) {
  if (parts.empty()) throw Error(ErrorKind::StructureError, "empty direct sum");
  auto alg = parts[0]->algebra_ptr();
  const Field& f = parts[0]->field();
  const IndexCategory& cat = parts[0]->category();
  auto sum = std::make_shared<GradedModule>(alg);

  std::map<int, std::vector<std::size_t>> offsets;  // per arrow, per part
  for (std::size_t g = 0; g < cat.arrow_count(); ++g) {
    std::vector<std::string> labels;
    std::vector<std::size_t> offs;
    for (std::size_t p = 0; p < parts.size(); ++p) {
      offs.push_back(labels.size());
      for (std::size_t i = 0; i < parts[p]->dim(static_cast<int>(g)); ++i)
        labels.push_back("p" + std::to_string(p) + "." +
                         parts[p]->space().components.at(static_cast<int>(g))[i]);
    }
    if (!labels.empty()) {
      sum->set_component(static_cast<int>(g), labels);
      offsets[static_cast<int>(g)] = offs;
    }
  }

  for (int a : alg->support())
    for (const auto& [g, offs] : offsets) {
      if (!cat.composable(a, g)) continue;
      auto ag = cat.compose(a, g);
      if (!ag || sum->dim(*ag) == 0) continue;
      for (std::size_t p = 0; p < parts.size(); ++p) {
        for (std::size_t i = 0; i < alg->dim(a); ++i)
          for (std::size_t j = 0; j < parts[p]->dim(g); ++j) {
            auto img = parts[p]->basis_action(a, i, g, j);
            Vec coords = vec_zero(f, sum->dim(*ag));
            if (img && offsets.count(*ag)) {
              std::size_t off = offsets.at(*ag)[p];
              for (std::size_t k = 0; k < img->second.size(); ++k)
                coords[off + k] = img->second[k];
            }
            sum->set_action(a, g, i, offs[p] + j, coords);
          }
      }
    }

  GradedSum out{sum, {}, {}};
  for (std::size_t p = 0; p < parts.size(); ++p) {
    GradedHom inj(parts[p], sum), prj(sum, parts[p]);
    for (const auto& [g, offs] : offsets) {
      const std::size_t dp = parts[p]->dim(g);
      if (dp == 0) continue;
      Matrix mi(f, sum->dim(g), dp), mp(f, dp, sum->dim(g));
      for (std::size_t i = 0; i < dp; ++i) {
        mi.at(offs[p] + i, i) = Scalar::one(f);
        mp.at(i, offs[p] + i) = Scalar::one(f);
      }
      inj.set_component(g, mi);
      prj.set_component(g, mp);
    }
    out.inject.push_back(inj);
    out.project.push_back(prj);
  }
  return out;
}

/// ---- poset-graded construction -------------------------------------------

PosetGradedResult build_poset_graded(
    const Algebra& a, const std::map<std::string, Vec>& idempotents,
    const std::vector<std::string>& elements,
    const std::vector<std::pair<std::string, std::string>>& leq) {
  const Field& f = a.field();
  // family checks: idempotent, orthogonal, complete
  Vec sum = vec_zero(f, a.dim());
  for (const auto& [name, e] : idempotents) {
    if (!a.is_idempotent(e))
      throw Error(ErrorKind::IdempotentError, "e_" + name + " is not idempotent");
    sum = vec_add(sum, e);
  }
  for (const auto& [n1, e1] : idempotents)
    for (const auto& [n2, e2] : idempotents) {
      if (n1 == n2) continue;
      if (!vec_is_zero(a.multiply(e1, e2)))
        throw Error(ErrorKind::IdempotentError, "e_" + n1 + " e_" + n2 + " != 0");
    }
  if (sum != a.unit())
    throw Error(ErrorKind::IdempotentError, "idempotent family does not sum to the unit");
  for (const auto& el : elements)
    if (!idempotents.count(el))
      throw Error(ErrorKind::IdempotentError, "missing idempotent for poset element '" + el + "'");

  auto cat = std::make_shared<IndexCategory>(IndexCategory::from_poset(elements, leq));

  // corners e_mu A e_lambda, triangularity, graded components
  auto alg = std::make_shared<GradedAlgebra>(cat, f);
  std::map<int, Matrix> corner_bases;
  for (const auto& mu : elements)
    for (const auto& lambda : elements) {
      std::vector<Vec> rows;
      for (std::size_t k = 0; k < a.dim(); ++k)
        rows.push_back(
            a.multiply(a.multiply(idempotents.at(mu), vec_unit(f, a.dim(), k)), idempotents.at(lambda)));
      Matrix corner = row_space_basis(Matrix::from_rows(f, a.dim(), rows));
      if (corner.rows() == 0) continue;
      if (!cat->poset_leq(lambda, mu))
        throw Error(ErrorKind::TriangularityViolation,
                    "e_" + mu + " A e_" + lambda + " is nonzero but " + mu + " >= " + lambda +
                        " fails");
      int arrow = cat->arrow_index(mu + "|" + lambda);
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < corner.rows(); ++i)
        labels.push_back(mu + "|" + lambda + ":" + std::to_string(i));
      alg->set_component(arrow, labels);
      corner_bases.emplace(arrow, corner);
    }

  // products [[x]][[y]] = [[xy]]
  for (const auto& [ar1, b1] : corner_bases)
    for (const auto& [ar2, b2] : corner_bases) {
      if (!cat->composable(ar1, ar2)) continue;
      auto tgt = cat->compose(ar1, ar2);
      if (!tgt) continue;
      for (std::size_t i = 0; i < b1.rows(); ++i)
        for (std::size_t j = 0; j < b2.rows(); ++j) {
          Vec prod = a.multiply(b1.row(i), b2.row(j));
          if (corner_bases.count(*tgt)) {
            alg->set_product(ar1, ar2, i, j,
                             coordinates_in_basis(corner_bases.at(*tgt), prod));
          } else if (!vec_is_zero(prod)) {
            throw Error(ErrorKind::StructureError, "corner product escapes its target corner");
          }
        }
    }

  for (const auto& el : elements) {
    int id_arrow = cat->identity_arrow(el);
    if (!corner_bases.count(id_arrow)) continue;  // zero corner: no unit needed
    alg->set_local_unit(el, coordinates_in_basis(corner_bases.at(id_arrow), idempotents.at(el)));
  }

  return PosetGradedResult{cat, alg, corner_bases};
}

}  // namespace gradalg
