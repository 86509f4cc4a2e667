/**
 * @file total_hom.cpp
 * @copyright Apache License 2.0
 */
#include "gradalg/total_hom.hpp"

namespace gradalg {

TotalHomAlgebra::TotalHomAlgebra(std::shared_ptr<const GradedAlgebra> a, std::vector<int> gens)
    : graded_(std::move(a)), gens_(std::move(gens)) {
  const IndexCategory& cat = graded_->category();
  const Field& f = graded_->field();
  if (gens_.empty()) throw Error(ErrorKind::StructureError, "empty generator list");

  // flat basis: for each ordered block (i, j), the summands of A(g_i : g_j)
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = 0; j < gens_.size(); ++j) {
      DivisorSpace d = divisor_space(*graded_, gens_[i], gens_[j]);
      for (const auto& s : d.summands)
        for (std::size_t p = 0; p < s.dim; ++p) {
          info_.push_back(BasisInfo{i, j, s.alpha, p});
          labels.push_back(cat.arrow(gens_[j]).id + "->" + cat.arrow(gens_[i]).id + ":" +
                           cat.arrow(s.alpha).id + "." + std::to_string(p));
        }
    }

  Algebra alg(f, info_.size(), labels);
  // product x.y (x first): defined when tgt-block of x equals src-block of y;
  // underlying arrows multiply through mu
  for (std::size_t x = 0; x < info_.size(); ++x)
    for (std::size_t y = 0; y < info_.size(); ++y) {
      const BasisInfo& bx = info_[x];
      const BasisInfo& by = info_[y];
      if (bx.gen_tgt != by.gen_src) continue;
      auto prod = graded_->basis_product(bx.alpha, bx.comp, by.alpha, by.comp);
      if (!prod) continue;  // absorbed
      Vec coords = vec_zero(f, info_.size());
      bool any = false;
      for (std::size_t z = 0; z < info_.size(); ++z) {
        const BasisInfo& bz = info_[z];
        if (bz.gen_src != bx.gen_src || bz.gen_tgt != by.gen_tgt || bz.alpha != prod->first)
          continue;
        if (!prod->second[bz.comp].is_zero()) {
          coords[z] = prod->second[bz.comp];
          any = true;
        }
      }
      if (any) alg.set_product(x, y, coords);
    }

  // unit: sum of block identities e_{tgt(gamma_i)} inside block (i, i)
  Vec unit = vec_zero(f, info_.size());
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    Vec u = block_unit_raw(i);
    unit = vec_add(unit, u);
  }
  alg.set_unit(unit);
  alg_ = std::make_shared<Algebra>(std::move(alg));

  for (int g : gens_) gen_modules_.push_back(generator_module(graded_, g));
}

Vec TotalHomAlgebra::block_unit_raw(std::size_t gen_index) const {
  const IndexCategory& cat = graded_->category();
  const Field& f = graded_->field();
  const std::string& t = cat.arrow(gens_[gen_index]).tgt;
  int id_arrow = cat.identity_arrow(t);
  const Vec& e = graded_->local_unit(t);
  Vec u = vec_zero(f, info_.size());
  for (std::size_t z = 0; z < info_.size(); ++z) {
    const BasisInfo& b = info_[z];
    if (b.gen_src == gen_index && b.gen_tgt == gen_index && b.alpha == id_arrow)
      u[z] = e[b.comp];
  }
  return u;
}

Vec TotalHomAlgebra::block_unit(std::size_t gen_index) const { return block_unit_raw(gen_index); }

TotalHomAlgebra TotalHomAlgebra::over_all_arrows(std::shared_ptr<const GradedAlgebra> a) {
  std::vector<int> gens;
  for (std::size_t i = 0; i < a->category().arrow_count(); ++i) gens.push_back(static_cast<int>(i));
  return TotalHomAlgebra(std::move(a), gens);
}

TotalHomAlgebra::Transported TotalHomAlgebra::to_total(
    std::shared_ptr<const GradedModule> m) const {
  const Field& f = graded_->field();
  std::map<int, std::size_t> gen_pos;
  for (std::size_t i = 0; i < gens_.size(); ++i) gen_pos[gens_[i]] = i;
  for (int g : m->support())
    if (!gen_pos.count(g))
      throw Error(ErrorKind::InfiniteSupport,
                  "module has a component at arrow '" + m->category().arrow(g).id +
                      "' outside the generator family");

  std::vector<std::size_t> offsets(gens_.size(), 0);
  std::size_t total = 0;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    offsets[i] = total;
    total += m->dim(gens_[i]);
  }

  AlgebraModule mod(alg_, total);
  for (std::size_t z = 0; z < info_.size(); ++z) {
    const BasisInfo& b = info_[z];
    const int gj = gens_[b.gen_tgt];  // phi lives in Hom(A[g_j], M), block column
    const int gi = gens_[b.gen_src];
    const std::size_t dj = m->dim(gj), di = m->dim(gi);
    if (dj == 0 || di == 0) continue;
    Matrix act(f, total, total);
    for (std::size_t q = 0; q < dj; ++q) {
      auto img = m->basis_action(b.alpha, b.comp, gj, q);
      if (!img) continue;
      if (img->first != gi)
        throw Error(ErrorKind::StructureError, "transported action lands in the wrong block");
      for (std::size_t r = 0; r < di; ++r)
        act.at(offsets[b.gen_src] + r, offsets[b.gen_tgt] + q) = img->second[r];
    }
    mod.set_action(z, act);
  }
  return Transported{std::move(mod), std::move(offsets), m};
}

TotalHomAlgebra::GradedView TotalHomAlgebra::view_as_graded(const AlgebraModule& mod) const {
  const Field& f = graded_->field();
  const IndexCategory& cat = graded_->category();

  // block subspaces 1_i . M
  std::map<int, Matrix> bases;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    Matrix img = mod.act(block_unit(i));
    Matrix basis = row_space_basis(img.transpose());
    if (basis.rows() > 0) bases.emplace(gens_[i], basis);
  }

  auto gm = std::make_shared<GradedModule>(graded_);
  for (const auto& [g, b] : bases) {
    std::vector<std::string> labels;
    for (std::size_t t = 0; t < b.rows(); ++t)
      labels.push_back("t" + std::to_string(t) + "@" + cat.arrow(g).id);
    gm->set_component(g, labels);
  }

  // graded action through the matching flat basis elements
  std::map<int, std::size_t> gen_pos;
  for (std::size_t i = 0; i < gens_.size(); ++i) gen_pos[gens_[i]] = i;
  for (int alpha : graded_->support())
    for (const auto& [gj, bj] : bases) {
      if (!cat.composable(alpha, gj)) continue;
      auto tgt = cat.compose(alpha, gj);
      if (!tgt || !gen_pos.count(*tgt)) continue;
      auto it = bases.find(*tgt);
      for (std::size_t p = 0; p < graded_->dim(alpha); ++p) {
        // find the flat basis element (tgt-block <- gj-block, alpha, p)
        int flat_index = -1;
        for (std::size_t z = 0; z < info_.size(); ++z) {
          const BasisInfo& b = info_[z];
          if (gens_[b.gen_src] == *tgt && gens_[b.gen_tgt] == gj && b.alpha == alpha &&
              b.comp == p) {
            flat_index = static_cast<int>(z);
            break;
          }
        }
        for (std::size_t q = 0; q < bj.rows(); ++q) {
          Vec img = flat_index < 0
                        ? vec_zero(f, mod.dim())
                        : mod.action(static_cast<std::size_t>(flat_index)).apply(bj.row(q));
          if (vec_is_zero(img)) {
            if (it != bases.end())
              gm->set_action(alpha, gj, p, q, vec_zero(f, it->second.rows()));
            continue;
          }
          if (it == bases.end())
            throw Error(ErrorKind::StructureError, "block action escapes the block decomposition");
          gm->set_action(alpha, gj, p, q, coordinates_in_basis(it->second, img));
        }
      }
    }

  GradedView out;
  out.module = gm;
  out.block_bases = std::move(bases);
  return out;
}

GradedHom TotalHomAlgebra::hom_as_graded(const Matrix& flat_hom, const GradedView& src,
                                         const GradedView& tgt) const {
  GradedHom h(src.module, tgt.module);
  for (const auto& [g, sb] : src.block_bases) {
    auto it = tgt.block_bases.find(g);
    const std::size_t trows = it == tgt.block_bases.end() ? 0 : it->second.rows();
    Matrix comp(graded_->field(), trows, sb.rows());
    for (std::size_t q = 0; q < sb.rows(); ++q) {
      Vec img = flat_hom.apply(sb.row(q));
      if (vec_is_zero(img)) continue;
      if (it == tgt.block_bases.end())
        throw Error(ErrorKind::StructureError, "hom image escapes the target blocks");
      Vec coords = coordinates_in_basis(it->second, img);
      for (std::size_t r = 0; r < trows; ++r) comp.at(r, q) = coords[r];
    }
    if (trows > 0 && !comp.is_zero()) h.set_component(g, comp);
  }
  return h;
}

Matrix TotalHomAlgebra::hom_to_total(const GradedHom& h, const Transported& src,
                                     const Transported& tgt) const {
  const Field& f = graded_->field();
  Matrix out(f, tgt.mod.dim(), src.mod.dim());
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const int g = gens_[i];
    Matrix comp = h.component(g);
    for (std::size_t r = 0; r < comp.rows(); ++r)
      for (std::size_t c = 0; c < comp.cols(); ++c)
        out.at(tgt.offsets[i] + r, src.offsets[i] + c) = comp.at(r, c);
  }
  return out;
}

}  // namespace gradalg
