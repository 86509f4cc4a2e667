#include "support/fixtures.hpp"

namespace gradalg::fixtures {

Algebra truncated_poly(const Field& f, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : "x^" + std::to_string(i));
  Algebra a(f, n, labels);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i + j < n) a.set_product(i, j, vec_unit(f, n, i + j));
  a.set_unit(vec_unit(f, n, 0));
  return a;
}

Algebra triangular(const Field& f, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> units;  // (i, j), i >= j
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= i; ++j) {
      units.emplace_back(i, j);
      labels.push_back("u" + std::to_string(i) + std::to_string(j));
    }
  const std::size_t d = units.size();
  auto find = [&](std::size_t i, std::size_t j) -> int {
    for (std::size_t k = 0; k < d; ++k)
      if (units[k] == std::make_pair(i, j)) return static_cast<int>(k);
    return -1;
  };
  Algebra a(f, d, labels);
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) {
      auto [i, j] = units[p];
      auto [k, l] = units[q];
      if (j == k) a.set_product(p, q, vec_unit(f, d, find(i, l)));
    }
  Vec unit = vec_zero(f, d);
  for (std::size_t i = 1; i <= n; ++i) unit[find(i, i)] = Scalar::one(f);
  a.set_unit(unit);
  return a;
}

Algebra product_kk(const Field& f) {
  Algebra a(f, 2, {"e1", "e2"});
  a.set_product(0, 0, vec_unit(f, 2, 0));
  a.set_product(1, 1, vec_unit(f, 2, 1));
  Vec unit = vec_add(vec_unit(f, 2, 0), vec_unit(f, 2, 1));
  a.set_unit(unit);
  return a;
}

Algebra group_algebra_zn(const Field& f, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "e" : "g^" + std::to_string(i));
  Algebra a(f, n, labels);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.set_product(i, j, vec_unit(f, n, (i + j) % n));
  a.set_unit(vec_unit(f, n, 0));
  return a;
}

Algebra full_matrix(const Field& f, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  const std::size_t d = n * n;
  Algebra a(f, d, labels);
  auto idx = [&](std::size_t i, std::size_t j) { return i * n + j; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          if (j == k) a.set_product(idx(i, j), idx(k, l), vec_unit(f, d, idx(i, l)));
  Vec unit = vec_zero(f, d);
  for (std::size_t i = 0; i < n; ++i) unit[idx(i, i)] = Scalar::one(f);
  a.set_unit(unit);
  return a;
}

Algebra quadratic_extension(const Field& f) {
  Algebra a(f, 2, {"1", "i"});
  a.set_product(0, 0, vec_unit(f, 2, 0));
  a.set_product(0, 1, vec_unit(f, 2, 1));
  a.set_product(1, 0, vec_unit(f, 2, 1));
  a.set_product(1, 1, vec_scale(-Scalar::one(f), vec_unit(f, 2, 0)));
  a.set_unit(vec_unit(f, 2, 0));
  return a;
}

GradedFixture one_object_field(const Field& f) {
  auto cat = std::make_shared<IndexCategory>(
      IndexCategory::explicit_finite({"*"}, {Arrow{"1", "*", "*"}}, {{"*", "1"}}, {}));
  auto alg = std::make_shared<GradedAlgebra>(cat, f);
  alg->set_component(0, {"1"});
  alg->set_product(0, 0, 0, 0, vec_unit(f, 1, 0));
  alg->set_local_unit("*", vec_unit(f, 1, 0));

  auto k = std::make_shared<GradedModule>(alg);
  k->set_component(0, {"m"});
  k->set_action(0, 0, 0, 0, vec_unit(f, 1, 0));

  GradedFixture fx;
  fx.name = "one_object_field/" + f.to_string();
  fx.cat = cat;
  fx.alg = alg;
  fx.modules["K"] = k;
  return fx;
}

GradedFixture nat_window_poly(const Field& f, long maxdeg, long reldeg) {
  std::vector<std::vector<long>> window;
  for (long k = 0; k <= maxdeg; ++k) window.push_back({k});
  auto cat = std::make_shared<IndexCategory>(
      IndexCategory::monoid_window(1, LatticeKind::Nat, window));
  auto alg = std::make_shared<GradedAlgebra>(cat, f);
  const long top = std::min(maxdeg, reldeg - 1);
  for (long k = 0; k <= top; ++k)
    alg->set_component(cat->arrow_index(std::to_string(k)), {"a" + std::to_string(k)});
  for (long i = 0; i <= top; ++i)
    for (long j = 0; j <= top; ++j) {
      if (i + j > maxdeg) continue;  // absorbed
      int ai = cat->arrow_index(std::to_string(i));
      int aj = cat->arrow_index(std::to_string(j));
      int at = cat->arrow_index(std::to_string(i + j));
      if (i + j <= top)
        alg->set_product(ai, aj, 0, 0, vec_unit(f, 1, 0));
      else
        alg->set_product(ai, aj, 0, 0, vec_zero(f, alg->dim(at)));
    }
  alg->set_local_unit("*", vec_unit(f, 1, 0));

  auto k0 = std::make_shared<GradedModule>(alg);
  int zero = cat->arrow_index("0");
  k0->set_component(zero, {"m"});
  k0->set_action(zero, zero, 0, 0, vec_unit(f, 1, 0));

  GradedFixture fx;
  fx.name = "nat_window_poly[0," + std::to_string(maxdeg) + "]/x^" + std::to_string(reldeg) +
            "/" + f.to_string();
  fx.cat = cat;
  fx.alg = alg;
  fx.modules["K0"] = k0;
  return fx;
}

GradedFixture group_z2_graded(const Field& f) {
  auto cat = std::make_shared<IndexCategory>(
      IndexCategory::from_group({"e", "g"}, {{"e", "g"}, {"g", "e"}}));
  auto alg = std::make_shared<GradedAlgebra>(cat, f);
  int e = cat->arrow_index("e"), g = cat->arrow_index("g");
  alg->set_component(e, {"1"});
  alg->set_component(g, {"g"});
  alg->set_product(e, e, 0, 0, vec_unit(f, 1, 0));
  alg->set_product(e, g, 0, 0, vec_unit(f, 1, 0));
  alg->set_product(g, e, 0, 0, vec_unit(f, 1, 0));
  alg->set_product(g, g, 0, 0, vec_unit(f, 1, 0));
  alg->set_local_unit("*", vec_unit(f, 1, 0));

  GradedFixture fx;
  fx.name = "group_z2_graded/" + f.to_string();
  fx.cat = cat;
  fx.alg = alg;
  return fx;
}

GradedFixture poset_triangular(const Field& f) {
  Algebra flat = triangular(f, 2);  // basis u11, u21, u22
  std::map<std::string, Vec> idem = {
      {"1", vec_unit(f, 3, 0)},
      {"2", vec_unit(f, 3, 2)},
  };
  PosetGradedResult r = build_poset_graded(flat, idem, {"1", "2"}, {{"1", "2"}});

  GradedFixture fx;
  fx.name = "poset_triangular/" + f.to_string();
  fx.cat = r.category;
  fx.alg = r.algebra;

  for (const auto& v : {"1", "2"}) {
    auto s = std::make_shared<GradedModule>(r.algebra);
    int id = r.category->identity_arrow(v);
    s->set_component(id, {"s"});
    s->set_action(id, id, 0, 0, vec_unit(f, 1, 0));
    fx.modules[std::string("S") + v] = s;
  }
  return fx;
}

std::vector<GradedFixture> graded_corpus(const Field& f) {
  std::vector<GradedFixture> out;
  out.push_back(one_object_field(f));
  out.push_back(nat_window_poly(f, 1, 99));
  out.push_back(nat_window_poly(f, 2, 99));
  out.push_back(nat_window_poly(f, 3, 3));
  out.push_back(group_z2_graded(f));
  out.push_back(poset_triangular(f));
  return out;
}

}  // namespace gradalg::fixtures
