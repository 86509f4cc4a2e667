/**
 * @file scene_io.cpp
 * @copyright Apache License 2.0
 */
#include "gradalg/scene_io.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gradalg {

namespace {

using nlohmann::json;

const json& need(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key '") + key + "'");
  return *it;
}

std::string need_string(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_string()) throw ParseError(std::string("key '") + key + "' must be a string");
  return v.get<std::string>();
}

Field parse_field(const json& j) {
  if (!j.is_object()) throw ParseError("'field' must be an object");
  if (j.contains("rationals")) return Field::rationals();
  if (j.contains("prime")) {
    const json& p = j.at("prime");
    if (!p.is_number_unsigned()) throw ParseError("'prime' must be a positive integer");
    return Field::prime(p.get<std::uint32_t>());
  }
  throw ParseError("'field' needs either 'rationals' or 'prime'");
}

std::shared_ptr<const IndexCategory> parse_category(const json& j) {
  if (!j.is_object()) throw ParseError("'category' must be an object");
  std::string kind = need_string(j, "kind");
  if (kind == "explicit") {
    std::vector<std::string> objects = need(j, "objects").get<std::vector<std::string>>();
    std::vector<Arrow> arrows;
    for (const auto& a : need(j, "arrows")) {
      arrows.push_back(Arrow{need_string(a, "id"), need_string(a, "src"), need_string(a, "tgt")});
    }
    std::map<std::string, std::string> identities =
        need(j, "identities").get<std::map<std::string, std::string>>();
    std::vector<std::array<std::string, 3>> comp;
    if (j.contains("composition"))
      for (const auto& t : j.at("composition")) {
        if (!t.is_array() || t.size() != 3)
          throw ParseError("composition entries are triples [alpha, beta, alpha.beta]");
        comp.push_back({t[0].get<std::string>(), t[1].get<std::string>(), t[2].get<std::string>()});
      }
    return std::make_shared<IndexCategory>(
        IndexCategory::explicit_finite(objects, arrows, identities, comp));
  }
  if (kind == "poset") {
    std::vector<std::string> elements = need(j, "elements").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> leq;
    if (j.contains("leq"))
      for (const auto& t : j.at("leq")) {
        if (!t.is_array() || t.size() != 2) throw ParseError("leq entries are pairs");
        leq.emplace_back(t[0].get<std::string>(), t[1].get<std::string>());
      }
    return std::make_shared<IndexCategory>(IndexCategory::from_poset(elements, leq));
  }
  if (kind == "group") {
    std::vector<std::string> elements = need(j, "elements").get<std::vector<std::string>>();
    std::vector<std::vector<std::string>> table =
        need(j, "table").get<std::vector<std::vector<std::string>>>();
    return std::make_shared<IndexCategory>(IndexCategory::from_group(elements, table));
  }
  if (kind == "nat_window" || kind == "int_window") {
    std::size_t rank = need(j, "rank").get<std::size_t>();
    std::vector<std::vector<long>> window;
    if (j.contains("window")) {
      window = need(j, "window").get<std::vector<std::vector<long>>>();
    } else if (kind == "nat_window" && j.contains("max")) {
      // downward closure of a box [0, max]
      std::vector<long> max = j.at("max").get<std::vector<long>>();
      if (max.size() != rank) throw ParseError("'max' must have 'rank' entries");
      std::vector<long> point(rank, 0);
      while (true) {
        window.push_back(point);
        std::size_t i = 0;
        while (i < rank && ++point[i] > max[i]) point[i++] = 0;
        if (i == rank) break;
      }
    } else if (kind == "int_window" && j.contains("min") && j.contains("max")) {
      std::vector<long> lo = j.at("min").get<std::vector<long>>();
      std::vector<long> hi = j.at("max").get<std::vector<long>>();
      if (lo.size() != rank || hi.size() != rank) throw ParseError("'min'/'max' rank mismatch");
      std::vector<long> point = lo;
      while (true) {
        window.push_back(point);
        std::size_t i = 0;
        while (i < rank && ++point[i] > hi[i]) point[i] = lo[i], ++i;
        if (i == rank) break;
      }
    } else {
      throw ParseError("window kinds need 'window' points (or 'max' / 'min'+'max' boxes)");
    }
    return std::make_shared<IndexCategory>(IndexCategory::monoid_window(
        rank, kind == "nat_window" ? LatticeKind::Nat : LatticeKind::Int, window));
  }
  throw ParseError("unknown category kind '" + kind + "'");
}

Vec parse_sparse_vec(const Field& f, const json& j, std::size_t dim, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of [index, coeff]");
  Vec v = vec_zero(f, dim);
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2)
      throw ParseError(std::string(what) + " entries are [index, coeff] pairs");
    std::size_t idx = entry[0].get<std::size_t>();
    if (idx >= dim) throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": index");
    v[idx] = Scalar::parse(f, entry[1].is_string() ? entry[1].get<std::string>()
                                                   : entry[1].dump());
  }
  return v;
}

}  // namespace

Scene parse_scene(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("scene must be a JSON object");

  Scene scene;
  scene.field = parse_field(need(doc, "field"));
  scene.category = parse_category(need(doc, "category"));

  const json& alg_j = need(doc, "algebra");
  auto alg = std::make_shared<GradedAlgebra>(scene.category, scene.field);
  for (const auto& [arrow_id, labels] : need(alg_j, "components").items()) {
    int arrow = scene.category->arrow_index(arrow_id);
    alg->set_component(arrow, labels.get<std::vector<std::string>>());
  }
  if (alg_j.contains("products"))
    for (const auto& p : alg_j.at("products")) {
      int a = scene.category->arrow_index(need_string(p, "a"));
      int b = scene.category->arrow_index(need_string(p, "b"));
      std::size_t i = need(p, "i").get<std::size_t>();
      std::size_t jj = need(p, "j").get<std::size_t>();
      auto tgt = scene.category->compose(a, b);
      std::size_t dim = tgt ? alg->dim(*tgt) : 0;
      alg->set_product(a, b, i, jj, parse_sparse_vec(scene.field, need(p, "c"), dim, "product"));
    }
  for (const auto& [object, coords] : need(alg_j, "units").items()) {
    int id_arrow = scene.category->identity_arrow(object);
    alg->set_local_unit(object,
                        parse_sparse_vec(scene.field, coords, alg->dim(id_arrow), "unit"));
  }
  scene.algebra = alg;

  if (doc.contains("modules")) {
    for (const auto& [name, mj] : doc.at("modules").items()) {
      auto mod = std::make_shared<GradedModule>(scene.algebra);
      for (const auto& [arrow_id, labels] : need(mj, "components").items()) {
        int arrow = scene.category->arrow_index(arrow_id);
        mod->set_component(arrow, labels.get<std::vector<std::string>>());
      }
      if (mj.contains("action"))
        for (const auto& p : mj.at("action")) {
          int a = scene.category->arrow_index(need_string(p, "a"));
          int m = scene.category->arrow_index(need_string(p, "m"));
          std::size_t i = need(p, "i").get<std::size_t>();
          std::size_t jj = need(p, "j").get<std::size_t>();
          auto tgt = scene.category->compose(a, m);
          std::size_t dim = tgt ? mod->dim(*tgt) : 0;
          mod->set_action(a, m, i, jj, parse_sparse_vec(scene.field, need(p, "c"), dim, "action"));
        }
      scene.modules.emplace(name, mod);
    }
  }
  return scene;
}

Scene load_scene_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scene(buf.str());
}

}  // namespace gradalg
