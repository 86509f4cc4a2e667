/**
 * @file gradalg_main.cpp
 * @copyright Apache License 2.0
 *
 * Batch front door: validate scene files, compute radicals, minimal
 * resolutions with Betti tables, perfectness verdicts with certificates,
 * hom-space bases, and the windowed splitting search.
 *
 * Exit codes: 0 success (perfect), 1 validation/computation failure,
 * 2 parse error, 3 not perfect, 4 hypotheses not verifiable.
 */
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gradalg/counterexample.hpp"
#include "gradalg/perfectness.hpp"
#include "gradalg/scene_io.hpp"

using nlohmann::json;
using namespace gradalg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitNotPerfect = 3;
constexpr int kExitNotVerifiable = 4;

unsigned thread_cap() {
  const char* env = std::getenv("GRADALG_THREADS");
  if (!env) return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v <= 0)
    throw ParseError("GRADALG_THREADS must be a positive integer");
  return static_cast<unsigned>(v);
}

void emit(const json& j, bool pretty_json_done) {
  if (!pretty_json_done) std::cout << j.dump(2) << "\n";
}

json violations_json(const GradedReport& rep) {
  json out = json::array();
  for (const auto& v : rep.violations) out.push_back({{"code", v.code}, {"message", v.message}});
  return out;
}

json category_violations_json(const CategoryReport& rep) {
  json out = json::array();
  for (const auto& v : rep.violations) out.push_back({{"code", v.code}, {"message", v.message}});
  return out;
}

/// Computing commands refuse scenes that fail validation.
Scene load_valid_scene(const std::string& path) {
  Scene scene = load_scene_file(path);
  CategoryReport cat_rep = scene.category->validate();
  if (!cat_rep.ok())
    throw Error(ErrorKind::StructureError,
                "scene category invalid: " + cat_rep.violations.front().message);
  GradedReport alg_rep = scene.algebra->validate();
  if (!alg_rep.ok())
    throw Error(ErrorKind::StructureError,
                "scene algebra invalid: " + alg_rep.violations.front().message);
  for (const auto& [name, m] : scene.modules) {
    GradedReport r = m->validate();
    if (!r.ok())
      throw Error(ErrorKind::StructureError,
                  "scene module '" + name + "' invalid: " + r.violations.front().message);
  }
  return scene;
}

/// Module lookup: a declared module name, or "A[<arrow>]" for a generator.
std::shared_ptr<const GradedModule> find_module(const Scene& scene, const std::string& name) {
  auto it = scene.modules.find(name);
  if (it != scene.modules.end()) return it->second;
  if (name.size() > 3 && name.rfind("A[", 0) == 0 && name.back() == ']') {
    std::string arrow = name.substr(2, name.size() - 3);
    return generator_module(scene.algebra, scene.category->arrow_index(arrow)).module;
  }
  throw Error(ErrorKind::StructureError, "unknown module '" + name + "'");
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

json hom_json(const GradedHom& h) {
  json comps = json::object();
  for (const auto& [arrow, mat] : h.explicit_components())
    comps[h.source().category().arrow(arrow).id] = matrix_json(mat);
  return comps;
}

int cmd_validate(const std::string& file, bool pretty) {
  Scene scene = load_scene_file(file);
  CategoryReport cat_rep = scene.category->validate();
  GradedReport alg_rep = scene.algebra->validate();
  json mods = json::object();
  bool mods_ok = true;
  for (const auto& [name, m] : scene.modules) {
    GradedReport r = m->validate();
    mods_ok = mods_ok && r.ok();
    mods[name] = violations_json(r);
  }
  bool ok = cat_rep.ok() && alg_rep.ok() && mods_ok;
  json out = {{"ok", ok},
              {"category", category_violations_json(cat_rep)},
              {"algebra", violations_json(alg_rep)},
              {"modules", mods}};
  if (pretty) {
    std::cout << (ok ? "valid" : "INVALID") << "\n";
    for (const auto& v : cat_rep.violations)
      std::cout << "  category/" << v.code << ": " << v.message << "\n";
    for (const auto& v : alg_rep.violations)
      std::cout << "  algebra/" << v.code << ": " << v.message << "\n";
    for (const auto& [name, m] : scene.modules)
      for (const auto& v : m->validate().violations)
        std::cout << "  module " << name << "/" << v.code << ": " << v.message << "\n";
  } else {
    emit(out, false);
  }
  return ok ? kExitOk : kExitError;
}

int cmd_radical(const std::string& file, const std::string& target, bool pretty) {
  Scene scene = load_valid_scene(file);
  json out;
  if (target == "algebra") {
    TotalHomAlgebra e = TotalHomAlgebra::over_all_arrows(scene.algebra);
    RadicalResult rad = algebra_radical(e.algebra());
    out = {{"target", "algebra"},
           {"total_hom_dimension", e.algebra().dim()},
           {"radical_dimension", rad.cert.radical_dim},
           {"nilpotency_index", rad.cert.nilpotency_index},
           {"method", rad.cert.method},
           {"quotient_semisimple", rad.cert.quotient_semisimple},
           {"basis", matrix_json(rad.basis)}};
  } else if (target.rfind("hom:", 0) == 0) {
    std::string rest = target.substr(4);
    auto comma = rest.find(',');
    if (comma == std::string::npos)
      throw ParseError("--target hom:M,N needs two module names");
    auto m = find_module(scene, rest.substr(0, comma));
    auto n = find_module(scene, rest.substr(comma + 1));
    HomRadical hr = hom_radical(m, n);
    json basis = json::array();
    for (const auto& h : hr.basis) basis.push_back(hom_json(h));
    out = {{"target", target}, {"dimension", hr.basis.size()}, {"basis", basis}};
  } else if (target.rfind("module:", 0) == 0) {
    auto m = find_module(scene, target.substr(7));
    TotalHomAlgebra e = TotalHomAlgebra::over_all_arrows(scene.algebra);
    GradedSub rad = module_radical_graded(e, m);
    json dims = json::object();
    for (int ar : rad.module->support())
      dims[scene.category->arrow(ar).id] = rad.module->dim(ar);
    out = {{"target", target},
           {"total_dimension", rad.module->total_dim()},
           {"dimensions", dims}};
  } else {
    throw ParseError("--target must be algebra, hom:M,N or module:M");
  }
  if (pretty) {
    std::cout << "radical of " << out.at("target").get<std::string>() << ":";
    if (out.contains("radical_dimension"))
      std::cout << " dim " << out.at("radical_dimension")
                << ", nilpotency index " << out.at("nilpotency_index");
    if (out.contains("dimension")) std::cout << " dim " << out.at("dimension");
    if (out.contains("total_dimension")) std::cout << " dim " << out.at("total_dimension");
    std::cout << "\n";
  } else {
    emit(out, false);
  }
  return kExitOk;
}

int cmd_resolve(const std::string& file, const std::string& module, std::size_t length,
                bool pretty) {
  Scene scene = load_valid_scene(file);
  auto m = find_module(scene, module);
  TotalHomAlgebra e = TotalHomAlgebra::over_all_arrows(scene.algebra);
  AlgebraAnalysis an = analyze_total(e);
  auto t = e.to_total(m);
  ResolutionComplex res = minimal_resolution(an, t.mod, length);
  ResolutionCertificate cert = verify_resolution(t.mod, res);

  json betti = json::array();
  for (const auto& row : res.betti()) {
    json r = json::object();
    for (const auto& [label, mult] : row) r[label] = mult;
    betti.push_back(r);
  }
  json out = {{"module", module},
              {"length_requested", length},
              {"stages", res.stages.size()},
              {"terminated", res.terminated},
              {"betti", betti},
              {"certificate", {{"pass", cert.pass}, {"first_failure", cert.first_failure}}}};
  if (pretty) {
    std::cout << "minimal resolution of " << module << " (stages " << res.stages.size()
              << (res.terminated ? ", terminated" : ", cap reached") << ")\n";
    std::cout << std::left << std::setw(8) << "stage" << "summands\n";
    auto bt = res.betti();
    for (std::size_t k = 0; k < bt.size(); ++k) {
      std::ostringstream line;
      bool first = true;
      for (const auto& [label, mult] : bt[k]) {
        if (!first) line << " + ";
        first = false;
        if (mult > 1) line << mult << "*";
        line << "P(" << label << ")";
      }
      std::cout << std::left << std::setw(8) << k << line.str() << "\n";
    }
    std::cout << "certificate: " << (cert.pass ? "pass" : "FAIL " + cert.first_failure) << "\n";
  } else {
    emit(out, false);
  }
  return cert.pass ? kExitOk : kExitError;
}

json sequence_json(const ArrowSequenceReport& seq) {
  const char* cond = seq.condition == SequenceCondition::Main0SequenceCondition
                         ? "main0-sequence-condition"
                         : "main1-right-divisor-chains";
  const char* verdict = seq.verdict == SequenceVerdict::Holds
                            ? "holds"
                            : seq.verdict == SequenceVerdict::Fails ? "fails"
                                                                    : "not-decidable-for-kind";
  return {{"condition", cond},
          {"verdict", verdict},
          {"witness", seq.witness},
          {"justification", seq.justification}};
}

json perfectness_json(const PerfectnessVerdict& v, const std::string& kind) {
  json arrows = json::array();
  for (const auto& c : v.per_arrow)
    arrows.push_back({{"arrow", c.arrow},
                      {"divisor_dimension", c.divisor_dim},
                      {"radical_dimension", c.radical_dim},
                      {"nilpotency_index", c.nilpotency_index},
                      {"split_semisimple_quotient", c.split_semisimple_quotient},
                      {"idempotent_count", c.idempotent_count},
                      {"left_perfect", c.left_perfect},
                      {"note", c.note}});
  std::string verdict =
      v.verdict == Verdict::Positive
          ? (kind == "perfect" ? "perfect" : "semiperfect")
          : v.verdict == Verdict::Negative ? "not-" + kind : "hypotheses-not-verifiable";
  return {{"check", kind},
          {"verdict", verdict},
          {"theorem_used", theorem_name(v.theorem)},
          {"sequence_condition", sequence_json(v.sequence)},
          {"per_arrow", arrows},
          {"note", v.note}};
}

int cmd_check_perfect(const std::string& file, bool pretty) {
  Scene scene = load_valid_scene(file);
  PerfectnessVerdict v = check_perfect(scene.algebra);
  json out = perfectness_json(v, "perfect");
  if (pretty) {
    std::cout << "check-perfect: " << out.at("verdict").get<std::string>() << " (theorem "
              << theorem_name(v.theorem) << ")\n";
    std::cout << std::left << std::setw(12) << "arrow" << std::setw(8) << "dim" << std::setw(8)
              << "radJ" << std::setw(8) << "nilp" << std::setw(7) << "split" << "note\n";
    for (const auto& c : v.per_arrow)
      std::cout << std::left << std::setw(12) << c.arrow << std::setw(8) << c.divisor_dim
                << std::setw(8) << c.radical_dim << std::setw(8) << c.nilpotency_index
                << std::setw(7) << (c.split_semisimple_quotient ? "yes" : "no") << c.note << "\n";
  } else {
    emit(out, false);
  }
  switch (v.verdict) {
    case Verdict::Positive: return kExitOk;
    case Verdict::Negative: return kExitNotPerfect;
    case Verdict::HypothesesNotVerifiable: return kExitNotVerifiable;
  }
  return kExitError;
}

int cmd_counterexample(long d, unsigned field_char, bool pretty) {
  SearchReport r = brute_force_split_search(d, Field::prime(field_char), thread_cap());
  json samples = json::array();
  for (const auto& t : r.sample) {
    json rows = json::array();
    for (const auto& row : t.rows) {
      json jr = json::array();
      for (const auto& c : row) jr.push_back(c.to_string());
      rows.push_back(jr);
    }
    samples.push_back(rows);
  }
  json out = {{"d", r.d},
              {"field", "F_" + std::to_string(r.field_char)},
              {"admissible_count", r.admissible_count},
              {"min_max_descent_depth", r.min_max_descent_depth},
              {"all_diagonal_idempotent", r.all_diagonal_idempotent},
              {"all_descents_reach_edge", r.all_descents_reach_edge},
              {"interior_minimal_found", r.interior_minimal_found},
              {"sample", samples}};
  if (pretty) {
    std::cout << "splitting search d=" << r.d << " over F_" << r.field_char << "\n"
              << "  admissible candidates: " << r.admissible_count << "\n"
              << "  every interior diagonal idempotent: "
              << (r.all_diagonal_idempotent ? "yes" : "NO") << "\n"
              << "  every descent reaches the window edge: "
              << (r.all_descents_reach_edge ? "yes" : "NO") << "\n"
              << "  interior-minimal elements found: " << r.interior_minimal_found << "\n"
              << "  min over e of max descent depth: " << r.min_max_descent_depth << "\n";
  } else {
    emit(out, false);
  }
  return kExitOk;
}

int cmd_hom(const std::string& file, const std::string& source, const std::string& target,
            bool pretty) {
  Scene scene = load_valid_scene(file);
  auto m = find_module(scene, source);
  auto n = find_module(scene, target);
  auto basis = hom_space(m, n);
  json jb = json::array();
  for (const auto& h : basis) jb.push_back(hom_json(h));
  json out = {{"source", source}, {"target", target}, {"dimension", basis.size()}, {"basis", jb}};
  if (pretty) {
    std::cout << "Hom(" << source << ", " << target << ") has dimension " << basis.size() << "\n";
  } else {
    emit(out, false);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations for category-graded algebras"};
  app.require_subcommand(1);

  std::string file, target = "algebra", module, source, tgt_module;
  std::size_t length = 0;
  long d = 1;
  unsigned field_char = 2;
  bool pretty = false;

  auto* validate = app.add_subcommand("validate", "validate a scene file");
  validate->add_option("file", file)->required();
  validate->add_flag("--pretty", pretty);

  auto* radical = app.add_subcommand("radical", "radical of the total hom algebra, a hom group, or a module");
  radical->add_option("file", file)->required();
  radical->add_option("--target", target, "algebra | hom:M,N | module:M");
  radical->add_flag("--pretty", pretty);

  auto* resolve = app.add_subcommand("resolve", "minimal projective resolution with Betti table");
  resolve->add_option("file", file)->required();
  resolve->add_option("--module", module)->required();
  resolve->add_option("--length", length)->required();
  resolve->add_flag("--pretty", pretty);

  auto* check = app.add_subcommand("check-perfect", "perfectness verdict with certificates");
  check->add_option("file", file)->required();
  check->add_flag("--pretty", pretty);

  auto* counter = app.add_subcommand("counterexample", "windowed splitting search");
  counter->add_option("--d", d)->required();
  counter->add_option("--field", field_char, "2 or 3")->required();
  counter->add_flag("--pretty", pretty);

  auto* hom = app.add_subcommand("hom", "basis of the equivariant hom space");
  hom->add_option("file", file)->required();
  hom->add_option("--source", source)->required();
  hom->add_option("--target", tgt_module)->required();
  hom->add_flag("--pretty", pretty);

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(file, pretty);
    if (radical->parsed()) return cmd_radical(file, target, pretty);
    if (resolve->parsed()) return cmd_resolve(file, module, length, pretty);
    if (check->parsed()) return cmd_check_perfect(file, pretty);
    if (counter->parsed()) return cmd_counterexample(d, field_char, pretty);
    if (hom->parsed()) return cmd_hom(file, source, tgt_module, pretty);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitParse;
}
