/**
 * @file gradalg/scene_io.hpp
 * @copyright Apache License 2.0
 *
 * Scene files: a JSON document carrying the field, the grading category, the
 * algebra (per-arrow components, sparse structure-constant triples, local
 * units) and optional named modules.  Structure constants are sparse triple
 * lists in files and densified on load.
 */
#pragma once

#include <stdexcept>
#include <string>

#include "gradalg/graded.hpp"

namespace gradalg {

/// Malformed document (JSON syntax or schema shape); the CLI maps this to
/// exit code 2, semantic errors stay on the Error channel (exit 1).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct Scene {
  Field field = Field::rationals();
  std::shared_ptr<const IndexCategory> category;
  std::shared_ptr<const GradedAlgebra> algebra;
  std::map<std::string, std::shared_ptr<const GradedModule>> modules;
};

/// Parses a scene document; ParseError for shape problems, Error for
/// semantic ones (unknown arrows, wrong dimensions, bad windows).
Scene parse_scene(const std::string& json_text);

Scene load_scene_file(const std::string& path);

}  // namespace gradalg
