#pragma once

#include <iosfwd>
#include <string>

#include "kkth/errors.hpp"
#include "kkth/exactalg/extension.hpp"
#include "kkth/kgraph.hpp"
#include "kkth/spectral.hpp"

namespace kkth::cli {

enum class Format { Text, Json };

struct JobConfig {
  std::string input_path;
  Format format = Format::Text;
  exactalg::Integer ext_bound = exactalg::kDefaultExtensionBound;
  unsigned core_bound = 8;
  bool emit_lifts = false;
  bool emit_intermediate = false;
};

struct JobInput {
  kgraph::KGraphSpec spec;
  spectral::CoreConstraints constraints;  // optional "core_constraints" block
};

// Accepted keys: k, vertices, involution, matrices, convention, core_constraints.
// Throws ParseError with line and column for malformed or unknown input.
JobInput parse_input(const std::string& text);

// Inverse of FgAbGroup::to_string.
exactalg::FgAbGroup parse_group(const std::string& text);

int exit_code(ErrorKind kind);

// Runs the whole pipeline; the report goes to out, error names to err.
int run(const JobConfig& config, std::ostream& out, std::ostream& err);

}  // namespace kkth::cli
