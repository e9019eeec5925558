#include <CLI11.hpp>

#include <iostream>

#include "kkth/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Real K-theory of higher-rank graphs with involution"};
  app.require_subcommand(1);

  kkth::cli::JobConfig config;
  std::string format = "text";
  std::string ext_bound;
  auto* compute = app.add_subcommand("compute", "Compute the E2 page, KU, psi, MU and the core");
  compute->add_option("input", config.input_path, "JSON description of the graph")->required();
  compute->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  compute->add_option("--ext-bound", ext_bound, "largest group order for extension enumeration");
  compute->add_option("--core-bound", config.core_bound, "largest Z_2-rank tried by the core solver")
      ->check(CLI::PositiveNumber);
  compute->add_flag("--emit-intermediate", config.emit_intermediate, "print SNFs and chain complexes");
  compute->add_flag("--emit-lifts", config.emit_lifts, "print cycle representatives of E2 generators");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  config.format = format == "json" ? kkth::cli::Format::Json : kkth::cli::Format::Text;
  if (!ext_bound.empty()) {
    if (ext_bound.find_first_not_of("0123456789") != std::string::npos || config.ext_bound.set_str(ext_bound, 10) != 0) {
      std::cerr << "ParseError: --ext-bound expects a positive integer\n";
      return 2;
    }
  }
  return kkth::cli::run(config, std::cout, std::cerr);
}
