#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "invgeo/cli.hpp"

int main(int argc, char** argv) {
  using invgeo::cli::RunConfig;
  RunConfig config;
  CLI::App app{"invgeo: finite inverse monoids, presheaves and coarse geometry"};
  app.require_subcommand(1);

  std::string generators;
  std::uint32_t radius = 0, basepoint = 0, component = 0;
  std::size_t cap = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("-i,--input", config.inputs, "Input file(s)");
    sub->add_option("-o,--out", config.out, "Output path");
    sub->add_option("--seed", config.seed, "Seed for sampled sweeps");
    sub->add_option("--cap-exhaustive", cap,
                    "Largest order swept exhaustively by triple checks");
    sub->add_option("--element-cap", config.element_cap,
                    "Closure size limit when generating");
  };

  auto* gen = app.add_subcommand("gen", "Build a monoid table file from a generator or table file");
  common(gen);
  auto* analyze = app.add_subcommand("analyze", "Print E(S), Green classes and the natural order");
  common(analyze);

  auto* graph = app.add_subcommand("graph", "DOT export of Cayley, Schutzenberger or Rips graphs");
  auto* metric = app.add_subcommand("metric", "Metric tables of d_M or d^R");
  for (auto* sub : {graph, metric}) {
    common(sub);
    sub->add_option("--kind", config.kind, "cayley, schutzenberger or rips");
    sub->add_option("--format", config.format, "dot, matrix or report");
    sub->add_option("--generators", generators, "Comma-separated element indices");
    sub->add_option("--radius", radius, "Rips radius R");
    sub->add_option("--basepoint", basepoint, "Basepoint index x1");
  }
  graph->add_option("--component", component, "Element whose L-class is drawn");

  auto* verify = app.add_subcommand("verify", "Run the full predicate suite");
  common(verify);
  verify->add_option("--radius", radius, "Rips radius R (default max(T, 1))");
  verify->add_option("--basepoint", basepoint, "Basepoint index x1");
  verify->add_option("--generators", generators, "Comma-separated element indices");
  verify->add_option("--format", config.format, "report");

  auto* qi = app.add_subcommand("qi", "Quasi-isometry constants between two matrix files");
  common(qi);
  qi->add_option("--format", config.format, "report");

  auto* examples = app.add_subcommand("examples", "List or emit bundled examples");
  common(examples);
  examples->add_option("action", config.example_action, "list or emit");
  examples->add_option("name", config.example_name, "Example name for emit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : invgeo::cli::kExitUsage;
  }

  auto* sub = app.get_subcommands().front();
  config.subcommand = sub->get_name();
  auto given = [&](const char* flag) {
    return sub->get_option_no_throw(flag) && sub->count(flag) > 0;
  };
  if (given("--radius")) config.radius = radius;
  if (given("--basepoint")) config.basepoint = basepoint;
  if (given("--component")) config.component = component;
  if (given("--cap-exhaustive")) config.cap_exhaustive = cap;
  if (given("--generators")) {
    try {
      config.generators = invgeo::cli::parse_index_list(generators);
    } catch (const std::exception& e) {
      std::cerr << "error: --generators: " << e.what() << "\n";
      return invgeo::cli::kExitUsage;
    }
  }
  return invgeo::cli::run(config, std::cout, std::cerr);
}
