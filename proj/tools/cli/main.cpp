#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "io.hpp"
#include "topomani/error.hpp"

int main(int argc, char** argv) {
  using namespace topomani;
  CLI::App app{"Triangulated manifold datasets: moves, surgery, subdivision, dedup, export", "topomani"};
  app.require_subcommand(1);
  app.fallthrough();

  cli::GlobalOptions global;
  app.add_option("--seed", global.seed, "Master seed");
  app.add_option("--jobs", global.jobs, "Worker threads (0 = all cores)");
  app.add_option("--max-vertices", global.max_vertices, "Vertex cap (default 24 for 2D, 40 for 3D)")
      ->check(CLI::PositiveNumber);
  app.add_option("-i,--input", global.input, "Input JSONL, - for stdin");
  app.add_option("-o,--output", global.output, "Output file, - for stdout");
  app.add_flag("--no-validate", global.no_validate, "Skip manifold checks when reading records");

  const auto commands = cli::register_commands(app, global);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? 0 : 2;
  }

  try {
    for (const auto& c : commands) {
      if (c.app->parsed()) return c.run();
    }
  } catch (const cli::UsageError& e) {
    std::cerr << "topomani: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "topomani: " << e.what() << "\n";
    return e.code() == ErrorCode::kInvalidParameter ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "topomani: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
