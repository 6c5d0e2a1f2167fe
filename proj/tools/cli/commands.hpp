#pragma once

#include <functional>
#include <vector>

#include <CLI11.hpp>

#include "io.hpp"

namespace topomani::cli {

struct Command {
  CLI::App* app;
  // Returns the process exit status.
  std::function<int()> run;
};

std::vector<Command> register_commands(CLI::App& app, const GlobalOptions& global);

}  // namespace topomani::cli
