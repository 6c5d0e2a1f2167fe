#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "topomani/dataset.hpp"

namespace topomani::cli {

// Flag misuse detected after CLI parsing; exits with status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  std::optional<std::size_t> max_vertices;
  std::string input = "-";
  std::string output = "-";
  bool no_validate = false;
};

// "-" means stdin / stdout.
std::vector<DatasetRecord> read_records(const std::string& path, bool validate);
std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);
void write_records(const std::string& path, std::span<const DatasetRecord> records);

// Vertex cap from --max-vertices, else 24 for surfaces and 40 for 3-manifolds.
std::size_t vertex_cap(const GlobalOptions& global, int dimension);

}  // namespace topomani::cli
