#include "io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "topomani/error.hpp"
#include "topomani/pipeline.hpp"

namespace topomani::cli {

std::string read_text(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<DatasetRecord> read_records(const std::string& path, bool validate) {
  return parse(read_text(path), ParseOptions{validate});
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::kInvalidParameter, "cannot write " + path);
  out << text;
}

void write_records(const std::string& path, std::span<const DatasetRecord> records) {
  write_text(path, serialize(records));
}

std::size_t vertex_cap(const GlobalOptions& global, int dimension) {
  if (global.max_vertices) return *global.max_vertices;
  return dimension == 3 ? kMaxVertices3D : kMaxVertices2D;
}

}  // namespace topomani::cli
