#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "topomani/complex.hpp"

namespace topomani {

enum class ProvenanceKind { kCensus, kPachner, kConnectedSum, kSubdivision };
enum class Split { kTrain, kVal, kTest };

std::string_view to_string(ProvenanceKind kind);
std::string_view to_string(Split split);
std::optional<Split> parse_split(std::string_view name);

struct Provenance {
  ProvenanceKind kind = ProvenanceKind::kCensus;
  std::optional<std::string> parent;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// One triangulation of the dataset with its label and bookkeeping.
///
/// Labels are surface names ("S2", "T2#g", "RP2#k") for surfaces and opaque
/// census strings for 3-manifolds.
struct DatasetRecord {
  std::string id;
  int dimension = 2;
  FaceList top_faces;
  std::string label;
  Provenance provenance;
  std::optional<Split> split;

  SimplicialComplex complex() const;

  static DatasetRecord from_complex(std::string id, const SimplicialComplex& complex,
                                    std::string label, Provenance provenance);

  friend bool operator==(const DatasetRecord&, const DatasetRecord&) = default;
};

struct ParseOptions {
  // Rebuild each complex and reject non-manifolds (ValidationError).
  bool validate = true;
};

// One JSON object, keys in the order id, dimension, top_faces, label,
// provenance {kind, parent, seed}, split. No trailing newline.
std::string serialize_record(const DatasetRecord& record);
// Newline-terminated lines, one per record.
std::string serialize(std::span<const DatasetRecord> records);

// Errors carry the 1-based line number. Blank lines are skipped.
DatasetRecord parse_record(std::string_view line, std::size_t line_number,
                           const ParseOptions& options = {});
std::vector<DatasetRecord> parse(std::string_view text, const ParseOptions& options = {});

std::vector<DatasetRecord> read_jsonl(const std::filesystem::path& path,
                                      const ParseOptions& options = {});
void write_jsonl(const std::filesystem::path& path, std::span<const DatasetRecord> records);

}  // namespace topomani
