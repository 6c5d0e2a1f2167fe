#include "topomani/dataset.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "topomani/error.hpp"
#include "topomani/invariants.hpp"

namespace topomani {

using ordered_json = nlohmann::ordered_json;

std::string_view to_string(ProvenanceKind kind) {
  switch (kind) {
    case ProvenanceKind::kCensus: return "census";
    case ProvenanceKind::kPachner: return "pachner";
    case ProvenanceKind::kConnectedSum: return "connected_sum";
    case ProvenanceKind::kSubdivision: return "subdivision";
  }
  return "?";
}

std::string_view to_string(Split split) {
  switch (split) {
    case Split::kTrain: return "train";
    case Split::kVal: return "val";
    case Split::kTest: return "test";
  }
  return "?";
}

std::optional<Split> parse_split(std::string_view name) {
  for (auto s : {Split::kTrain, Split::kVal, Split::kTest}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

namespace {

std::optional<ProvenanceKind> parse_provenance_kind(std::string_view name) {
  for (auto k : {ProvenanceKind::kCensus, ProvenanceKind::kPachner, ProvenanceKind::kConnectedSum,
                 ProvenanceKind::kSubdivision}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  fail(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + what);
}

const ordered_json& field(const ordered_json& obj, const char* key, std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end()) parse_error(line, std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace

SimplicialComplex DatasetRecord::complex() const {
  return SimplicialComplex::from_top_faces(top_faces, dimension);
}

DatasetRecord DatasetRecord::from_complex(std::string id, const SimplicialComplex& complex,
                                          std::string label, Provenance provenance) {
  DatasetRecord r;
  r.id = std::move(id);
  r.dimension = complex.dimension();
  r.top_faces = complex.top_face_lists();
  r.label = std::move(label);
  r.provenance = std::move(provenance);
  return r;
}

std::string serialize_record(const DatasetRecord& record) {
  ordered_json j;
  j["id"] = record.id;
  j["dimension"] = record.dimension;
  j["top_faces"] = record.top_faces;
  j["label"] = record.label;
  ordered_json prov;
  prov["kind"] = to_string(record.provenance.kind);
  prov["parent"] = record.provenance.parent ? ordered_json(*record.provenance.parent) : ordered_json(nullptr);
  prov["seed"] = record.provenance.seed ? ordered_json(*record.provenance.seed) : ordered_json(nullptr);
  j["provenance"] = std::move(prov);
  j["split"] = record.split ? ordered_json(to_string(*record.split)) : ordered_json(nullptr);
  return j.dump();
}

std::string serialize(std::span<const DatasetRecord> records) {
  std::string out;
  for (const auto& r : records) {
    out += serialize_record(r);
    out += '\n';
  }
  return out;
}

DatasetRecord parse_record(std::string_view line, std::size_t line_number,
                           const ParseOptions& options) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    parse_error(line_number, e.what());
  }
  if (!j.is_object()) parse_error(line_number, "record is not a JSON object");

  DatasetRecord r;
  try {
    r.id = field(j, "id", line_number).get<std::string>();
    r.dimension = field(j, "dimension", line_number).get<int>();
    r.label = field(j, "label", line_number).get<std::string>();
    const auto& faces = field(j, "top_faces", line_number);
    if (!faces.is_array() || faces.empty()) parse_error(line_number, "top_faces must be a non-empty array");
    for (const auto& face : faces) {
      if (!face.is_array()) parse_error(line_number, "each face must be an array");
      std::vector<Vertex> vs;
      for (const auto& v : face) {
        if (!v.is_number_unsigned()) parse_error(line_number, "vertex ids must be non-negative integers");
        vs.push_back(v.get<Vertex>());
      }
      if (vs.size() != static_cast<std::size_t>(r.dimension + 1)) {
        parse_error(line_number, "face arity does not match dimension");
      }
      for (std::size_t i = 1; i < vs.size(); ++i) {
        if (vs[i - 1] >= vs[i]) parse_error(line_number, "face vertices must be strictly ascending");
      }
      r.top_faces.push_back(std::move(vs));
    }
    const auto& prov = field(j, "provenance", line_number);
    if (!prov.is_object()) parse_error(line_number, "provenance must be an object");
    const auto kind = parse_provenance_kind(field(prov, "kind", line_number).get<std::string>());
    if (!kind) parse_error(line_number, "unknown provenance kind");
    r.provenance.kind = *kind;
    if (const auto& parent = field(prov, "parent", line_number); !parent.is_null()) {
      r.provenance.parent = parent.get<std::string>();
    }
    if (const auto& seed = field(prov, "seed", line_number); !seed.is_null()) {
      r.provenance.seed = seed.get<std::uint64_t>();
    }
    if (const auto& split = field(j, "split", line_number); !split.is_null()) {
      r.split = parse_split(split.get<std::string>());
      if (!r.split) parse_error(line_number, "unknown split");
    }
  } catch (const nlohmann::json::exception& e) {
    parse_error(line_number, e.what());
  }
  if (r.dimension != 2 && r.dimension != 3) parse_error(line_number, "dimension must be 2 or 3");

  if (options.validate) {
    bool ok = false;
    try {
      ok = is_combinatorial_manifold(r.complex());
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) {
      fail(ErrorCode::kValidationError,
           "line " + std::to_string(line_number) + ": record '" + r.id + "' is not a combinatorial manifold");
    }
  }
  return r;
}

std::vector<DatasetRecord> parse(std::string_view text, const ParseOptions& options) {
  std::vector<DatasetRecord> out;
  std::size_t line_number = 0;
  while (!text.empty()) {
    const auto end = text.find('\n');
    auto line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    out.push_back(parse_record(line, line_number, options));
  }
  return out;
}

std::vector<DatasetRecord> read_jsonl(const std::filesystem::path& path, const ParseOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), options);
}

void write_jsonl(const std::filesystem::path& path, std::span<const DatasetRecord> records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::kInvalidParameter, "cannot write " + path.string());
  out << serialize(records);
}

}  // namespace topomani
