#include "topomani/complex.hpp"

#include <algorithm>
#include <unordered_map>

#include "topomani/error.hpp"

namespace topomani {

std::string FVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(counts[i]);
  }
  return out + ")";
}

namespace {

void check_dimension(int dimension) {
  if (dimension < 0 || dimension >= kMaxSimplexSize) {
    fail(ErrorCode::kUnsupportedDimension,
         "dimension " + std::to_string(dimension) + " outside 0.." +
             std::to_string(kMaxSimplexSize - 1));
  }
}

// Renumbers the vertices that occur to 0..n-1 keeping their relative order.
std::size_t canonicalize(std::vector<Simplex>& generators) {
  std::vector<Vertex> used;
  for (const auto& s : generators) used.insert(used.end(), s.begin(), s.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  const bool dense = used.empty() || used.back() + 1 == used.size();
  if (!dense) {
    std::array<Vertex, kMaxSimplexSize> buf{};
    for (auto& s : generators) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        buf[i] = static_cast<Vertex>(std::lower_bound(used.begin(), used.end(), s[i]) - used.begin());
      }
      s = Simplex(std::span<const Vertex>(buf.data(), s.size()));
    }
  }
  return used.size();
}

}  // namespace

SimplicialComplex SimplicialComplex::build(std::vector<Simplex> generators) {
  SimplicialComplex out;
  out.vertex_count_ = canonicalize(generators);
  for (const auto& g : generators) {
    const unsigned n = static_cast<unsigned>(g.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::array<Vertex, kMaxSimplexSize> buf{};
      std::size_t len = 0;
      for (unsigned i = 0; i < n; ++i) {
        if (mask & (1u << i)) buf[len++] = g[i];
      }
      out.faces_[len - 1].emplace_back(std::span<const Vertex>(buf.data(), len));
    }
  }
  for (int k = 0; k < kMaxSimplexSize; ++k) {
    auto& level = out.faces_[k];
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
    if (!level.empty()) out.dimension_ = k;
  }
  return out;
}

SimplicialComplex SimplicialComplex::from_top_faces(std::span<const Simplex> top_faces,
                                                    int dimension, bool* duplicates_collapsed) {
  check_dimension(dimension);
  if (top_faces.empty()) fail(ErrorCode::kEmptyInput, "no top faces given");
  for (const auto& f : top_faces) {
    if (f.dimension() != dimension) {
      fail(ErrorCode::kWrongFaceArity, "face " + f.to_string() + " has " +
                                           std::to_string(f.size()) + " vertices, expected " +
                                           std::to_string(dimension + 1));
    }
  }
  std::vector<Simplex> generators(top_faces.begin(), top_faces.end());
  if (duplicates_collapsed) {
    auto sorted = generators;
    std::sort(sorted.begin(), sorted.end());
    *duplicates_collapsed = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
  }
  return build(std::move(generators));
}

SimplicialComplex SimplicialComplex::from_top_faces(const FaceList& top_faces, int dimension,
                                                    bool* duplicates_collapsed) {
  check_dimension(dimension);
  if (top_faces.empty()) fail(ErrorCode::kEmptyInput, "no top faces given");
  std::vector<Simplex> simplices;
  simplices.reserve(top_faces.size());
  for (const auto& f : top_faces) {
    if (f.size() != static_cast<std::size_t>(dimension + 1)) {
      fail(ErrorCode::kWrongFaceArity, "face with " + std::to_string(f.size()) +
                                           " vertices, expected " +
                                           std::to_string(dimension + 1));
    }
    simplices.push_back(Simplex::from_unsorted(f));
  }
  return from_top_faces(simplices, dimension, duplicates_collapsed);
}

SimplicialComplex SimplicialComplex::from_faces(std::span<const Simplex> faces) {
  return build(std::vector<Simplex>(faces.begin(), faces.end()));
}

std::span<const Simplex> SimplicialComplex::faces(int k) const {
  if (k < 0 || k >= kMaxSimplexSize) return {};
  return faces_[k];
}

std::size_t SimplicialComplex::total_face_count() const {
  std::size_t n = 0;
  for (const auto& level : faces_) n += level.size();
  return n;
}

bool SimplicialComplex::contains(const Simplex& s) const { return index_of(s) >= 0; }

long SimplicialComplex::index_of(const Simplex& s) const {
  if (s.empty()) return -1;
  const auto& level = faces_[s.dimension()];
  auto it = std::lower_bound(level.begin(), level.end(), s);
  if (it == level.end() || *it != s) return -1;
  return it - level.begin();
}

std::vector<Simplex> SimplicialComplex::maximal_faces() const {
  std::vector<Simplex> out;
  for (int k = 0; k <= dimension_; ++k) {
    if (k == dimension_) {
      out.insert(out.end(), faces_[k].begin(), faces_[k].end());
      break;
    }
    // A k-face is maximal iff it has no (k+1)-coface.
    std::vector<Simplex> covered;
    for (const auto& up : faces_[k + 1]) {
      for (std::size_t i = 0; i < up.size(); ++i) covered.push_back(up.without_index(i));
    }
    std::sort(covered.begin(), covered.end());
    for (const auto& s : faces_[k]) {
      if (!std::binary_search(covered.begin(), covered.end(), s)) out.push_back(s);
    }
  }
  return out;
}

bool SimplicialComplex::is_pure() const {
  for (const auto& s : maximal_faces()) {
    if (s.dimension() != dimension_) return false;
  }
  return true;
}

FVector SimplicialComplex::f_vector() const {
  FVector f;
  for (int k = 0; k <= dimension_; ++k) f.counts.push_back(faces_[k].size());
  return f;
}

FaceList SimplicialComplex::top_face_lists() const {
  FaceList out;
  for (const auto& s : maximal_faces()) out.push_back(s.to_vector());
  return out;
}

SimplicialComplex SimplicialComplex::relabeled(std::span<const Vertex> relabel) const {
  if (relabel.size() < vertex_count_) {
    fail(ErrorCode::kInvalidParameter, "relabel map shorter than vertex count");
  }
  std::vector<Simplex> generators;
  for (const auto& s : maximal_faces()) {
    std::array<Vertex, kMaxSimplexSize> buf{};
    for (std::size_t i = 0; i < s.size(); ++i) buf[i] = relabel[s[i]];
    generators.push_back(Simplex::from_unsorted(std::span<const Vertex>(buf.data(), s.size())));
  }
  return build(std::move(generators));
}

}  // namespace topomani
