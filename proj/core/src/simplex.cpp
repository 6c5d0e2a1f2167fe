#include "topomani/simplex.hpp"

#include <algorithm>

#include "topomani/error.hpp"

namespace topomani {

namespace {

void check_strict(std::span<const Vertex> vertices) {
  if (vertices.empty() || vertices.size() > static_cast<std::size_t>(kMaxSimplexSize)) {
    fail(ErrorCode::kWrongFaceArity,
         "simplex must have 1.." + std::to_string(kMaxSimplexSize) + " vertices, got " +
             std::to_string(vertices.size()));
  }
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (vertices[i - 1] >= vertices[i]) {
      fail(ErrorCode::kInvalidParameter, "simplex vertices must be strictly increasing");
    }
  }
}

}  // namespace

Simplex::Simplex(std::initializer_list<Vertex> vertices)
    : Simplex(std::span<const Vertex>(vertices.begin(), vertices.size())) {}

Simplex::Simplex(std::span<const Vertex> vertices) {
  check_strict(vertices);
  std::copy(vertices.begin(), vertices.end(), v_.begin());
  size_ = static_cast<std::uint8_t>(vertices.size());
}

Simplex Simplex::from_unsorted(std::span<const Vertex> vertices) {
  if (vertices.empty() || vertices.size() > static_cast<std::size_t>(kMaxSimplexSize)) {
    check_strict(vertices);
  }
  std::array<Vertex, kMaxSimplexSize> buf{};
  std::copy(vertices.begin(), vertices.end(), buf.begin());
  std::sort(buf.begin(), buf.begin() + vertices.size());
  return Simplex(std::span<const Vertex>(buf.data(), vertices.size()));
}

bool Simplex::contains(Vertex v) const noexcept {
  return std::binary_search(begin(), end(), v);
}

bool Simplex::contains(const Simplex& face) const noexcept {
  return std::includes(begin(), end(), face.begin(), face.end());
}

bool Simplex::disjoint(const Simplex& other) const noexcept {
  for (Vertex v : other) {
    if (contains(v)) return false;
  }
  return true;
}

Simplex Simplex::without_index(std::size_t i) const noexcept {
  Simplex out;
  for (std::size_t k = 0; k < size_; ++k) {
    if (k != i) out.v_[out.size_++] = v_[k];
  }
  return out;
}

Simplex Simplex::without(Vertex v) const {
  const int i = index_of(v);
  if (i < 0) fail(ErrorCode::kFaceNotPresent, "vertex not in simplex " + to_string());
  return without_index(static_cast<std::size_t>(i));
}

Simplex Simplex::with(Vertex v) const {
  if (contains(v)) fail(ErrorCode::kInvalidParameter, "vertex already in simplex");
  if (size_ >= kMaxSimplexSize) fail(ErrorCode::kWrongFaceArity, "simplex capacity exceeded");
  Simplex out = *this;
  auto* pos = std::upper_bound(out.v_.begin(), out.v_.begin() + size_, v);
  std::move_backward(pos, out.v_.begin() + size_, out.v_.begin() + size_ + 1);
  *pos = v;
  ++out.size_;
  return out;
}

Simplex Simplex::united(const Simplex& other) const {
  std::vector<Vertex> merged;
  std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(merged));
  return Simplex(std::span<const Vertex>(merged));
}

int Simplex::index_of(Vertex v) const noexcept {
  const auto* it = std::lower_bound(begin(), end(), v);
  if (it == end() || *it != v) return -1;
  return static_cast<int>(it - begin());
}

std::string Simplex::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < size_; ++i) {
    if (i) out += ',';
    out += std::to_string(v_[i]);
  }
  return out + "}";
}

std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) noexcept {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ s.size();
  for (Vertex v : s) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace topomani
