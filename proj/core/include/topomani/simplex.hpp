#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace topomani {

using Vertex = std::uint32_t;

inline constexpr int kMaxSimplexSize = 4;

/// A simplex stored as a strictly increasing list of at most four vertex ids.
///
/// Ordering is dimension-major, then lexicographic on the vertex list, which
/// is the canonical node order used throughout the library.
class Simplex {
 public:
  Simplex() = default;
  Simplex(std::initializer_list<Vertex> vertices);
  explicit Simplex(std::span<const Vertex> vertices);

  // Builds from an arbitrary vertex list: sorts it and rejects repeats or
  // more than kMaxSimplexSize vertices.
  static Simplex from_unsorted(std::span<const Vertex> vertices);

  std::size_t size() const noexcept { return size_; }
  int dimension() const noexcept { return static_cast<int>(size_) - 1; }
  bool empty() const noexcept { return size_ == 0; }

  Vertex operator[](std::size_t i) const noexcept { return v_[i]; }
  const Vertex* begin() const noexcept { return v_.data(); }
  const Vertex* end() const noexcept { return v_.data() + size_; }
  std::span<const Vertex> vertices() const noexcept { return {v_.data(), size_}; }

  bool contains(Vertex v) const noexcept;
  bool contains(const Simplex& face) const noexcept;
  bool disjoint(const Simplex& other) const noexcept;

  // Face obtained by dropping the i-th vertex.
  Simplex without_index(std::size_t i) const noexcept;
  Simplex without(Vertex v) const;
  Simplex with(Vertex v) const;
  Simplex united(const Simplex& other) const;

  // Index of v in the sorted list, or -1.
  int index_of(Vertex v) const noexcept;

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }
  std::string to_string() const;

  friend bool operator==(const Simplex& a, const Simplex& b) noexcept {
    return a.size_ == b.size_ && std::equal(a.begin(), a.end(), b.begin());
  }
  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) noexcept;

 private:
  std::array<Vertex, kMaxSimplexSize> v_{};
  std::uint8_t size_ = 0;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

}  // namespace topomani
