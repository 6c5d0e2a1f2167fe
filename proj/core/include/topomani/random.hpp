#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

namespace topomani {

using Rng = std::mt19937_64;

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view text) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Independent substream seed for (master seed, record id, operation name).
// Results do not depend on which thread processes which record.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::string_view id,
                                    std::string_view op) noexcept {
  return mix64(mix64(master ^ fnv1a64(id)) ^ fnv1a64(op));
}

// Unbiased draw from [0, n) for n >= 1.
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

}  // namespace topomani
