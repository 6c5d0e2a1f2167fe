#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace topomani {

struct Digest128 {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  std::string to_hex() const;

  friend bool operator==(const Digest128&, const Digest128&) = default;
  friend auto operator<=>(const Digest128&, const Digest128&) = default;
};

struct Digest128Hash {
  std::size_t operator()(const Digest128& d) const noexcept { return static_cast<std::size_t>(d.lo ^ (d.hi * 0x9e3779b97f4a7c15ULL)); }
};

// MurmurHash3 x64 128-bit (Appleby's public-domain reference algorithm).
// The output is frozen: stored dataset digests depend on it.
Digest128 murmur3_x64_128(std::span<const std::byte> data, std::uint32_t seed = 0);
Digest128 murmur3_x64_128(std::string_view text, std::uint32_t seed = 0);

// Accumulates little-endian words and hashes them in one pass.
class HashBuilder {
 public:
  HashBuilder& add(std::uint64_t word);
  HashBuilder& add(const Digest128& d) { return add(d.lo).add(d.hi); }
  Digest128 finish(std::uint32_t seed = 0) const;

 private:
  std::vector<std::byte> bytes_;
};

}  // namespace topomani
