// Internal: exact 128-bit window keys for the hashed uniqueness sets.
// Entries are packed 16 bits each, which caps checkable window lengths at 8.
#pragma once

#include <cstdint>

namespace orientseq::detail {

using Key = unsigned __int128;

inline constexpr int kMaxHashedWindow = 8;

struct KeyHash {
  std::size_t operator()(Key k) const noexcept {
    auto mix = [](std::uint64_t x) {
      x += 0x9e3779b97f4a7c15ULL;
      x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
      x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
      return x ^ (x >> 31);
    };
    return static_cast<std::size_t>(mix(static_cast<std::uint64_t>(k)) ^
                                    (mix(static_cast<std::uint64_t>(k >> 64)) << 1));
  }
};

}  // namespace orientseq::detail
