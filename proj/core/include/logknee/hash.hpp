#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace logknee {

// FNV-1a, 64 bit. Used for content digests (prompt pinning, artifact
// digests in reports); not a cryptographic hash.
constexpr std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= static_cast<std::uint64_t>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v);

inline std::string digest_hex(std::string_view data) { return hex64(fnv1a64(data)); }

// splitmix64 finalizer; stable across platforms.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derives a per-cell seed from the experiment seed and the (k, run) cell
// coordinates, so cells are independent yet reproducible.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t k, std::uint64_t run) {
  return mix64(mix64(base ^ mix64(k)) ^ mix64(run ^ 0x5bf03635ULL));
}

}  // namespace logknee
