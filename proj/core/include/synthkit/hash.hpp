#pragma once

#include <cstdint>
#include <cstring>
#include <string>
#include <string_view>
#include <vector>

namespace synthkit {

// FNV-1a, 64 bit. Fixed constants so hashes (and therefore fingerprints,
// checkpoints and manifests) are bit-identical across platforms.
inline constexpr uint64_t kFnvOffset = 14695981039346656037ull;
inline constexpr uint64_t kFnvPrime = 1099511628211ull;

inline uint64_t fnv1a(const void* data, size_t n, uint64_t h = kFnvOffset) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= kFnvPrime;
  }
  return h;
}

inline uint64_t fnv1a(std::string_view s, uint64_t h = kFnvOffset) {
  return fnv1a(s.data(), s.size(), h);
}

// Incremental hasher for composing structured keys. Integers are fed as
// little-endian bytes regardless of host order.
class Hasher {
 public:
  Hasher& bytes(const void* data, size_t n) {
    h_ = fnv1a(data, n, h_);
    return *this;
  }
  Hasher& str(std::string_view s) {
    u64(s.size());
    return bytes(s.data(), s.size());
  }
  Hasher& u64(uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    return bytes(b, 8);
  }
  Hasher& i64(int64_t v) { return u64(static_cast<uint64_t>(v)); }
  Hasher& u8(uint8_t v) { return bytes(&v, 1); }
  uint64_t digest() const { return h_; }

 private:
  uint64_t h_ = kFnvOffset;
};

std::string to_hex(uint64_t v);
uint64_t hash_file(const std::string& path);  // throws FormatError if unreadable

}  // namespace synthkit
