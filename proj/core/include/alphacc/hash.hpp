#pragma once

#include <cstdint>
#include <cstring>
#include <string_view>
#include <type_traits>

namespace alphacc {

/// 64-bit FNV-1a. Fixed across platforms, used for n-gram buckets and digests.
class Fnv1a {
 public:
  static constexpr std::uint64_t kOffset = 0xcbf29ce484222325ULL;
  static constexpr std::uint64_t kPrime = 0x100000001b3ULL;

  Fnv1a& bytes(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      state_ ^= p[i];
      state_ *= kPrime;
    }
    return *this;
  }

  Fnv1a& str(std::string_view s) {
    const auto len = static_cast<std::uint64_t>(s.size());
    value(len);
    return bytes(s.data(), s.size());
  }

  template <class T>
    requires std::is_arithmetic_v<T>
  Fnv1a& value(T v) {
    unsigned char buf[sizeof(T)];
    std::memcpy(buf, &v, sizeof(T));
    return bytes(buf, sizeof(T));
  }

  std::uint64_t digest() const { return state_; }

 private:
  std::uint64_t state_ = kOffset;
};

inline std::uint64_t fnv1a64(std::string_view s) { return Fnv1a().bytes(s.data(), s.size()).digest(); }

}  // namespace alphacc
