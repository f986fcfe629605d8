#include "alphacc/binary_io.hpp"

#include <bit>
#include <cstring>
#include <istream>
#include <ostream>

#include "alphacc/error.hpp"

namespace alphacc::io {

namespace {
template <class T>
void put_le(std::ostream& out, T v) {
  unsigned char buf[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i) buf[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xFF);
  out.write(reinterpret_cast<const char*>(buf), sizeof(T));
}
}  // namespace

void Writer::magic(std::string_view four_cc) { out_.write(four_cc.data(), 4); }
void Writer::u32(std::uint32_t v) { put_le(out_, v); }
void Writer::u64(std::uint64_t v) { put_le(out_, v); }
void Writer::f32(float v) { u32(std::bit_cast<std::uint32_t>(v)); }
void Writer::f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }

void Writer::str(std::string_view s) {
  u32(static_cast<std::uint32_t>(s.size()));
  out_.write(s.data(), static_cast<std::streamsize>(s.size()));
}

void Writer::f32_array(const float* data, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) f32(data[i]);
}

void Reader::raw(void* dst, std::size_t n) {
  in_.read(static_cast<char*>(dst), static_cast<std::streamsize>(n));
  if (static_cast<std::size_t>(in_.gcount()) != n) throw DataError(what_ + ": truncated file");
}

void Reader::expect_magic(std::string_view four_cc) {
  char buf[4];
  raw(buf, 4);
  if (std::string_view(buf, 4) != four_cc) {
    throw DataError(what_ + ": bad magic, expected " + std::string(four_cc));
  }
}

std::uint32_t Reader::u32() {
  unsigned char b[4];
  raw(b, 4);
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

std::uint64_t Reader::u64() {
  const std::uint64_t lo = u32();
  const std::uint64_t hi = u32();
  return lo | (hi << 32);
}

float Reader::f32() { return std::bit_cast<float>(u32()); }
double Reader::f64() { return std::bit_cast<double>(u64()); }

std::string Reader::str() {
  const std::uint32_t n = u32();
  if (n > (1u << 30)) throw DataError(what_ + ": implausible string length");
  std::string s(n, '\0');
  raw(s.data(), n);
  return s;
}

void Reader::f32_array(float* data, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) data[i] = f32();
}

}  // namespace alphacc::io
