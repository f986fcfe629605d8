#pragma once

// Little-endian fixed-width encoding shared by the index, embedding and
// checkpoint file formats.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace alphacc::io {

class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(out) {}

  void magic(std::string_view four_cc);
  void u32(std::uint32_t v);
  void u64(std::uint64_t v);
  void i32(std::int32_t v) { u32(static_cast<std::uint32_t>(v)); }
  void f32(float v);
  void f64(double v);
  void str(std::string_view s);  // u32 length + bytes
  void f32_array(const float* data, std::size_t n);

 private:
  std::ostream& out_;
};

class Reader {
 public:
  Reader(std::istream& in, std::string what) : in_(in), what_(std::move(what)) {}

  void expect_magic(std::string_view four_cc);
  std::uint32_t u32();
  std::uint64_t u64();
  std::int32_t i32() { return static_cast<std::int32_t>(u32()); }
  float f32();
  double f64();
  std::string str();
  void f32_array(float* data, std::size_t n);

 private:
  void raw(void* dst, std::size_t n);

  std::istream& in_;
  std::string what_;
};

}  // namespace alphacc::io
