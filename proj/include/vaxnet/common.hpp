#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vaxnet {

using NodeId = std::uint32_t;

// Selects between the serial reference kernels and their OpenMP versions.
// Both produce the same results; the serial path exists for testing and
// benchmarking.
enum class Execution { Serial, Parallel };

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual std::string_view kind() const noexcept { return "Error"; }
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
  std::string_view kind() const noexcept override { return "InvalidArgument"; }
};

class EmptyGraph : public Error {
 public:
  using Error::Error;
  std::string_view kind() const noexcept override { return "EmptyGraph"; }
};

class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, std::size_t iterations,
                 double residual)
      : Error(what), iterations_(iterations), residual_(residual) {}
  std::string_view kind() const noexcept override { return "NonConvergence"; }
  std::size_t iterations() const noexcept { return iterations_; }
  double residual() const noexcept { return residual_; }

 private:
  std::size_t iterations_;
  double residual_;
};

class IoError : public Error {
 public:
  using Error::Error;
  std::string_view kind() const noexcept override { return "IoError"; }
};

class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t line)
      : Error(what), line_(line) {}
  std::string_view kind() const noexcept override { return "FormatError"; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// FNV-1a, used to turn stream names into seed tags.
constexpr std::uint64_t hash_tag(std::string_view s) noexcept {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

// Counter-based seed derivation: the child seed depends only on the parent
// seed and the path of tags, so adding a stream never shifts another one.
constexpr std::uint64_t derive_seed(
    std::uint64_t parent, std::initializer_list<std::uint64_t> path) noexcept {
  std::uint64_t s = mix64(parent);
  for (std::uint64_t tag : path) s = mix64(s ^ mix64(tag + 0x632BE59BD9B4E019ULL));
  return s;
}

}  // namespace vaxnet
