#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wikidb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised while reading a dump. `offset()` is the byte offset of the
/// violation within the (decompressed) input stream.
class DumpError : public Error {
 public:
  DumpError(std::string source, std::uint64_t offset, const std::string& message)
      : Error(source + ":" + std::to_string(offset) + ": " + message),
        source_(std::move(source)),
        offset_(offset) {}

  const std::string& source() const noexcept { return source_; }
  std::uint64_t offset() const noexcept { return offset_; }

 private:
  std::string source_;
  std::uint64_t offset_;
};

class BuildError : public Error {
 public:
  using Error::Error;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace wikidb
