#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace microkin {

// Failure categories surfaced by the library. These map 1:1 onto the
// mk_status codes of the C API.
enum class Errc {
  InvalidArgument,
  NonSquareSolder,
  DegenerateSolder,
  NegativeSquare,
  Singular,
  NotInvertible,
  GridTooSmall,
  PathOutsideGrid,
  AffineConnectionNotSupported,
  NotMicroLinear,
  KernelDimMismatch,
  UnknownFamily,
  InadmissibleParams,
  Inconsistent,
  SyntaxError,
  Io,
  ParseError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Expression parse failure; `offset` is the byte position in the input text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& expected)
      : Error(Errc::SyntaxError,
              "offset " + std::to_string(offset) + ", expected " + expected),
        offset_(offset),
        expected_(expected) {}

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

}  // namespace microkin
