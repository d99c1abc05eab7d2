#ifndef HECKEWALKS_ERROR_HPP
#define HECKEWALKS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace heckewalks {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input at the syntax level: words, masks, orientation
// descriptors, Cartan matrices that are not even square, etc.
struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Structurally well-formed input that violates a semantic requirement
// (non-reduced word where a reduced one is required, periodic orientation
// on a non-affine system, mixing elements of different root systems, ...).
struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Signed 64-bit arithmetic left its range.  All arithmetic in the library
// is exact; hitting this means the computation needs bigger integers, and
// silently wrapping would corrupt results, so we refuse.
struct OverflowError : Error {
  explicit OverflowError(const std::string& msg) : Error(msg) {}
};

} // namespace heckewalks

#endif
