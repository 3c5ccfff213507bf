#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace contraction {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedInput : public Error {
 public:
  using Error::Error;
};

class RingMismatch : public Error {
 public:
  using Error::Error;
};

class SpecMismatch : public Error {
 public:
  using Error::Error;
};

class BadParams : public Error {
 public:
  using Error::Error;
};

class NotExact : public Error {
 public:
  using Error::Error;
};

class OrderMismatch : public Error {
 public:
  using Error::Error;
};

class InsufficientPrecision : public Error {
 public:
  using Error::Error;
};

class DegreeZero : public Error {
 public:
  using Error::Error;
};

/// Text that does not follow one of the input grammars. `position` is a
/// zero-based byte offset into the offending payload.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A finite window of parameters (bits, sequence entries) is too short to
/// determine a requested coefficient. `needed_lo`/`needed_hi` name the index
/// range that would have been required.
class WindowTooSmall : public Error {
 public:
  WindowTooSmall(const std::string& what, long needed_lo, long needed_hi)
      : Error(what + " (needed index range [" + std::to_string(needed_lo) +
              ", " + std::to_string(needed_hi) + "])"),
        needed_lo_(needed_lo),
        needed_hi_(needed_hi) {}

  long needed_lo() const noexcept { return needed_lo_; }
  long needed_hi() const noexcept { return needed_hi_; }

 private:
  long needed_lo_;
  long needed_hi_;
};

/// A polynomial handed to the classification layer is not contractive at its
/// place.
class NotContractive : public Error {
 public:
  NotContractive(const std::string& place, const std::string& poly,
                 const std::string& test)
      : Error("polynomial " + poly + " is not contractive at place " + place +
              " (" + test + ")"),
        place_(place),
        poly_(poly),
        test_(test) {}

  const std::string& place() const noexcept { return place_; }
  const std::string& poly() const noexcept { return poly_; }
  const std::string& test() const noexcept { return test_; }

 private:
  std::string place_;
  std::string poly_;
  std::string test_;
};

}  // namespace contraction
