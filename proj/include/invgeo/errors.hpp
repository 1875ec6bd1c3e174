#ifndef INVGEO_ERRORS_HPP
#define INVGEO_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace invgeo {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class SizeMismatchError : public Error {
 public:
  using Error::Error;
};

// A closure or constructor exceeded a configured cap.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, std::size_t cap)
      : Error(what), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

// Input data does not satisfy the axioms of the structure being built.
// The witness holds the offending indices (e.g. a non-associative triple).
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, std::vector<std::uint64_t> witness)
      : Error(what), witness_(std::move(witness)) {}
  const std::vector<std::uint64_t>& witness() const noexcept {
    return witness_;
  }

 private:
  std::vector<std::uint64_t> witness_;
};

class PreconditionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
  explicit PreconditionError(const std::string& what)
      : ValidationError(what, {}) {}
};

// A computed object contradicts a theorem that guarantees its properties.
// Seeing one of these means there is a bug in the library.
class TheoremViolation : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::string field)
      : Error(format(what, line, field)), line_(line), field_(std::move(field)) {}
  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  static std::string format(const std::string& what, std::size_t line,
                            const std::string& field) {
    std::string out = "parse error";
    if (line != 0) out += " at line " + std::to_string(line);
    if (!field.empty()) out += " in field '" + field + "'";
    return out + ": " + what;
  }
  std::size_t line_;
  std::string field_;
};

}  // namespace invgeo

#endif  // INVGEO_ERRORS_HPP
