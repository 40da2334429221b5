#pragma once

#include <stdexcept>
#include <string>

namespace vfm {

/// Base class of every error raised by the toolkit. `kind()` is the stable
/// name used in reports and exit-code mapping.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("ParseError", "line " + std::to_string(line) + ", column " +
                                std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

#define VFM_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                   \
   public:                                                      \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  };

VFM_DEFINE_ERROR(SingularMatrix)
VFM_DEFINE_ERROR(ChartMismatch)
VFM_DEFINE_ERROR(DegenerateBasis)
VFM_DEFINE_ERROR(OnDivisor)
VFM_DEFINE_ERROR(BlowupDetected)
VFM_DEFINE_ERROR(BadDirection)
VFM_DEFINE_ERROR(NotHermitian)
VFM_DEFINE_ERROR(NotSemiTorus)
VFM_DEFINE_ERROR(PatternViolation)
VFM_DEFINE_ERROR(InvalidArgument)

#undef VFM_DEFINE_ERROR

}  // namespace vfm
