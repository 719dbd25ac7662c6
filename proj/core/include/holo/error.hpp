#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace holo {

/// Error families surfaced by the library. The CLI maps each family to a
/// distinct process exit code (see tools/README section in the top-level
/// README).
enum class ErrorKind {
  InconsistentPresentation,
  OrderCapExceeded,
  UnsupportedPreset,
  NotNormal,
  NotAGroup,
  SearchBudgetExceeded,
  HypothesisViolated,
  UnsupportedModuli,
  ShapeMismatch,
  NotInNHol,
  NoIsomorphism,
  ClosureFailure,
  CacheCorrupt,
  MismatchFound,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
  : std::runtime_error(std::string(to_string(kind)) + ": " + what),
    _kind(kind)
  {}

  ErrorKind kind() const noexcept { return _kind; }

private:
  ErrorKind _kind;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string &what)
{ throw Error(kind, what); }

} // namespace holo
