#include "holo/error.hpp"

namespace holo {

std::string_view to_string(ErrorKind kind) noexcept
{
  switch (kind) {
  case ErrorKind::InconsistentPresentation: return "InconsistentPresentation";
  case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
  case ErrorKind::UnsupportedPreset: return "UnsupportedPreset";
  case ErrorKind::NotNormal: return "NotNormal";
  case ErrorKind::NotAGroup: return "NotAGroup";
  case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
  case ErrorKind::HypothesisViolated: return "HypothesisViolated";
  case ErrorKind::UnsupportedModuli: return "UnsupportedModuli";
  case ErrorKind::ShapeMismatch: return "ShapeMismatch";
  case ErrorKind::NotInNHol: return "NotInNHol";
  case ErrorKind::NoIsomorphism: return "NoIsomorphism";
  case ErrorKind::ClosureFailure: return "ClosureFailure";
  case ErrorKind::CacheCorrupt: return "CacheCorrupt";
  case ErrorKind::MismatchFound: return "MismatchFound";
  case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

} // namespace holo
