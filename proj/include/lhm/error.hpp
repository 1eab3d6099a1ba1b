#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lhm {

enum class ErrorKind {
  MalformedCycle,
  PointOutOfRange,
  RepeatedPoint,
  DegreeMismatch,
  GroupTooLarge,
  IndexOutOfRange,
  NotASubgroup,
  GroupMismatch,
  GroupTooLargeForAut,
  InvalidTriple,
  InvalidHypermap,
  LinearityViolation,
  NonIntegralGenus,
  DichotomyViolated,
  BadParameter,
  UnknownSolid,
  SearchFailed,
  NotSimple,
  ParseError,
  DuplicateName,
  Internal,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedCycle: return "MalformedCycle";
    case ErrorKind::PointOutOfRange: return "PointOutOfRange";
    case ErrorKind::RepeatedPoint: return "RepeatedPoint";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::GroupTooLargeForAut: return "GroupTooLargeForAut";
    case ErrorKind::InvalidTriple: return "InvalidTriple";
    case ErrorKind::InvalidHypermap: return "InvalidHypermap";
    case ErrorKind::LinearityViolation: return "LinearityViolation";
    case ErrorKind::NonIntegralGenus: return "NonIntegralGenus";
    case ErrorKind::DichotomyViolated: return "DichotomyViolated";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::UnknownSolid: return "UnknownSolid";
    case ErrorKind::SearchFailed: return "SearchFailed";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

// Internal kinds signal a broken invariant rather than bad user input; the CLI
// maps them to a distinct exit code.
constexpr bool is_internal(ErrorKind kind) noexcept {
  return kind == ErrorKind::DichotomyViolated ||
         kind == ErrorKind::LinearityViolation ||
         kind == ErrorKind::NonIntegralGenus ||
         kind == ErrorKind::SearchFailed || kind == ErrorKind::Internal;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lhm
