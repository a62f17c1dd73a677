#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mindeg {

/// Named failure conditions raised by the toolkit. Genericity hypotheses are
/// checked explicitly, so most of these name the violated condition.
enum class ErrorKind {
  InvalidArgument,
  ParseError,
  DegeneratePosition,
  InvalidBlock,
  DimensionTooSmall,
  OutOfRange,
  InvalidCodim,
  UnknownVariant,
  CaseInapplicable,
  NotCastelnuovo,
  DuplicateNode,
  DegenerateConfig,
  OverlappingSupport,
  CenterHit,
  CollinearCenters,
  RankDeficient,
  ZeroDualRow,
};

inline std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DegeneratePosition: return "DegeneratePosition";
    case ErrorKind::InvalidBlock: return "InvalidBlock";
    case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::InvalidCodim: return "InvalidCodim";
    case ErrorKind::UnknownVariant: return "UnknownVariant";
    case ErrorKind::CaseInapplicable: return "CaseInapplicable";
    case ErrorKind::NotCastelnuovo: return "NotCastelnuovo";
    case ErrorKind::DuplicateNode: return "DuplicateNode";
    case ErrorKind::DegenerateConfig: return "DegenerateConfig";
    case ErrorKind::OverlappingSupport: return "OverlappingSupport";
    case ErrorKind::CenterHit: return "CenterHit";
    case ErrorKind::CollinearCenters: return "CollinearCenters";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::ZeroDualRow: return "ZeroDualRow";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mindeg
