#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gaussinv {

enum class ErrorKind {
  parse_error,
  invalid_diagram,
  modulus_mismatch,
  index_out_of_range,
  unknown_chord,
  not_a_bridge,
  not_isolated,
  pattern_not_found,
  pattern_not_applicable,
  invalid_choice,
  kind_mismatch,
  invalid_argument,
  internal,
};

constexpr std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::invalid_diagram: return "InvalidDiagram";
    case ErrorKind::modulus_mismatch: return "ModulusMismatch";
    case ErrorKind::index_out_of_range: return "IndexOutOfRange";
    case ErrorKind::unknown_chord: return "UnknownChord";
    case ErrorKind::not_a_bridge: return "NotABridge";
    case ErrorKind::not_isolated: return "NotIsolated";
    case ErrorKind::pattern_not_found: return "PatternNotFound";
    case ErrorKind::pattern_not_applicable: return "PatternNotApplicable";
    case ErrorKind::invalid_choice: return "InvalidChoice";
    case ErrorKind::kind_mismatch: return "KindMismatch";
    case ErrorKind::invalid_argument: return "InvalidArgument";
    case ErrorKind::internal: return "InternalError";
  }
  return "Error";
}

/// Every failure raised by the library; what() reads "<Name>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gaussinv
