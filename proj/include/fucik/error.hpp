#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fucik {

enum class ErrorCode {
  invalid_argument,
  infeasible_point,
  index_too_small,
  not_on_curve,
  odd_index,
  gamma_out_of_range,
  out_of_domain,
  negative_argument,
  no_convergence,
  divergent_argument,
  tail_not_boundable,
  odd_entries_not_diagonal,
  entry_quadrature_failure,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::infeasible_point: return "InfeasiblePoint";
    case ErrorCode::index_too_small: return "IndexTooSmall";
    case ErrorCode::not_on_curve: return "NotOnCurve";
    case ErrorCode::odd_index: return "OddIndex";
    case ErrorCode::gamma_out_of_range: return "GammaOutOfRange";
    case ErrorCode::out_of_domain: return "OutOfDomain";
    case ErrorCode::negative_argument: return "NegativeArgument";
    case ErrorCode::no_convergence: return "NoConvergence";
    case ErrorCode::divergent_argument: return "DivergentArgument";
    case ErrorCode::tail_not_boundable: return "TailNotBoundable";
    case ErrorCode::odd_entries_not_diagonal: return "OddEntriesNotDiagonal";
    case ErrorCode::entry_quadrature_failure: return "EntryQuadratureFailure";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fucik
