#pragma once

#include <stdexcept>
#include <string>

namespace planeguard {

enum class ErrorCode {
  ZeroNormal,
  NonFiniteCoordinate,
  CoincidentPlayers,
  CoincidentPursuers,
  DuplicatePlayers,
  EmptyPursuerSet,
  NonPositiveExtent,
  ResolutionTooLow,
  NotBothActive,
  CollinearProjections,
  NotCollinearCase,
  EvaderNotInPlay,
  DegenerateConfiguration,
  NonUnitHeading,
  NonPositiveDt,
  TargetNotOnPlane,
  ParseError,
};

/// Typed error carrying one of the codes above; CLI maps codes to exit status.
class GameError : public std::runtime_error {
 public:
  GameError(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw GameError(code, message);
}

const char* error_code_name(ErrorCode code);

}  // namespace planeguard
