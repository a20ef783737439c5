#ifndef ARCMOTION_ERROR_HPP
#define ARCMOTION_ERROR_HPP

#include <stdexcept>
#include <string>

namespace arcmotion {

enum class ErrorCode {
  IdenticalCircles,
  NoSolution,
  NoIntersection,
  Degenerate,
  NegativeInput,
  NotATriangle,
  UnsortedSides,
  IndexOutOfRange,
  OutOfRange,
  HypothesesViolated,
  ConstructionFailed,
  InvalidSpec,
  SceneIncomplete,
  ArcTooLong,
  RecursionInfeasible,
};

inline const char *error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::IdenticalCircles:   return "IDENTICAL_CIRCLES";
    case ErrorCode::NoSolution:         return "NO_SOLUTION";
    case ErrorCode::NoIntersection:     return "NO_INTERSECTION";
    case ErrorCode::Degenerate:         return "DEGENERATE";
    case ErrorCode::NegativeInput:      return "NEGATIVE_INPUT";
    case ErrorCode::NotATriangle:       return "NOT_A_TRIANGLE";
    case ErrorCode::UnsortedSides:      return "UNSORTED_SIDES";
    case ErrorCode::IndexOutOfRange:    return "INDEX_OUT_OF_RANGE";
    case ErrorCode::OutOfRange:         return "OUT_OF_RANGE";
    case ErrorCode::HypothesesViolated: return "HYPOTHESES_VIOLATED";
    case ErrorCode::ConstructionFailed: return "CONSTRUCTION_FAILED";
    case ErrorCode::InvalidSpec:        return "INVALID_SPEC";
    case ErrorCode::SceneIncomplete:    return "SCENE_INCOMPLETE";
    case ErrorCode::ArcTooLong:         return "ARC_TOO_LONG";
    case ErrorCode::RecursionInfeasible: return "RECURSION_INFEASIBLE";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/* raised when an invariant fails while growing a scene; carries the failure site */
class ConstructionError : public Error {
 public:
  ConstructionError(int level, double x, const std::string &invariant)
      : Error(ErrorCode::ConstructionFailed,
              "level " + std::to_string(level) + ", x=" + std::to_string(x) + ", " + invariant),
        level_(level), x_(x), invariant_(invariant) {}
  int level() const { return level_; }
  double x() const { return x_; }
  const std::string &invariant() const { return invariant_; }

 private:
  int level_;
  double x_;
  std::string invariant_;
};

}  // namespace arcmotion

#endif
