#pragma once

#include <stdexcept>
#include <string>

namespace lvrank {

enum class ErrorCode {
  kParse,
  kInvalidArgument,
  kPositiveDiagonal,
  kNotAnEndpoint,
  kDegenerateEndpoint,
  kNotStablyDissipative,
  kNoSolution,
  kNoPositiveSolution,
  kNonPositivePoint,
  kSingularJacobian,
  kNoConvergence,
  kStepUnderflow,
  kNonPositiveStart,
};

const char* to_string(ErrorCode code);

/// Single exception type for every failure mode of the library; callers that
/// care about the failure reason switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lvrank
