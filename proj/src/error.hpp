#pragma once

#include <stdexcept>
#include <string>

namespace kzk {

enum class ErrorCode {
  kSyntax = 1,
  kInhomogeneous,
  kUnsupportedDegree,
  kInvalidPresentation,
  kUnknownGenerator,
  kNotInvertible,
  kRelationsNotPreserved,
  kResource,
  kDimension,
  kMembership,
  kInvalidArgument,
  kInternal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kzk
