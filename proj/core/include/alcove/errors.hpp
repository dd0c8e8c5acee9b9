#pragma once

#include <stdexcept>
#include <string>

namespace alcove {

/// Reasons an input is rejected. The CLI maps every ValidationError to exit code 2.
enum class ValidationCode {
  kInvalidType,
  kParse,
  kDimensionMismatch,
  kNotAVertex,
  kNotConcave,
  kNotDominating,
  kLevelMismatch,
  kOutsideChamber,
  kEmptyInput,
  kIndexOutOfRange,
  kInvalidArgument,
};

/// Reasons a computation gave up. The CLI maps every ResourceError to exit code 3.
enum class ResourceCode {
  kCandidateBudget,
  kFoldSteps,
  kSearchBudget,
};

const char* to_string(ValidationCode code);
const char* to_string(ResourceCode code);

class ValidationError : public std::invalid_argument {
 public:
  ValidationError(ValidationCode code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}
  ValidationCode code() const noexcept { return code_; }

 private:
  ValidationCode code_;
};

class ResourceError : public std::runtime_error {
 public:
  ResourceError(ResourceCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ResourceCode code() const noexcept { return code_; }

 private:
  ResourceCode code_;
};

}  // namespace alcove
