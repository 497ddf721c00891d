#ifndef DRD_ERROR_HPP
#define DRD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace drd {

enum class ErrorCode {
  InvalidArgument,
  IndexOutOfRange,
  SelfLoop,
  DuplicateEdge,
  Disconnected,
  EmptyCore,
  InvalidCycle,
  CycleTooSmall,
  PreconditionViolation,
  EdgeAbsent,
  EdgePresent,
  Disconnects,
  ParseError,
  IoError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

}  // namespace drd

#endif
