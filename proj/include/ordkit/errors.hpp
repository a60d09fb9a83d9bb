#ifndef ORDKIT_ERRORS_HPP
#define ORDKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ordkit {

enum class Err {
  CeilingExceeded,
  IncomparableSubscript,
  SizeLimitExceeded,
  LengthMismatch,
  IndexOutOfRange,
  NotComponentwiseLess,
  NotACollapse,
  ShapeMismatch,
  TheoryFloor,
  BoundViolated,
  InvalidRegular,
  NotRelativizable,
  UndecidableLiteral,
  ParseError,
  Internal,
};

const char* errName(Err e);

// Library-wide exception; `kind` mirrors the error taxonomy of the public API.
class Error : public std::runtime_error {
 public:
  Error(Err kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
  Err kind() const { return kind_; }

 private:
  Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace ordkit

#endif
