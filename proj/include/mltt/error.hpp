#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "mltt/term.hpp"

namespace mltt {

enum class ErrorClass {
  ParseError,
  UnboundName,
  LevelArityMismatch,
  TypeMismatch,
  NotAFunction,
  NotAPair,
  NotAUniverse,
  CheckOnlyTermInInferPosition,
  UnsafeAssume,
  DepthExceeded,
  Internal,
};

std::string_view error_class_name(ErrorClass c);

// Every failure the kernel reports: parse errors, type errors, and budget exhaustion.
// TypeMismatch carries both sides printed as normal forms.
class KernelError : public std::runtime_error {
 public:
  KernelError(ErrorClass cls, Span span, const std::string& message, std::string expected = {},
              std::string got = {})
      : std::runtime_error(message),
        cls_(cls),
        span_(span),
        expected_(std::move(expected)),
        got_(std::move(got)) {}

  ErrorClass error_class() const { return cls_; }
  Span span() const { return span_; }
  const std::string& expected() const { return expected_; }
  const std::string& got() const { return got_; }
  // Source file the error belongs to, when it differs from the one being reported on.
  const std::string& file() const { return file_; }
  void set_file(const std::string& file) {
    if (file_.empty()) file_ = file;
  }

  // Fills in a location when the error was raised without one.
  void locate(Span span) {
    if (!span_.known()) span_ = span;
  }

 private:
  ErrorClass cls_;
  Span span_;
  std::string expected_;
  std::string got_;
  std::string file_;
};

}  // namespace mltt
