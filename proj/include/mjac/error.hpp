#pragma once

#include <stdexcept>
#include <string>

namespace mjac {

enum class ErrorKind {
  invalid_input,   // malformed data or violated precondition
  not_unimodular,  // a matrix failed a total-unimodularity test
  budget,          // an exhaustive computation would exceed its guard
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(const std::string& what) {
  throw Error(ErrorKind::invalid_input, what);
}

}  // namespace mjac
