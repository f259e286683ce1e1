#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace locwave {

// Error categories map onto CLI exit codes: config -> 2, numerical -> 3,
// capacity -> 4. Precondition violations count as config-level mistakes.
enum class ErrorCategory {
  invalid_argument,
  capacity,
  numerical,
  config,
  io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, std::string message)
      : std::runtime_error(std::move(message)), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

[[noreturn]] inline void throw_invalid(std::string message) {
  throw Error(ErrorCategory::invalid_argument, std::move(message));
}

[[noreturn]] inline void throw_capacity(std::string message) {
  throw Error(ErrorCategory::capacity, std::move(message));
}

[[noreturn]] inline void throw_numerical(std::string message) {
  throw Error(ErrorCategory::numerical, std::move(message));
}

[[noreturn]] inline void throw_io(std::string message) {
  throw Error(ErrorCategory::io, std::move(message));
}

}  // namespace locwave
