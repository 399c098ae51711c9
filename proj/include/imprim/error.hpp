#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace imprim {

// Library error carrying a stable machine-readable kind ("NotAssociative",
// "NotHermitian", ...). Kinds are part of the public contract: tests and the
// CLI dispatch on them, the message is for humans.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

[[noreturn]] inline void fail(std::string kind, const std::string& message) {
  throw Error(std::move(kind), message);
}

}  // namespace imprim
