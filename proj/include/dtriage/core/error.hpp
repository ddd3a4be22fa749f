#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace dtriage {

/// Error with a stable machine-readable code alongside the human message.
/// Codes are short PascalCase tokens ("MalformedId", "IoFailure", ...) and are
/// part of the CLI contract: they end up in machine-readable error reports.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace dtriage
