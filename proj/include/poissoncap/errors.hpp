#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace poissoncap {

// Thrown when a bound or solver precondition fails. `code` is a stable,
// machine-parsable identifier; the CLI prints it verbatim on stderr and
// exits with status 2. The list of codes is documented in the README.
class PreconditionError : public std::domain_error {
 public:
  PreconditionError(std::string code, const std::string& what)
      : std::domain_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace poissoncap
