// Copyright 2026 The fusionhg Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FUSIONHG_ERROR_HPP_
#define FUSIONHG_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace fusionhg {

// Machine-readable failure categories. The CLI maps each one to its own
// exit status.
enum class ErrorKind {
  usage,
  label_domain,
  axiom_violation,
  invalid_table,
  capacity,
  numeric,
  internal_invariant,
};

std::string_view to_string(ErrorKind kind);
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Quadrature that did not reach its tolerance within the node budget.
class NumericError : public Error {
 public:
  NumericError(const std::string& message, double residual)
      : Error(ErrorKind::numeric, message), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// Malformed or inconsistent character table. `location` names the offending
// field (JSON pointer style) or "line:column" for syntax errors.
class InvalidTableError : public Error {
 public:
  InvalidTableError(const std::string& message, std::string location = {})
      : Error(ErrorKind::invalid_table,
              location.empty() ? message : location + ": " + message),
        location_(std::move(location)) {}

  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace fusionhg

#endif  // FUSIONHG_ERROR_HPP_
