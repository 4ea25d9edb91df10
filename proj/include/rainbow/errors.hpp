// Copyright 2026 The Authors.
//
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

#ifndef RAINBOW_ERRORS_HPP_
#define RAINBOW_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rainbow {

// Invalid element id or malformed matroid description.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition or an internal invariant was violated. Raised
// by the solver only when something is wrong with the implementation.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An instance does not satisfy the hypotheses required by the solver
// (disjointness, set sizes, double independence).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed instance text. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Randomized instance generation ran out of restarts.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Brute force was asked to run above its size cap.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rainbow

#endif  // RAINBOW_ERRORS_HPP_
