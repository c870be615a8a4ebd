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

#ifndef MATEX_ERRORS_HPP_
#define MATEX_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace matex {

// Bad element id, label, or membership supplied by a caller.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called outside its documented preconditions.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// fundamental_circuit was asked for the support of an element the
// independent set does not span.
class NotSpannedError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A matroid that is not the disjoint union of two bases was given where a
// block matroid is required. The message carries the witness.
class NotBlockError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A result the theory guarantees was not produced. Either the oracle is
// broken or the implementation is.
class InternalConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exchange sequence is malformed (repeated elements, wrong sides,
// mismatched lengths). Distinct from a well-formed sequence that fails.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive search exceeded its step budget.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ReplayError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace matex

#endif  // MATEX_ERRORS_HPP_
