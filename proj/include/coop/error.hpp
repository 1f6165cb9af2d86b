// Copyright 2026 The Coopetition Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COOP_ERROR_HPP_
#define COOP_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coop {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or mismatched input: wrong dimensions, bad probabilities,
// partition/candidate disagreement.
class InputError : public Error {
 public:
  using Error::Error;
};

// Text that could not be parsed. Line and column are 1-based; column 0 means
// "whole line".
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& reason)
      : InputError("line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ": " + reason),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// The input is well formed but an operation's precondition does not hold
// (e.g. a profile handed to ne_to_coe is not a Nash equilibrium).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The request exceeds a documented size ceiling.
class ScaleError : public Error {
 public:
  using Error::Error;
};

}  // namespace coop

#endif  // COOP_ERROR_HPP_
