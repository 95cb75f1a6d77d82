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

#ifndef HYPERRECON_ERROR_HPP_
#define HYPERRECON_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperrecon {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input violates a documented precondition or type invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A text file could not be parsed. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line,
             const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Maximal-clique enumeration exceeded its configured cap.
class CliqueOverflowError : public Error {
 public:
  explicit CliqueOverflowError(std::size_t cap)
      : Error("maximal clique count exceeds cap of " + std::to_string(cap)),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

}  // namespace hyperrecon

#endif  // HYPERRECON_ERROR_HPP_
