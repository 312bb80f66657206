// Copyright 2026 The twoprover Authors
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

#ifndef TWOPROVER_ERRORS_H_
#define TWOPROVER_ERRORS_H_

#include <stdexcept>
#include <string>

namespace twoprover {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Table or operand shapes do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A dense table or LP would exceed the configured size guard.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

// A constructed object violates one of its invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An operation was called on an input outside its precondition
// (signaling strategy, non-projective measurement, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Text input could not be parsed. line() is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                       : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace twoprover

#endif  // TWOPROVER_ERRORS_H_
