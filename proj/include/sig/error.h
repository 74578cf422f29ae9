/*
 * Copyright 2026 The SIG Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SIG_ERROR_H_
#define SIG_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sig {

// Base of every error raised by the library. The CLI maps the concrete
// subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied an argument outside the documented domain.
class InputError : public Error {
 public:
  using Error::Error;
};

// Input data (CSV, forest document, rule text) is malformed.
class DataError : public Error {
 public:
  using Error::Error;
};

// Text that failed to parse; `offset` is the byte position of the fault.
class ParseError : public DataError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : DataError(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Problem size exceeds an exact-enumeration bound.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// An internal invariant did not hold.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace sig

#endif  // SIG_ERROR_H_
