// Copyright 2026 The drinfeld-bounds Authors
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

#ifndef DRINFELD_ERROR_HPP
#define DRINFELD_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace drinfeld {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: expression syntax, file layout, unknown keys.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::size_t line = 0, std::size_t column = 0)
      : Error(what), offset_(offset), line_(line), column_(column) {}

  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
};

/// A mathematical precondition does not hold (non-prime p, division by zero,
/// bad reduction, a violated lemma hypothesis, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Seeing one of these is a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace drinfeld

#endif  // DRINFELD_ERROR_HPP
