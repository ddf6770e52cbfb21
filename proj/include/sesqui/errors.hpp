// Copyright 2026 The sesqui Authors.
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sesqui {

/// Base class for every data error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A digit string whose exact value is not a natural number.
class NotNatural : public Error {
 public:
  NotNatural(std::string numerator, std::string denominator)
      : Error("digit string evaluates to " + numerator + "/" + denominator +
              ", which is not a natural number"),
        numerator_(std::move(numerator)),
        denominator_(std::move(denominator)) {}

  const std::string& numerator() const noexcept { return numerator_; }
  const std::string& denominator() const noexcept { return denominator_; }

 private:
  std::string numerator_;
  std::string denominator_;
};

/// Strict decoding rejected a representation with leading zeros.
class NonCanonical : public Error {
 public:
  using Error::Error;
};

class LengthNotMultiple : public Error {
 public:
  LengthNotMultiple(std::size_t length, std::size_t block)
      : Error("word length " + std::to_string(length) +
              " is not a multiple of the block length " + std::to_string(block)) {}
};

class MissingRule : public Error {
 public:
  using Error::Error;
};

class TooShort : public Error {
 public:
  using Error::Error;
};

class NoGrowth : public Error {
 public:
  using Error::Error;
};

class NotFixed : public Error {
 public:
  using Error::Error;
};

class IncompleteAlphabet : public Error {
 public:
  using Error::Error;
};

class InconsistentCoding : public Error {
 public:
  using Error::Error;
};

class WordAbsent : public Error {
 public:
  using Error::Error;
};

/// Syntax or consistency error in a rule file; `line()` is 1-based.
class RuleFileError : public Error {
 public:
  RuleFileError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace sesqui
