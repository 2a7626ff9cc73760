// Copyright 2026 The cs-eval Authors
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

#ifndef CSEVAL_ERROR_H_
#define CSEVAL_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cseval {

// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The reference side of a rate metric is empty while the hypothesis is not.
class EmptyReferenceError : public Error {
 public:
  using Error::Error;
};

// Malformed input file. `line()` is 1-based, 0 when not line-oriented.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class DuplicateKeyError : public ParseError {
 public:
  using ParseError::ParseError;
};

class DuplicateIdError : public ParseError {
 public:
  using ParseError::ParseError;
};

// A translation channel has a row marked as failed for this sentence.
class TranslationFailedError : public Error {
 public:
  using Error::Error;
};

class InvalidSchemeError : public Error {
 public:
  using Error::Error;
};

class UnknownGraphemeError : public Error {
 public:
  using Error::Error;
};

class UnknownPhoneError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

class ZeroVectorError : public Error {
 public:
  using Error::Error;
};

class MissingEmbeddingError : public Error {
 public:
  using Error::Error;
};

class NoLanguageTokensError : public Error {
 public:
  using Error::Error;
};

class InsufficientAnnotatorsError : public Error {
 public:
  using Error::Error;
};

// Invalid run configuration (unknown metric, missing file, bad option).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace cseval

#endif  // CSEVAL_ERROR_H_
