// include/qps/base.h

// Copyright 2026  QPS project contributors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef QPS_BASE_H_
#define QPS_BASE_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qps {

// All library failures derive from Error.  Each subclass corresponds to one
// failure family; the CLI maps them to exit status 2.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

// Malformed input document; line is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string &msg, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  int line() const { return line_; }
 private:
  int line_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string &msg) : Error(msg) {}
};

// Bad argument or unsupported character.  offset is in code points when the
// error refers to a position in a text, otherwise -1.
class InputError : public Error {
 public:
  explicit InputError(const std::string &msg, long offset = -1)
      : Error(offset >= 0 ? msg + " at offset " + std::to_string(offset) : msg),
        offset_(offset) {}
  long offset() const { return offset_; }
 private:
  long offset_;
};

class EncodingError : public Error {
 public:
  EncodingError(const std::string &msg, long offset)
      : Error(msg + " at offset " + std::to_string(offset)), offset_(offset) {}
  long offset() const { return offset_; }
 private:
  long offset_;
};

class PipelineError : public Error {
 public:
  explicit PipelineError(const std::string &msg) : Error(msg) {}
};

class SequencingError : public Error {
 public:
  explicit SequencingError(const std::string &msg) : Error(msg) {}
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string &msg) : Error(msg) {}
};

class AlignmentError : public Error {
 public:
  explicit AlignmentError(const std::string &msg) : Error(msg) {}
};

}  // namespace qps

#endif  // QPS_BASE_H_
