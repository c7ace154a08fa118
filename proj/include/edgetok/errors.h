// Copyright 2026 The EdgeTok Authors.
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
//
#ifndef EDGETOK_ERRORS_H_
#define EDGETOK_ERRORS_H_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace edgetok {

// Base class of every error raised by the library. The CLI maps the concrete
// subclasses onto its documented exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed OBJ content. |line| is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string &message, std::size_t line)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Geometric precondition violated (empty mesh, degenerate extent, coordinate
// outside the unit cube).
class MeshError : public Error {
 public:
  using Error::Error;
};

// Connectivity the half-edge structure cannot represent.
class NonManifoldError : public MeshError {
 public:
  enum class Kind { kDuplicateDirectedEdge, kEdgeOveruse };

  NonManifoldError(Kind kind, int32_t from, int32_t to, int32_t first_face,
                   int32_t second_face);

  Kind kind() const { return kind_; }
  int32_t from() const { return from_; }
  int32_t to() const { return to_; }
  int32_t first_face() const { return first_face_; }
  int32_t second_face() const { return second_face_; }

 private:
  Kind kind_;
  int32_t from_;
  int32_t to_;
  int32_t first_face_;
  int32_t second_face_;
};

// Token stream rejected by the grammar. |position| is the index of the first
// offending token, or the sequence length when the stream ends early.
class GrammarError : public Error {
 public:
  GrammarError(const std::string &message, std::size_t position)
      : Error(message), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// File system or binary container failure.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace edgetok

#endif  // EDGETOK_ERRORS_H_
