// Copyright 2026 The gamesem Authors
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

#ifndef GAMESEM_ERROR_HPP_
#define GAMESEM_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace gamesem {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define GAMESEM_DEFINE_ERROR(Name)      \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  };

GAMESEM_DEFINE_ERROR(MalformedSequence)
GAMESEM_DEFINE_ERROR(NameClash)
GAMESEM_DEFINE_ERROR(UnsupportedKind)
GAMESEM_DEFINE_ERROR(UnknownMove)
GAMESEM_DEFINE_ERROR(NotAQuestion)
GAMESEM_DEFINE_ERROR(NotAPlay)
GAMESEM_DEFINE_ERROR(IllegalNextMove)
GAMESEM_DEFINE_ERROR(ArenaMismatch)
GAMESEM_DEFINE_ERROR(SourceMismatch)
GAMESEM_DEFINE_ERROR(UnknownConstant)
GAMESEM_DEFINE_ERROR(ParseError)

#undef GAMESEM_DEFINE_ERROR

// Surface-language errors carry a source position.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class TypeError : public Error {
 public:
  using Error::Error;
};

}  // namespace gamesem

#endif  // GAMESEM_ERROR_HPP_
