// Copyright 2026 The zxverify Authors
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

namespace zxv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArityMismatch : public Error {
 public:
  ArityMismatch(std::size_t outputs, std::size_t inputs, const std::string& where = "")
      : Error("arity mismatch: " + std::to_string(outputs) + " outputs vs " +
              std::to_string(inputs) + " inputs" + (where.empty() ? "" : " (" + where + ")")),
        outputs_(outputs),
        inputs_(inputs) {}
  explicit ArityMismatch(const std::string& msg) : Error("arity mismatch: " + msg) {}

  std::size_t outputs() const { return outputs_; }
  std::size_t inputs() const { return inputs_; }

 private:
  std::size_t outputs_ = 0;
  std::size_t inputs_ = 0;
};

class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(const std::string& name)
      : Error("unbound variable '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Raised when the exact cyclotomic backend cannot represent a value.
class ExactUnavailable : public Error {
 public:
  explicit ExactUnavailable(const std::string& why) : Error("exact backend unavailable: " + why) {}
};

class NonGroundDiagram : public Error {
 public:
  explicit NonGroundDiagram(const std::string& why = "diagram still contains variables")
      : Error("non-ground diagram: " + why) {}
};

class UnsupportedScale : public Error {
 public:
  explicit UnsupportedScale(long long k)
      : Error("unsupported angle scale " + std::to_string(k) + " (must be 1 mod 8)") {}
};

class ConstantsOutsidePi4 : public Error {
 public:
  explicit ConstantsOutsidePi4(const std::string& phase)
      : Error("phase constant outside (pi/4)Z: " + phase) {}
};

class NoSuchPort : public Error {
 public:
  explicit NoSuchPort(const std::string& what) : Error("no such port: " + what) {}
};

class NotSymmetric : public Error {
 public:
  NotSymmetric() : Error("state diagram is not symmetric under wire permutations") {}
};

/// Syntax error in the textual diagram or rule formats.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " +
              msg),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A phase that is not an integer-linear combination of variables.
class NonLinearPhase : public ParseError {
 public:
  NonLinearPhase(const std::string& msg, std::size_t line, std::size_t column)
      : ParseError("non-linear phase: " + msg, line, column) {}
};

}  // namespace zxv
