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
#include <string>
#include <vector>

#include "zxv/diagram.hpp"
#include "zxv/zw.hpp"

namespace zxv {

/// Position of a construct in the source text (1-based).
struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Parses a ZX term:
///   term   := tensor (';' tensor)*        A ; B feeds A's outputs into B
///   tensor := atom ('*' atom)*
///   atom   := Z[n,m](phase) | X[n,m](phase) | H | id | swap | cup | cap | empty | T | '(' term ')'
/// Phases are sums of `k v`, `p/q pi` and `x.yr` (radians) terms.
/// `origin` shifts reported positions when the text is embedded in a larger file.
Diagram parse_zx(const std::string& text, SourceSpan origin = {});
PhaseExpr parse_phase(const std::string& text, SourceSpan origin = {});
/// Canonical text; parse_zx(print_zx(d)) == d structurally.
std::string print_zx(const Diagram& d);

/// ZW terms: Zw[n,m](re,im) | Zw[n,m](exp(phase)) | W11 | W12 | fcross | wdot(re,im) |
/// wdot(exp(phase)) | cup | cap | swap | id | empty, with ';' and '*'.
ZwDiagram parse_zw(const std::string& text, SourceSpan origin = {});
std::string print_zw(const ZwDiagram& d);

/// A list of ZX diagrams, one statement per line ('#' starts a comment). An
/// optional first statement `version 1` tags the format.
struct ParsedDocument {
  int version = 1;
  std::vector<Diagram> diagrams;
  std::vector<SourceSpan> spans;
};

ParsedDocument parse_document(const std::string& text);
std::string print_document(const ParsedDocument& doc);

}  // namespace zxv
