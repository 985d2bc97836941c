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

#include <complex>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>

#include "zxv/diagram.hpp"
#include "zxv/semantics.hpp"

namespace zxv {

/// Complex spider parameter, optionally known exactly.
struct ZwParam {
  std::complex<double> value;
  std::optional<Cyclotomic> exact;

  static ZwParam from_complex(std::complex<double> z) { return {z, std::nullopt}; }
  static ZwParam from_exact(const Cyclotomic& c) { return {c.to_complex(), c}; }
  static ZwParam one() { return from_exact(Cyclotomic(1)); }
};

enum class ZwKind { ZSpider, W11, W12, Swap, FCross, Cup, Cap, Id, Empty, WDot, Seq, Tensor };

const char* zw_kind_name(ZwKind k);

/// Immutable ZW term; same composition conventions as Diagram.
class ZwDiagram {
 public:
  ZwDiagram();  // Empty

  /// White spider n -> m: 1 at the top-left corner, r at the bottom-right.
  static ZwDiagram zspider(std::size_t n, std::size_t m, ZwParam r);
  /// Black 1 -> 1 node [[0,1],[1,0]].
  static ZwDiagram w11();
  /// Black 1 -> 2 node: |0> -> |01> + |10>, |1> -> |00>.
  static ZwDiagram w12();
  static ZwDiagram swap();
  /// Swap with a -1 on |11>.
  static ZwDiagram fcross();
  static ZwDiagram cup();
  static ZwDiagram cap();
  static ZwDiagram id();
  static ZwDiagram empty();
  /// Scalar white dot of value 1 + r.
  static ZwDiagram wdot(ZwParam r);

  ZwKind kind() const;
  std::size_t inputs() const;
  std::size_t outputs() const;
  const ZwParam& param() const;
  const ZwDiagram& first() const;
  const ZwDiagram& second() const;

  struct Node;

 private:
  explicit ZwDiagram(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  friend ZwDiagram zw_seq(const ZwDiagram& a, const ZwDiagram& b);
  friend ZwDiagram zw_tensor(const ZwDiagram& a, const ZwDiagram& b);
  static ZwDiagram leaf(ZwKind k, std::size_t n, std::size_t m, ZwParam p);

  std::shared_ptr<const Node> node_;
};

ZwDiagram zw_seq(const ZwDiagram& a, const ZwDiagram& b);
ZwDiagram zw_tensor(const ZwDiagram& a, const ZwDiagram& b);
ZwDiagram zw_seq_all(const std::vector<ZwDiagram>& parts);
ZwDiagram zw_tensor_all(const std::vector<ZwDiagram>& parts);

/// Exact when every parameter is exact, otherwise float.
Matrix interp_zw(const ZwDiagram& d);

/// z = 2^n cos(beta) e^{i theta}.
struct Decomposition {
  unsigned n = 0;
  double theta = 0.0;  // [0, 2 pi)
  double beta = 0.0;   // [0, pi/2]
  std::complex<double> reconstruct() const;
};

Decomposition decompose(std::complex<double> z);

/// ZX image of a ground diagram. Triangles are expanded first.
ZwDiagram to_zw(const Diagram& d);
/// ZX image; spider parameters route through corner_effect unless they are phases.
Diagram to_zx(const ZwDiagram& d);
/// A 1 -> 0 ZX diagram with interpretation (1, r).
Diagram corner_effect(const ZwParam& r);
Diagram corner_effect(std::complex<double> r);

struct TranslationCheck {
  bool holds = false;
  /// Both interpretations were computed exactly.
  bool exact = false;
  double max_abs = 0.0;
};

/// [[to_zx(to_zw(d))]] against [[d]].
TranslationCheck roundtrip_check(const Diagram& d, double tol = 1e-9);
/// [[to_zw(d)]] against [[d]].
TranslationCheck check_to_zw(const Diagram& d, double tol = 1e-9);
/// [[to_zx(d)]] against [[d]].
TranslationCheck check_to_zx(const ZwDiagram& d, double tol = 1e-9);

}  // namespace zxv
