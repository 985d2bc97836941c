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

#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"
#include "zxv/dsl.hpp"
#include "zxv/errors.hpp"
#include "zxv/projector.hpp"
#include "zxv/rules.hpp"
#include "zxv/semantics.hpp"
#include "zxv/zw.hpp"

namespace zxv::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : Error {
  using Error::Error;
};

struct Settings {
  std::string file;
  std::string backend = "exact";
  std::string functor = "std";
  std::string method = "both";
  std::string to;
  std::string lang = "zx";
  std::uint64_t seed = 20260101;
  std::size_t budget = 1000;
  double tol = 1e-9;
  bool json = false;
  bool closures = false;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::stringstream ss;
  if (path == "-") {
    ss << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open " + path);
    ss << f.rdbuf();
  }
  return ss.str();
}

std::int64_t functor_scale(const std::string& s) {
  if (s == "std") return 1;
  if (s.rfind("scaled:", 0) == 0) {
    try {
      std::size_t used = 0;
      const long long k = std::stoll(s.substr(7), &used);
      if (used == s.size() - 7) return k;
    } catch (const std::exception&) {
    }
  }
  throw UsageError("--functor expects std or scaled:K, got '" + s + "'");
}

Method method_from(const std::string& s) {
  if (s == "grid") return Method::Grid;
  if (s == "projector") return Method::Projector;
  return Method::Both;
}

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json matrix_json(const Matrix& m) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["backend"] = m.is_exact() ? "exact" : "float";
  j["fell_back"] = m.fell_back();
  const FloatMatrix f = m.to_float();
  json entries = json::array(), numeric = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array(), nrow = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      row.push_back(m.is_exact() ? m.exact()(r, c).to_string() : format_complex(f(r, c)));
      nrow.push_back(json::array({f(r, c).real(), f(r, c).imag()}));
    }
    entries.push_back(row);
    numeric.push_back(nrow);
  }
  j["entries"] = entries;
  j["numeric"] = numeric;
  return j;
}

json assignment_json(const std::optional<std::map<std::string, Angle>>& a) {
  if (!a) return nullptr;
  json j = json::object();
  for (const auto& [k, v] : *a) j[k] = v.to_string();
  return j;
}

EvalOptions eval_options(const Settings& s) {
  EvalOptions o;
  if (s.backend == "float") o.backend = Backend::Float;
  // exact requests degrade to floats only when the order cap is exceeded, and say so
  o.allow_fallback = true;
  o.scale = functor_scale(s.functor);
  return o;
}

std::vector<Diagram> load_diagrams(const Settings& s, std::istream& in,
                                   std::optional<std::size_t> expect = std::nullopt) {
  ParsedDocument doc = parse_document(read_input(s.file, in));
  if (expect && doc.diagrams.size() != *expect)
    throw UsageError("expected " + std::to_string(*expect) + " diagrams in " + s.file + ", found " +
                     std::to_string(doc.diagrams.size()));
  return doc.diagrams;
}

std::vector<ZwDiagram> load_zw(const Settings& s, std::istream& in) {
  std::istringstream lines(read_input(s.file, in));
  std::vector<ZwDiagram> out;
  std::string line;
  std::size_t no = 0;
  bool first = true;
  while (std::getline(lines, line)) {
    ++no;
    const auto hash = line.find('#');
    const std::string body = hash == std::string::npos ? line : line.substr(0, hash);
    const auto start = body.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    // same optional header as ZX documents
    if (std::exchange(first, false) && body.compare(start, 7, "version") == 0) {
      std::istringstream header(body.substr(start + 7));
      int version = 0;
      std::string rest;
      if (!(header >> version) || version != 1 || (header >> rest))
        throw ParseError("unsupported document version", no, start + 1);
      continue;
    }
    out.push_back(parse_zw(body, {no, 1}));
  }
  return out;
}

int cmd_parse(const Settings& s, std::istream& in, std::ostream& out) {
  if (s.lang == "zw") {
    const auto ds = load_zw(s, in);
    if (!s.json) out << "version 1\n";
    json arr = json::array();
    for (const auto& d : ds) {
      if (s.json)
        arr.push_back({{"text", print_zw(d)}, {"inputs", d.inputs()}, {"outputs", d.outputs()}});
      else
        out << print_zw(d) << "\n";
    }
    if (s.json) out << json{{"version", 1}, {"diagrams", arr}}.dump(2) << "\n";
    return kOk;
  }
  const ParsedDocument doc = parse_document(read_input(s.file, in));
  if (!s.json) {
    out << print_document(doc);
    return kOk;
  }
  json arr = json::array();
  for (std::size_t i = 0; i < doc.diagrams.size(); ++i) {
    const Diagram& d = doc.diagrams[i];
    json vars = json::array();
    for (const auto& v : variables(d)) vars.push_back(v);
    arr.push_back({{"text", print_zx(d)},
                   {"inputs", d.inputs()},
                   {"outputs", d.outputs()},
                   {"variables", vars},
                   {"line", doc.spans[i].line}});
  }
  out << json{{"version", doc.version}, {"diagrams", arr}}.dump(2) << "\n";
  return kOk;
}

int cmd_interp(const Settings& s, std::istream& in, std::ostream& out) {
  const auto ds = load_diagrams(s, in);
  const EvalOptions opts = eval_options(s);
  json arr = json::array();
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const Matrix m = interp(ds[i], opts);
    if (s.json) {
      arr.push_back(matrix_json(m));
    } else {
      if (ds.size() > 1) out << "# diagram " << i + 1 << "\n";
      if (m.fell_back()) out << "# exact backend unavailable; float values\n";
      out << m.to_string();
    }
  }
  if (s.json) out << json{{"functor", s.functor}, {"matrices", arr}}.dump(2) << "\n";
  return kOk;
}

int cmd_eq(const Settings& s, std::istream& in, std::ostream& out) {
  const auto ds = load_diagrams(s, in, 2);
  if (ds[0].inputs() != ds[1].inputs() || ds[0].outputs() != ds[1].outputs())
    throw ArityMismatch("the two diagrams have different arities");
  const EvalOptions opts = eval_options(s);
  const Matrix a = interp(ds[0], opts), b = interp(ds[1], opts);
  const bool exact = a.is_exact() && b.is_exact();
  const bool equal = matrices_equal(a, b, s.tol);
  const double diff = max_abs_diff(a, b);
  if (s.json) {
    out << json{{"equal", equal},
                {"backend", exact ? "exact" : "float"},
                {"functor", s.functor},
                {"max_abs_diff", diff}}
               .dump(2)
        << "\n";
  } else {
    out << (equal ? "equal" : "not equal") << " (" << (exact ? "exact" : "tol " + fmt(s.tol))
        << ", max-abs difference " << fmt(diff) << ")\n";
  }
  return equal ? kOk : kFails;
}

int cmd_param_eq(const Settings& s, std::istream& in, std::ostream& out) {
  const auto ds = load_diagrams(s, in, 2);
  DecideOptions o;
  o.method = method_from(s.method);
  o.scale = functor_scale(s.functor);
  const Verdict v = decide_forall(ds[0], ds[1], o);
  if (s.json) {
    json mu = json::object();
    for (const auto& [k, m] : v.mu) mu[k] = m;
    json j{{"holds", v.holds},
           {"method", method_name(v.method)},
           {"witness", assignment_json(v.witness)},
           {"mu", mu},
           {"discrepancy", v.discrepancy},
           {"float_fallback", v.float_fallback}};
    j["grid_holds"] = v.grid_holds ? json(*v.grid_holds) : json(nullptr);
    j["projector_holds"] = v.projector_holds ? json(*v.projector_holds) : json(nullptr);
    out << j.dump(2) << "\n";
  } else {
    out << (v.holds ? "holds" : "fails") << " for all values (method " << method_name(v.method);
    if (v.grid_holds && v.projector_holds) out << "; grid and projector agree";
    out << ")\n";
    for (const auto& [k, m] : v.mu) out << "  mu(" << k << ") = " << m << "\n";
    if (v.witness) {
      out << "  witness:";
      for (const auto& [k, a] : *v.witness) out << " " << k << " = " << a.to_string();
      out << "\n  max-abs discrepancy at witness: " << fmt(v.discrepancy) << "\n";
    }
    if (v.float_fallback) out << "  note: grid evaluated in floats (tol 1e-9)\n";
  }
  return v.holds ? kOk : kFails;
}

int cmd_rules_check(const Settings& s, std::istream& in, std::ostream& out) {
  std::vector<Rule> rules = load_rules(read_input(s.file, in));
  if (s.closures) rules = with_closures(rules);
  SoundnessOptions o;
  o.budget = s.budget;
  o.seed = s.seed;
  const SoundnessReport rep = check_soundness(rules, Functor::scaled(functor_scale(s.functor)), o);
  if (s.json) {
    json arr = json::array();
    for (const auto& r : rep.results)
      arr.push_back({{"name", r.rule},
                     {"sound", r.sound},
                     {"method", r.method},
                     {"samples", r.samples},
                     {"counterexample", assignment_json(r.counterexample)},
                     {"discrepancy", r.discrepancy}});
    out << json{{"functor", rep.functor.name()}, {"all_sound", rep.all_sound()}, {"rules", arr}}
               .dump(2)
        << "\n";
  } else {
    out << "functor " << rep.functor.name() << "\n";
    for (const auto& r : rep.results) {
      out << "  " << r.rule << ": " << (r.sound ? "sound" : "UNSOUND") << " (" << r.method;
      if (r.samples) out << ", " << r.samples << " samples";
      out << ")\n";
      if (r.counterexample) {
        out << "    counterexample:";
        for (const auto& [k, a] : *r.counterexample) out << " " << k << " = " << a.to_string();
        out << "\n    max-abs discrepancy: " << fmt(r.discrepancy) << "\n";
      }
    }
    out << (rep.all_sound() ? "all rules sound" : "some rules are unsound") << "\n";
  }
  return rep.all_sound() ? kOk : kFails;
}

json check_json(const std::string& text, const TranslationCheck& c) {
  return {{"text", text}, {"holds", c.holds}, {"exact", c.exact}, {"max_abs_diff", c.max_abs}};
}

void print_check(std::ostream& out, const TranslationCheck& c) {
  out << "# max-abs deviation: " << fmt(c.max_abs) << (c.exact ? " (exact)" : " (float)")
      << (c.holds ? "" : " MISMATCH") << "\n";
}

int cmd_translate(const Settings& s, std::istream& in, std::ostream& out) {
  bool ok = true;
  json arr = json::array();
  if (s.to == "zw") {
    for (const auto& d : load_diagrams(s, in)) {
      const TranslationCheck c = check_to_zw(d);
      const std::string text = print_zw(to_zw(d));
      ok = ok && c.holds;
      if (s.json) {
        arr.push_back(check_json(text, c));
      } else {
        out << text << "\n";
        print_check(out, c);
      }
    }
  } else if (s.to == "zx") {
    for (const auto& d : load_zw(s, in)) {
      const TranslationCheck c = check_to_zx(d);
      const std::string text = print_zx(to_zx(d));
      ok = ok && c.holds;
      if (s.json) {
        arr.push_back(check_json(text, c));
      } else {
        out << text << "\n";
        print_check(out, c);
      }
    }
  } else {
    throw UsageError("--to must be zw or zx");
  }
  if (s.json) out << json{{"to", s.to}, {"all_hold", ok}, {"translations", arr}}.dump(2) << "\n";
  return ok ? kOk : kFails;
}

int cmd_roundtrip(const Settings& s, std::istream& in, std::ostream& out) {
  bool ok = true;
  json arr = json::array();
  for (const auto& d : load_diagrams(s, in)) {
    const TranslationCheck c = roundtrip_check(d);
    ok = ok && c.holds;
    if (s.json) {
      arr.push_back(check_json(print_zx(d), c));
    } else {
      out << print_zx(d) << "\n";
      print_check(out, c);
    }
  }
  if (s.json) out << json{{"to", "roundtrip"}, {"all_hold", ok}, {"translations", arr}}.dump(2) << "\n";
  return ok ? kOk : kFails;
}

int cmd_incompleteness(const Settings& s, std::ostream& out) {
  const IncompletenessReport r = incompleteness_witness();
  const bool separated = r.std_lhs == r.std_rhs && !(r.scaled_lhs == r.scaled_rhs);
  const std::string scaled = "scaled:" + std::to_string(r.k);
  if (s.json) {
    out << json{{"lhs", print_zx(r.lhs)},
                {"rhs", print_zx(r.rhs)},
                {"k", r.k},
                {"std", {{"lhs", r.std_lhs.to_string()}, {"rhs", r.std_rhs.to_string()}}},
                {"scaled", {{"lhs", r.scaled_lhs.to_string()}, {"rhs", r.scaled_rhs.to_string()}}},
                {"separated", separated}}
               .dump(2)
        << "\n";
  } else {
    out << "lhs: " << print_zx(r.lhs) << "\n";
    out << "rhs: " << print_zx(r.rhs) << "\n";
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-10s %-6s %-6s\n", "functor", "lhs", "rhs");
    out << buf;
    std::snprintf(buf, sizeof buf, "%-10s %-6s %-6s\n", "std", r.std_lhs.to_string().c_str(),
                  r.std_rhs.to_string().c_str());
    out << buf;
    std::snprintf(buf, sizeof buf, "%-10s %-6s %-6s\n", scaled.c_str(),
                  r.scaled_lhs.to_string().c_str(), r.scaled_rhs.to_string().c_str());
    out << buf;
  }
  return separated ? kOk : kFails;
}

int report(std::ostream& err, const char* kind, const std::exception& e, int code) {
  err << "error: " << kind << ": " << e.what() << "\n";
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Verification toolkit for ZX and ZW diagrams", "zxv"};
  app.require_subcommand(1);
  Settings s;

  auto add_file = [&](CLI::App* c) { c->add_option("file", s.file, "input file, - for stdin")->required(); };
  auto add_json = [&](CLI::App* c) { c->add_flag("--json", s.json, "machine-readable output"); };
  auto add_functor = [&](CLI::App* c) {
    c->add_option("--functor", s.functor, "std or scaled:K with K = 1 mod 8");
  };
  auto add_backend = [&](CLI::App* c) {
    c->add_option("--backend", s.backend, "exact or float")
        ->check(CLI::IsMember({"exact", "float"}));
  };

  CLI::App* parse = app.add_subcommand("parse", "parse a document and print it canonically");
  add_file(parse);
  add_json(parse);
  parse->add_option("--lang", s.lang, "zx or zw")->check(CLI::IsMember({"zx", "zw"}));

  CLI::App* interp_c = app.add_subcommand("interp", "print the interpretation of each diagram");
  add_file(interp_c);
  add_backend(interp_c);
  add_functor(interp_c);
  add_json(interp_c);

  CLI::App* eq = app.add_subcommand("eq", "compare two ground diagrams");
  add_file(eq);
  add_backend(eq);
  add_functor(eq);
  add_json(eq);
  eq->add_option("--tol", s.tol, "tolerance for the float backend");

  CLI::App* peq = app.add_subcommand("param-eq", "decide a parametric equation for all values");
  add_file(peq);
  add_functor(peq);
  add_json(peq);
  peq->add_option("--method", s.method, "grid, projector or both")
      ->check(CLI::IsMember({"grid", "projector", "both"}));

  CLI::App* rc = app.add_subcommand("rules-check", "check soundness of a rule file");
  add_file(rc);
  add_functor(rc);
  add_json(rc);
  rc->add_option("--budget", s.budget, "samples per constrained rule");
  rc->add_option("--seed", s.seed, "sampling seed");
  rc->add_flag("--closures", s.closures, "also check flipped and colour-swapped variants");

  CLI::App* tr = app.add_subcommand("translate", "translate between ZX and ZW and verify");
  add_file(tr);
  add_json(tr);
  tr->add_option("--to", s.to, "zw or zx")->required()->check(CLI::IsMember({"zw", "zx"}));

  CLI::App* rt = app.add_subcommand("roundtrip", "check ZX -> ZW -> ZX preserves semantics");
  add_file(rt);
  add_json(rt);

  CLI::App* inc = app.add_subcommand("incompleteness", "evaluate the incompleteness witness");
  add_json(inc);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();  // program name
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (parse->parsed()) return cmd_parse(s, in, out);
    if (interp_c->parsed()) return cmd_interp(s, in, out);
    if (eq->parsed()) return cmd_eq(s, in, out);
    if (peq->parsed()) return cmd_param_eq(s, in, out);
    if (rc->parsed()) return cmd_rules_check(s, in, out);
    if (tr->parsed()) return cmd_translate(s, in, out);
    if (rt->parsed()) return cmd_roundtrip(s, in, out);
    if (inc->parsed()) return cmd_incompleteness(s, out);
  } catch (const NonLinearPhase& e) {
    return report(err, "NonLinearPhase", e, kUsage);
  } catch (const ParseError& e) {
    return report(err, "ParseError", e, kUsage);
  } catch (const ArityMismatch& e) {
    return report(err, "ArityMismatch", e, kUsage);
  } catch (const ConstantsOutsidePi4& e) {
    return report(err, "ConstantsOutsidePi4", e, kUsage);
  } catch (const UnsupportedScale& e) {
    return report(err, "UnsupportedScale", e, kUsage);
  } catch (const UsageError& e) {
    return report(err, "usage", e, kUsage);
  } catch (const NonGroundDiagram& e) {
    return report(err, "NonGroundDiagram", e, kEvalError);
  } catch (const ExactUnavailable& e) {
    return report(err, "ExactUnavailable", e, kEvalError);
  } catch (const Error& e) {
    return report(err, "Error", e, kEvalError);
  } catch (const std::exception& e) {
    return report(err, "internal", e, kEvalError);
  }
  return kUsage;
}

}  // namespace zxv::cli
