// Copyright 2026 The ppm Authors
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

#include "ppm_cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ppm/brick_table.hpp"
#include "ppm/compiler.hpp"
#include "ppm/errors.hpp"
#include "ppm/executor.hpp"
#include "ppm/fragments.hpp"
#include "ppm/schedule.hpp"
#include "ppm/serialize.hpp"
#include "ppm/verifier.hpp"

namespace ppm::cli {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string source;
  std::string target;
  double tol = 1e-9;
  std::string branches = "all";
  uint64_t seed = 0xC0FFEE;
  std::string dictionary;
  std::string tape;
  std::string in;
  std::string out;
  std::string format;
  int max_qubits = 22;
  bool json = false;
  bool amplitudes = false;
  bool skip_certify = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

struct Loaded {
  PatternFragment fragment;
  std::string target;
};

Loaded load(const std::string& source) {
  const std::string prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) {
    Builtin b = builtin(source.substr(prefix.size()));
    return {std::move(b.fragment), b.target};
  }
  return {from_json_text(read_file(source)), ""};
}

VerifyOptions verify_options(const Config& c) {
  VerifyOptions o;
  o.tol = c.tol;
  o.seed = c.seed;
  o.max_qubits = c.max_qubits;
  if (c.branches == "all") {
    o.branches = VerifyOptions::Branches::All;
  } else if (c.branches.rfind("sample:", 0) == 0) {
    const std::string k = c.branches.substr(7);
    if (k.empty() || !std::all_of(k.begin(), k.end(), ::isdigit) || k.size() > 9 || std::stoul(k) == 0) {
      throw UsageError("--branches sample:K needs a positive integer K");
    }
    o.branches = VerifyOptions::Branches::Sample;
    o.samples = std::stoul(k);
  } else {
    throw UsageError("--branches must be 'all' or 'sample:K'");
  }
  return o;
}

std::vector<int> parse_tape(const std::string& s) {
  std::vector<int> bits;
  for (char ch : s) {
    if (ch == '0' || ch == '1') {
      bits.push_back(ch - '0');
    } else if (ch != ',' && ch != ' ') {
      throw UsageError("--tape accepts only 0, 1, commas and spaces");
    }
  }
  return bits;
}

std::vector<std::string> split_labels(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int cmd_verify(const Config& c, std::ostream& out) {
  Loaded l = load(c.source);
  std::string label = c.target.empty() ? l.target : c.target;
  if (label.empty()) throw UsageError("--target is required for fragment files");
  const Matrix target = parse_unitary(label);
  VerifyOptions o = verify_options(c);
  o.keep_branches = false;
  VerificationReport r = verify_fragment(l.fragment, target, o, label);
  ordered_json j = r.to_json();
  if (!c.dictionary.empty()) {
    auto labels = split_labels(c.dictionary);
    auto cls = classify_unitary(provisional_unitary(l.fragment, o), make_dictionary(labels));
    j["classified"] = cls ? ordered_json(*cls) : ordered_json(nullptr);
  }
  if (c.json) {
    out << j.dump(2) << "\n";
  } else {
    out << (r.pass ? "PASS" : "FAIL") << " " << r.fragment << " implements " << label << "\n"
        << "  branches " << r.branch_count << " over " << r.error_combinations << " error combinations"
        << (r.exhaustive ? " (exhaustive)" : " (sampled)") << "\n"
        << "  worst infidelity " << r.worst_infidelity << "\n";
    if (j.contains("classified")) out << "  classified " << j["classified"].dump() << "\n";
  }
  return r.pass ? kOk : kVerificationFailed;
}

int cmd_run(const Config& c, std::ostream& out) {
  if (!c.tape.empty() && c.seed != 0xC0FFEE) throw UsageError("--seed and --tape are exclusive");
  Loaded l = load(c.source);
  OutcomeSource src = c.tape.empty() ? OutcomeSource::seeded(c.seed) : OutcomeSource::tape(parse_tape(c.tape));
  ExecutionTrace t;
  if (l.fragment.inputs.empty()) {
    t = run_pattern(l.fragment.pattern, src);
  } else {
    const int n = static_cast<int>(l.fragment.inputs.size());
    std::vector<std::pair<int, int>> errs(static_cast<size_t>(n), {0, 0});
    t = run_fragment(l.fragment, Statevector::basis_state(n, 0), errs, src);
  }
  ordered_json j = t.to_json(c.amplitudes);
  if (c.json) {
    out << j.dump(2) << "\n";
  } else {
    out << "probability " << t.probability << "\n";
    for (const auto& m : t.measurements) {
      out << "  v" << m.vertex << " " << basis_char(m.basis) << " -> " << m.outcome << "\n";
    }
    if (!t.frame.empty()) {
      out << "frame";
      for (auto [zeta, xi] : t.frame) out << " (" << zeta << "," << xi << ")";
      out << "\n";
    }
  }
  return kOk;
}

int cmd_compile(const Config& c, std::ostream& out) {
  std::string format = c.format;
  if (format.empty()) {
    format = c.out.size() >= 4 && c.out.substr(c.out.size() - 4) == ".dot" ? "dot" : "json";
  }
  if (format != "json" && format != "dot") throw UsageError("--format must be json or dot");
  Circuit circ = parse_circuit(read_file(c.in));
  CompiledCircuit cc = compile_to_bricks(circ);
  PatternFragment f = layout_brickwork(cc);
  write_file(c.out, export_fragment(f, format));
  const int depth = feed_forward_depth(f);
  if (c.json) {
    ordered_json j;
    j["out"] = c.out;
    j["format"] = format;
    j["lanes"] = cc.lanes;
    j["layers"] = cc.layers.size();
    j["vertices"] = f.pattern.graph.vertex_count();
    j["t_count"] = circ.t_count();
    j["feed_forward_depth"] = depth;
    out << j.dump(2) << "\n";
  } else {
    out << describe(cc) << "wrote " << c.out << " (" << f.pattern.graph.vertex_count() << " vertices, depth "
        << depth << ")\n";
  }
  return kOk;
}

int cmd_table(const Config& c, std::ostream& out, std::ostream& err) {
  DeriveOptions d;
  d.verify = verify_options(c);
  d.verify.keep_branches = false;
  d.certify_entries = !c.skip_certify;
  BrickTable t = derive_brick_table(brick_topology(), d, c.json ? nullptr : &err);
  const std::string text = t.to_json().dump(1) + "\n";
  if (c.out.empty()) {
    out << text;
  } else {
    write_file(c.out, text);
    if (c.json) {
      ordered_json j;
      j["out"] = c.out;
      j["entries"] = t.entries.size();
      out << j.dump(2) << "\n";
    } else {
      out << "wrote " << t.entries.size() << " entries to " << c.out << "\n";
    }
  }
  return kOk;
}

int cmd_depth(const Config& c, std::ostream& out) {
  Loaded l = load(c.source);
  const int depth = feed_forward_depth(l.fragment);
  if (c.json) {
    ordered_json j;
    j["feed_forward_depth"] = depth;
    out << j.dump(2) << "\n";
  } else {
    out << depth << "\n";
  }
  return kOk;
}

int cmd_builtins(const Config& c, std::ostream& out) {
  if (c.json) {
    ordered_json j = ordered_json::array();
    for (const auto& n : builtin_names()) j.push_back(n);
    out << j.dump(2) << "\n";
  } else {
    for (const auto& n : builtin_names()) out << n << "\n";
  }
  return kOk;
}

void emit_error(std::ostream& out, std::ostream& err, bool json, int code, const std::string& msg,
                const std::string& usage) {
  if (json) {
    ordered_json j;
    j["error"] = msg;
    j["exit_code"] = code;
    if (!usage.empty()) j["usage"] = usage;
    out << j.dump(2) << "\n";
  } else {
    err << "error: " << msg << "\n";
    if (!usage.empty()) err << usage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Parity-phase measurement pattern toolkit", "ppm"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto add_common = [&](CLI::App* s) { s->add_flag("--json", c.json, "Machine-readable output on stdout"); };
  auto add_verify_knobs = [&](CLI::App* s) {
    s->add_option("--tol", c.tol, "Infidelity tolerance")->capture_default_str();
    s->add_option("--branches", c.branches, "all | sample:K")->capture_default_str();
    s->add_option("--seed", c.seed, "Sampling seed")->capture_default_str();
    s->add_option("--max-qubits", c.max_qubits, "Simulation register cap")->capture_default_str();
  };

  auto* verify = app.add_subcommand("verify", "Certify a fragment against a target unitary");
  verify->add_option("fragment", c.source, "fragment.json or builtin:NAME")->required();
  verify->add_option("--target", c.target, "Target label, e.g. X(pi/2), T, CZ");
  verify->add_option("--dictionary", c.dictionary, "Comma-separated labels to classify the all-zero branch");
  add_verify_knobs(verify);
  add_common(verify);

  auto* run_cmd = app.add_subcommand("run", "Execute one branch of a pattern");
  run_cmd->add_option("pattern", c.source, "pattern.json or builtin:NAME")->required();
  run_cmd->add_option("--seed", c.seed, "Outcome sampling seed")->capture_default_str();
  run_cmd->add_option("--tape", c.tape, "Outcomes in ascending vertex order, e.g. 0110");
  run_cmd->add_flag("--amplitudes", c.amplitudes, "Include output amplitudes");
  add_common(run_cmd);

  auto* compile = app.add_subcommand("compile", "Compile a Clifford+T circuit to a brickwork pattern");
  compile->add_option("--in", c.in, "Circuit text file")->required();
  compile->add_option("--out", c.out, "Output file (.json or .dot)")->required();
  compile->add_option("--format", c.format, "json | dot (default from --out)");
  add_common(compile);

  auto* table = app.add_subcommand("table", "Derive and emit the brick table");
  table->add_option("--out", c.out, "Write to file instead of stdout");
  table->add_flag("--skip-certify", c.skip_certify, "Stop after lane witnesses");
  add_verify_knobs(table);
  add_common(table);

  auto* depth = app.add_subcommand("depth", "Feed-forward depth of a pattern");
  depth->add_option("pattern", c.source, "pattern.json or builtin:NAME")->required();
  add_common(depth);

  auto* list = app.add_subcommand("builtins", "List builtin fragment names");
  add_common(list);

  const bool json_requested = std::find(args.begin(), args.end(), "--json") != args.end();
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    const CLI::App* sub = nullptr;
    for (const auto* s : app.get_subcommands()) sub = s;
    emit_error(out, err, json_requested, kUsage, e.what(), sub ? sub->help() : app.help());
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(c, out);
    if (*run_cmd) return cmd_run(c, out);
    if (*compile) return cmd_compile(c, out);
    if (*table) return cmd_table(c, out, err);
    if (*depth) return cmd_depth(c, out);
    if (*list) return cmd_builtins(c, out);
  } catch (const UsageError& e) {
    emit_error(out, err, c.json, kUsage, e.what(), "");
    return kUsage;
  } catch (const ppm::Error& e) {
    emit_error(out, err, c.json, kUsage, e.what(), "");
    return kUsage;
  } catch (const std::exception& e) {
    emit_error(out, err, c.json, kUsage, e.what(), "");
    return kUsage;
  }
  return kUsage;
}

}  // namespace ppm::cli
