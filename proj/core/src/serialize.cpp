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

#include "ppm/serialize.hpp"

#include <sstream>

#include "ppm/errors.hpp"

namespace ppm {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json anf_to_json(const BoolFn& f) {
  ordered_json arr = ordered_json::array();
  for (const auto& m : f.monomials()) arr.push_back(m);
  return arr;
}

BoolFn anf_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("anf must be a list of monomials");
  std::vector<Monomial> ms;
  for (const auto& m : j) {
    if (!m.is_array()) throw ParseError("anf monomial must be a list of variable names");
    ms.push_back(m.get<Monomial>());
  }
  return BoolFn::from_monomials(ms);
}

ordered_json fragment_to_json(const PatternFragment& f) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  if (!f.name.empty()) j["name"] = f.name;
  j["vertices"] = f.graph().vertex_count();
  j["base_exponent"] = f.graph().base_exponent();
  ordered_json edges = ordered_json::array();
  for (const auto& [e, k] : f.graph().edges()) {
    edges.push_back(ordered_json{{"u", e.first}, {"v", e.second}, {"mult", k}});
  }
  j["edges"] = edges;
  ordered_json ms = ordered_json::object();
  for (const auto& [v, m] : f.pattern.measurements) {
    ms[std::to_string(v)] = ordered_json{{"var", m.var}, {"anf", anf_to_json(m.choice)}};
  }
  j["measurements"] = ms;
  j["inputs"] = f.inputs;
  j["outputs"] = f.outputs;
  ordered_json errs = ordered_json::object();
  for (const auto& [v, e] : f.input_errors) errs[std::to_string(v)] = ordered_json::array({e.z, e.x});
  j["input_errors"] = errs;
  ordered_json corr = ordered_json::object();
  for (const auto& [v, c] : f.corrections) {
    corr[std::to_string(v)] = ordered_json{{"zeta", anf_to_json(c.zeta)}, {"xi", anf_to_json(c.xi)}};
  }
  j["corrections"] = corr;
  if (!f.layout.empty()) {
    ordered_json lay = ordered_json::object();
    for (const auto& [v, s] : f.layout) lay[std::to_string(v)] = ordered_json::array({s.col, s.row});
    j["layout"] = lay;
  }
  return j;
}

namespace {

int vertex_key(const std::string& key) {
  size_t pos = 0;
  int v = -1;
  try {
    v = std::stoi(key, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != key.size() || key.empty()) throw ParseError("vertex key '" + key + "' is not an integer");
  return v;
}

}  // namespace

PatternFragment fragment_from_json(const json& j) {
  try {
    if (!j.is_object()) throw ParseError("pattern document must be a JSON object");
    if (!j.contains("schema_version") || j.at("schema_version") != kSchemaVersion) {
      throw ParseError("unsupported or missing schema_version (expected 1)");
    }
    PatternFragment f;
    f.name = j.value("name", std::string{});
    f.pattern.graph = PGraph(j.at("vertices").get<int>(), j.value("base_exponent", 2));
    const json edges_doc = j.value("edges", json::array());
    const json measurements_doc = j.value("measurements", json::object());
    const json input_errors_doc = j.value("input_errors", json::object());
    const json corrections_doc = j.value("corrections", json::object());
    const json layout_doc = j.value("layout", json::object());
    for (const auto& e : edges_doc) {
      f.pattern.graph.connect(e.at("u").get<int>(), e.at("v").get<int>(), e.at("mult").get<int>());
    }
    for (const auto& [key, m] : measurements_doc.items()) {
      f.pattern.measurements[vertex_key(key)] = Measurement{m.at("var").get<std::string>(), anf_from_json(m.at("anf"))};
    }
    f.inputs = j.value("inputs", std::vector<int>{});
    f.outputs = j.value("outputs", std::vector<int>{});
    for (const auto& [key, e] : input_errors_doc.items()) {
      if (!e.is_array() || e.size() != 2) throw ParseError("input_errors entries must be [zvar, xvar]");
      f.input_errors[vertex_key(key)] = ErrorVars{e[0].get<std::string>(), e[1].get<std::string>()};
    }
    for (const auto& [key, c] : corrections_doc.items()) {
      f.corrections[vertex_key(key)] = Correction{anf_from_json(c.at("zeta")), anf_from_json(c.at("xi"))};
    }
    for (const auto& [key, s] : layout_doc.items()) {
      f.layout[vertex_key(key)] = Site{s.at(0).get<int>(), s.at(1).get<int>()};
    }
    if (f.inputs.empty() && f.outputs.empty()) {
      f.pattern.validate();
    } else {
      f.validate(false);
    }
    return f;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed pattern JSON: ") + e.what());
  }
}

std::string to_json_text(const PatternFragment& f) { return fragment_to_json(f).dump(2) + "\n"; }

PatternFragment from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return fragment_from_json(j);
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const PatternFragment& f) {
  std::set<int> ins(f.inputs.begin(), f.inputs.end());
  std::set<int> outs(f.outputs.begin(), f.outputs.end());
  std::ostringstream os;
  os << "graph \"" << dot_escape(f.name.empty() ? "pattern" : f.name) << "\" {\n";
  os << "  node [shape=circle];\n";
  for (int v = 0; v < f.graph().vertex_count(); ++v) {
    std::string label = std::to_string(v);
    auto mit = f.pattern.measurements.find(v);
    if (mit != f.pattern.measurements.end()) {
      label += "\\n" + dot_escape(mit->second.var);
      const BoolFn& c = mit->second.choice;
      label += c.is_constant() ? std::string(c.constant_value() ? " Z" : " X") : std::string(" adaptive");
    }
    if (ins.count(v)) label += "\\nin";
    if (outs.count(v)) label += "\\nout";
    os << "  v" << v << " [label=\"" << label << "\"";
    if (outs.count(v)) os << ", shape=doublecircle";
    else if (ins.count(v)) os << ", shape=box";
    auto lit = f.layout.find(v);
    if (lit != f.layout.end()) os << ", pos=\"" << lit->second.col << ',' << lit->second.row << "!\"";
    os << "];\n";
  }
  for (const auto& [e, k] : f.graph().edges()) {
    os << "  v" << e.first << " -- v" << e.second << " [label=\"x" << k << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_fragment(const PatternFragment& f, const std::string& format) {
  if (format == "json") return to_json_text(f);
  if (format == "dot") return to_dot(f);
  throw StructuralError("unknown export format '" + format + "' (expected json or dot)");
}

}  // namespace ppm
