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

#include "ppm/brick_table.hpp"

#include <chrono>
#include <string_view>

#include "ppm/errors.hpp"
#include "ppm/serialize.hpp"

namespace ppm {

namespace detail {
extern const std::string_view kShippedBrickTable;
}  // namespace detail

const BrickTableEntry* BrickTable::find(const BrickSettings& s) const {
  for (const auto& e : entries) {
    if (e.settings == s) return &e;
  }
  return nullptr;
}

nlohmann::ordered_json BrickTable::to_json() const {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema_version"] = 1;
  auto names = [](const std::vector<LaneGate>& gs) {
    ordered_json a = ordered_json::array();
    for (LaneGate g : gs) a.push_back(to_string(g));
    return a;
  };
  j["left_gates"] = names(left_gates);
  j["right_gates"] = names(right_gates);
  const PatternFragment topo = brick_topology();
  ordered_json es = ordered_json::array();
  for (const auto& e : entries) {
    ordered_json je;
    je["left"] = to_string(e.settings.left);
    je["right"] = to_string(e.settings.right);
    je["cz"] = e.settings.cz ? 1 : 0;
    je["label"] = e.label;
    ordered_json ch = ordered_json::object();
    for (const auto& [v, f] : e.choices) ch[topo.pattern.measurements.at(v).var] = anf_to_json(f);
    je["choices"] = ch;
    ordered_json co = ordered_json::object();
    for (const auto& [v, c] : e.corrections) {
      co[std::to_string(v)] = ordered_json{{"zeta", anf_to_json(c.zeta)}, {"xi", anf_to_json(c.xi)}};
    }
    je["corrections"] = co;
    je["branch_count"] = e.branch_count;
    es.push_back(je);
  }
  j["entries"] = es;
  return j;
}

BrickTable BrickTable::from_json(const nlohmann::json& j) {
  try {
    if (j.value("schema_version", 0) != 1) throw ParseError("brick table: unsupported schema_version");
    BrickTable t;
    auto gates = [](const nlohmann::json& a) {
      std::vector<LaneGate> out;
      for (const auto& n : a) {
        auto g = parse_lane_gate(n.get<std::string>());
        if (!g) throw ParseError("brick table: unknown lane gate " + n.dump());
        out.push_back(*g);
      }
      return out;
    };
    t.left_gates = gates(j.value("left_gates", nlohmann::json::array()));
    t.right_gates = gates(j.value("right_gates", nlohmann::json::array()));
    for (const auto& je : j.at("entries")) {
      BrickTableEntry e;
      auto l = parse_lane_gate(je.at("left").get<std::string>());
      auto r = parse_lane_gate(je.at("right").get<std::string>());
      if (!l || !r) throw ParseError("brick table: unknown lane gate in entry");
      e.settings = {*l, *r, je.at("cz").get<int>() != 0};
      e.label = je.value("label", e.settings.label());
      for (const auto& [var, anf] : je.at("choices").items()) e.choices[brick_vertex(var)] = anf_from_json(anf);
      for (const auto& [key, c] : je.at("corrections").items()) {
        e.corrections[std::stoi(key)] = Correction{anf_from_json(c.at("zeta")), anf_from_json(c.at("xi"))};
      }
      e.branch_count = je.value("branch_count", size_t{0});
      t.entries.push_back(std::move(e));
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed brick table: ") + e.what());
  }
}

const BrickTable& shipped_brick_table() {
  static const BrickTable table = BrickTable::from_json(nlohmann::json::parse(detail::kShippedBrickTable));
  return table;
}

PatternFragment brick_from_entry(const BrickTableEntry& e) {
  PatternFragment f = brick_topology();
  for (const auto& [v, c] : e.choices) f.pattern.measurements.at(v).choice = c;
  f.corrections = e.corrections;
  f.name = "brick(" + to_string(e.settings.left) + "," + to_string(e.settings.right) + ",cz=" +
           (e.settings.cz ? "1" : "0") + ")";
  f.validate();
  return f;
}

namespace {

// Assignment of one lane: constant bases plus at most one adaptive hair.
struct LaneConfig {
  std::map<std::string, int> bases;
  std::string adaptive;
};

std::vector<LaneConfig> lane_configs(const std::vector<std::string>& hairs, const std::string& single) {
  std::vector<LaneConfig> out;
  const size_t n = hairs.size();
  for (size_t t = 0; t < (size_t{1} << n); ++t) {
    LaneConfig c;
    for (size_t i = 0; i < n; ++i) c.bases[hairs[i]] = static_cast<int>(t >> (n - 1 - i) & 1);
    out.push_back(c);
  }
  std::vector<std::string> others;
  for (const auto& h : hairs) {
    if (h != single) others.push_back(h);
  }
  for (const auto& a : others) {
    std::vector<std::string> rest;
    for (const auto& h : others) {
      if (h != a) rest.push_back(h);
    }
    for (size_t t = 0; t < (size_t{1} << rest.size()); ++t) {
      LaneConfig c;
      c.bases[single] = 1;
      c.adaptive = a;
      for (size_t i = 0; i < rest.size(); ++i) c.bases[rest[i]] = static_cast<int>(t >> (rest.size() - 1 - i) & 1);
      out.push_back(c);
    }
  }
  return out;
}

std::string describe(const LaneConfig& c) {
  std::string s;
  for (const auto& [h, b] : c.bases) s += h + "=" + (b ? "Z" : "X") + " ";
  if (!c.adaptive.empty()) s += c.adaptive + "=adaptive";
  return s;
}

void set_bases(PatternFragment& f, const std::map<std::string, int>& bases) {
  for (const auto& [name, b] : bases) f.pattern.measurements.at(brick_vertex(name)).choice = BoolFn::constant(b);
}

struct Witness {
  LaneConfig config;
  BoolFn rule;
};

Dictionary brick_dictionary() {
  std::vector<std::string> labels;
  for (int cz = 0; cz < 2; ++cz) {
    for (LaneGate a : kAllLaneGates) {
      for (LaneGate b : kAllLaneGates) labels.push_back(BrickSettings{a, b, cz == 1}.label());
    }
  }
  return make_dictionary(labels);
}

std::optional<BrickSettings> settings_of_label(const std::string& label) {
  for (int cz = 0; cz < 2; ++cz) {
    for (LaneGate a : kAllLaneGates) {
      for (LaneGate b : kAllLaneGates) {
        BrickSettings s{a, b, cz == 1};
        if (s.label() == label) return s;
      }
    }
  }
  return std::nullopt;
}

// Label of a fragment whose branches should all realize one operator up to
// a Pauli frame without input errors; nullopt otherwise.
std::optional<BrickSettings> uniform_label(const PatternFragment& f, const Dictionary& dict, const VerifyOptions& vo) {
  std::optional<std::string> label;
  Dictionary found;
  for (const auto& b : branch_unitaries(f, vo)) {
    if (!is_unitary(b.unitary)) return std::nullopt;
    auto cls = classify_up_to_pauli(b.unitary, label ? found : dict);
    if (!cls) return std::nullopt;
    if (!label) {
      label = cls->label;
      for (const auto& e : dict) {
        if (e.label == *label) found.push_back(e);
      }
    }
  }
  if (!label) return std::nullopt;
  return settings_of_label(*label);
}

}  // namespace

BrickTable derive_brick_table(const PatternFragment& topology, const DeriveOptions& opts, std::ostream* log) {
  const Dictionary dict = brick_dictionary();
  const VerifyOptions& vo = opts.verify;
  const auto t0 = std::chrono::steady_clock::now();
  auto note = [&](const std::string& s) {
    if (!log) return;
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    *log << "[" << static_cast<int>(dt) << "s] " << s << "\n";
  };

  std::map<std::string, int> all_x;
  for (const auto& h : brick_left_hairs()) all_x[h] = 0;
  for (const auto& h : brick_right_hairs()) all_x[h] = 0;

  struct Side {
    const std::vector<std::string>* hairs;
    std::string single;
    bool left;
  };
  const Side sides[] = {{&brick_left_hairs(), "bL", true}, {&brick_right_hairs(), "bR", false}};

  BrickTable table;
  // cz -> lane gate -> witness, per side.
  std::map<int, std::map<LaneGate, Witness>> found[2];
  std::map<int, std::map<std::string, int>> hubs;

  for (int cz = 0; cz < 2; ++cz) {
    for (int hub = 0; hub < 4 && !hubs.count(cz); ++hub) {
      PatternFragment f = topology;
      set_bases(f, all_x);
      set_bases(f, {{"cza", hub >> 1 & 1}, {"czb", hub & 1}});
      auto s = uniform_label(f, dict, vo);
      if (s && s->cz == (cz == 1)) {
        hubs[cz] = {{"cza", hub >> 1 & 1}, {"czb", hub & 1}};
        note("hub cza=" + std::string(hub >> 1 & 1 ? "Z" : "X") + " czb=" + (hub & 1 ? "Z" : "X") +
             " realizes " + s->label());
      }
    }
    if (!hubs.count(cz)) throw InferenceError("no hub assignment realizes cz=" + std::to_string(cz));

    for (int side = 0; side < 2; ++side) {
      const Side& sd = sides[side];
      auto& mine = found[side][cz];
      for (const auto& cfg : lane_configs(*sd.hairs, sd.single)) {
        PatternFragment f = topology;
        set_bases(f, all_x);
        set_bases(f, hubs[cz]);
        set_bases(f, cfg.bases);
        std::vector<std::pair<BrickSettings, BoolFn>> candidates;
        if (cfg.adaptive.empty()) {
          if (auto s = uniform_label(f, dict, vo)) candidates.emplace_back(*s, BoolFn{});
        } else {
          const int v = brick_vertex(cfg.adaptive);
          for (int start = 0; start < 2; ++start) {
            PatternFragment g = f;
            g.pattern.measurements.at(v).choice = BoolFn::constant(start);
            const Matrix u = provisional_unitary(g, vo);
            if (!is_unitary(u)) continue;
            auto cls = classify_up_to_pauli(u, dict);
            if (!cls) continue;
            auto cand = settings_of_label(cls->label);
            try {
              candidates.emplace_back(*cand, infer_adaptive_rule(g, v, cand->unitary(), vo));
            } catch (const InferenceError&) {
            }
          }
        }
        for (const auto& [s, rule] : candidates) {
          if (s.cz != (cz == 1)) continue;
          const LaneGate g = sd.left ? s.left : s.right;
          if (mine.count(g)) continue;
          PatternFragment h = f;
          if (!cfg.adaptive.empty()) h.pattern.measurements.at(brick_vertex(cfg.adaptive)).choice = rule;
          try {
            infer_corrections(h, s.unitary(), vo);
          } catch (const InferenceError&) {
            continue;
          }
          note(std::string(sd.left ? "left" : "right") + " cz=" + std::to_string(cz) + " " + to_string(g) + ": " +
               describe(cfg) + (cfg.adaptive.empty() ? "" : " rule " + rule.to_string()));
          mine[g] = Witness{cfg, rule};
        }
      }
    }
  }

  for (int side = 0; side < 2; ++side) {
    auto& gates = side == 0 ? table.left_gates : table.right_gates;
    for (LaneGate g : kAllLaneGates) {
      if (found[side][0].count(g) && found[side][1].count(g)) gates.push_back(g);
    }
  }
  for (LaneGate g : {LaneGate::H, LaneGate::S, LaneGate::HSH, LaneGate::HSHS, LaneGate::HTH, LaneGate::T}) {
    bool any = false;
    for (const auto* gs : {&table.left_gates, &table.right_gates}) {
      for (LaneGate h : *gs) any = any || h == g;
    }
    if (!any) throw InferenceError("no brick witness for lane gate " + to_string(g));
  }

  for (int cz = 0; cz < 2; ++cz) {
    for (LaneGate l : table.left_gates) {
      for (LaneGate r : table.right_gates) {
        const Witness& wl = found[0][cz].at(l);
        const Witness& wr = found[1][cz].at(r);
        PatternFragment f = topology;
        set_bases(f, all_x);
        set_bases(f, hubs[cz]);
        set_bases(f, wl.config.bases);
        set_bases(f, wr.config.bases);
        if (!wl.config.adaptive.empty()) f.pattern.measurements.at(brick_vertex(wl.config.adaptive)).choice = wl.rule;
        if (!wr.config.adaptive.empty()) f.pattern.measurements.at(brick_vertex(wr.config.adaptive)).choice = wr.rule;
        BrickTableEntry e;
        e.settings = {l, r, cz == 1};
        e.label = e.settings.label();
        for (const auto& [v, m] : f.pattern.measurements) e.choices[v] = m.choice;
        if (opts.certify_entries) {
          f.corrections = infer_corrections(f, e.settings.unitary(), vo);
          VerifyOptions quiet = vo;
          quiet.keep_branches = false;
          quiet.branches = VerifyOptions::Branches::All;
          VerificationReport rep = verify_fragment(f, e.settings.unitary(), quiet, e.label);
          if (!rep.pass) {
            throw InferenceError("brick entry " + e.label + " failed certification, worst infidelity " +
                                 std::to_string(rep.worst_infidelity));
          }
          e.corrections = f.corrections;
          e.worst_infidelity = rep.worst_infidelity;
          e.branch_count = rep.branch_count;
          note("certified " + e.label + " over " + std::to_string(rep.branch_count) + " branches");
        }
        table.entries.push_back(std::move(e));
      }
    }
  }
  return table;
}

}  // namespace ppm
