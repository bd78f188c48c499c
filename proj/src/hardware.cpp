// Copyright 2026 The qaoachain Authors
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

#include "qaoachain/hardware.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "qaoachain/errors.hpp"

namespace qaoachain {

ChipModel::ChipModel(std::vector<QubitCalibration> qubits, std::vector<CouplerCalibration> couplers)
    : qubits_(std::move(qubits)), couplers_(std::move(couplers)) {
  auto in_unit = [](double f) { return f >= 0.0 && f <= 1.0; };
  for (std::size_t i = 0; i < qubits_.size(); ++i) {
    const auto& q = qubits_[i];
    const std::string where = "qubits[" + std::to_string(i) + "]";
    if (q.id < 0) throw ParseError("qubit id must be non-negative", where + ".id");
    if (!adjacency_.emplace(q.id, std::vector<int>{}).second) {
      throw ParseError("duplicate qubit id " + std::to_string(q.id), where + ".id");
    }
    if (!in_unit(q.f1q)) throw ParseError("fidelity outside [0, 1]", where + ".f1q");
    if (q.t1_us < 0.0) throw ParseError("negative T1", where + ".t1_us");
    if (q.t2_us < 0.0) throw ParseError("negative T2", where + ".t2_us");
  }
  for (std::size_t i = 0; i < couplers_.size(); ++i) {
    const auto& c = couplers_[i];
    const std::string where = "couplers[" + std::to_string(i) + "]";
    if (!adjacency_.count(c.a)) throw ParseError("unknown qubit " + std::to_string(c.a), where + ".a");
    if (!adjacency_.count(c.b)) throw ParseError("unknown qubit " + std::to_string(c.b), where + ".b");
    if (c.a == c.b) throw ParseError("coupler joins a qubit to itself", where);
    if (!in_unit(c.f2q)) throw ParseError("fidelity outside [0, 1]", where + ".f2q");
    const auto key = std::minmax(c.a, c.b);
    if (!fidelity_.emplace(key, c.f2q).second) throw ParseError("duplicate coupler", where);
    adjacency_[c.a].push_back(c.b);
    adjacency_[c.b].push_back(c.a);
  }
  for (auto& [id, list] : adjacency_) std::sort(list.begin(), list.end());
}

double ChipModel::coupler_fidelity(int a, int b) const {
  auto it = fidelity_.find(std::minmax(a, b));
  return it == fidelity_.end() ? -1.0 : it->second;
}

const std::vector<int>& ChipModel::neighbours(int id) const {
  static const std::vector<int> none;
  auto it = adjacency_.find(id);
  return it == adjacency_.end() ? none : it->second;
}

namespace {

using nlohmann::json;

double number(const json& obj, const char* key, const std::string& where, bool required) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    if (required) throw ParseError(std::string("missing field '") + key + "'", where);
    return 0.0;
  }
  if (!it->is_number()) throw ParseError("expected a number", where + "." + key);
  return it->get<double>();
}

int integer(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field '") + key + "'", where);
  if (!it->is_number_integer()) throw ParseError("expected an integer", where + "." + key);
  return it->get<int>();
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return it.key() == k; })) {
      throw ParseError("unknown field '" + it.key() + "'", where);
    }
  }
}

std::string real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Smaller end first; the product is taken left to right afterwards so a
// path's fidelity does not depend on how it was built.
void canonicalize(Subchain& s) {
  if (s.qubits.front() > s.qubits.back()) {
    std::reverse(s.qubits.begin(), s.qubits.end());
    std::reverse(s.links.begin(), s.links.end());
  }
  s.fidelity = 1.0;
  for (double f : s.links) s.fidelity *= f;
}

bool better(const Subchain& a, const Subchain& b) {
  if (a.fidelity != b.fidelity) return a.fidelity > b.fidelity;
  return a.qubits < b.qubits;
}

void sort_unique(std::vector<Subchain>& paths) {
  std::sort(paths.begin(), paths.end(), better);
  paths.erase(std::unique(paths.begin(), paths.end(),
                          [](const Subchain& a, const Subchain& b) { return a.qubits == b.qubits; }),
              paths.end());
}

Subchain extended(const Subchain& s, int qubit, double link, bool at_front) {
  Subchain out = s;
  if (at_front) {
    out.qubits.insert(out.qubits.begin(), qubit);
    out.links.insert(out.links.begin(), link);
  } else {
    out.qubits.push_back(qubit);
    out.links.push_back(link);
  }
  canonicalize(out);
  return out;
}

std::vector<Subchain> seed_paths(const ChipModel& chip) {
  std::vector<Subchain> paths;
  for (const auto& c : chip.couplers()) {
    Subchain s{{c.a, c.b}, {c.f2q}, c.f2q};
    canonicalize(s);
    paths.push_back(std::move(s));
  }
  sort_unique(paths);
  return paths;
}

void exhaustive_from(const ChipModel& chip, Subchain& path, std::set<int>& on_path, std::size_t max_len,
                     std::map<std::size_t, std::vector<Subchain>>& out) {
  if (path.qubits.size() >= 2) {
    Subchain copy = path;
    canonicalize(copy);
    out[copy.qubits.size()].push_back(std::move(copy));
  }
  if (path.qubits.size() == max_len) return;
  const int tail = path.qubits.back();
  for (int next : chip.neighbours(tail)) {
    if (on_path.count(next)) continue;
    const double f = chip.coupler_fidelity(tail, next);
    path.qubits.push_back(next);
    path.links.push_back(f);
    const double saved = path.fidelity;
    path.fidelity *= f;
    on_path.insert(next);
    exhaustive_from(chip, path, on_path, max_len, out);
    on_path.erase(next);
    path.fidelity = saved;
    path.qubits.pop_back();
    path.links.pop_back();
  }
}

}  // namespace

ChipModel chip_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), "byte " + std::to_string(e.byte));
  }
  if (!doc.is_object()) throw ParseError("expected a JSON object", "$");
  reject_unknown(doc, {"qubits", "couplers"}, "$");
  auto qit = doc.find("qubits");
  if (qit == doc.end() || !qit->is_array()) throw ParseError("expected an array", "$.qubits");
  std::vector<QubitCalibration> qubits;
  for (std::size_t i = 0; i < qit->size(); ++i) {
    const auto& q = (*qit)[i];
    const std::string where = "$.qubits[" + std::to_string(i) + "]";
    if (!q.is_object()) throw ParseError("expected an object", where);
    reject_unknown(q, {"id", "t1_us", "t2_us", "f1q"}, where);
    QubitCalibration qc;
    qc.id = integer(q, "id", where);
    qc.t1_us = number(q, "t1_us", where, false);
    qc.t2_us = number(q, "t2_us", where, false);
    qc.f1q = q.contains("f1q") ? number(q, "f1q", where, true) : 1.0;
    qubits.push_back(qc);
  }
  std::vector<CouplerCalibration> couplers;
  if (auto cit = doc.find("couplers"); cit != doc.end()) {
    if (!cit->is_array()) throw ParseError("expected an array", "$.couplers");
    for (std::size_t i = 0; i < cit->size(); ++i) {
      const auto& c = (*cit)[i];
      const std::string where = "$.couplers[" + std::to_string(i) + "]";
      if (!c.is_object()) throw ParseError("expected an object", where);
      reject_unknown(c, {"a", "b", "f2q"}, where);
      couplers.push_back({integer(c, "a", where), integer(c, "b", where), number(c, "f2q", where, true)});
    }
  }
  try {
    return ChipModel(std::move(qubits), std::move(couplers));
  } catch (const ParseError& e) {
    throw ParseError(e.message(), "$." + e.location());
  }
}

ChipModel load_calibration(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open calibration file '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return chip_from_json(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(e.message(), path.string() + ":" + e.location());
  }
}

std::string chip_to_json(const ChipModel& chip) {
  std::string out = "{\"qubits\": [";
  for (std::size_t i = 0; i < chip.qubits().size(); ++i) {
    const auto& q = chip.qubits()[i];
    out += (i ? ",\n  " : "\n  ");
    out += "{\"id\": " + std::to_string(q.id) + ", \"t1_us\": " + real(q.t1_us) + ", \"t2_us\": " + real(q.t2_us) +
           ", \"f1q\": " + real(q.f1q) + "}";
  }
  out += "\n], \"couplers\": [";
  for (std::size_t i = 0; i < chip.couplers().size(); ++i) {
    const auto& c = chip.couplers()[i];
    out += (i ? ",\n  " : "\n  ");
    out += "{\"a\": " + std::to_string(c.a) + ", \"b\": " + std::to_string(c.b) + ", \"f2q\": " + real(c.f2q) + "}";
  }
  out += "\n]}\n";
  return out;
}

ChipModel line_chip(std::size_t n, double f2q, double t1_us, double t2_us, double f1q) {
  std::vector<QubitCalibration> qubits;
  std::vector<CouplerCalibration> couplers;
  for (std::size_t i = 0; i < n; ++i) {
    qubits.push_back({static_cast<int>(i), t1_us, t2_us, f1q});
    if (i + 1 < n) couplers.push_back({static_cast<int>(i), static_cast<int>(i + 1), f2q});
  }
  return ChipModel(std::move(qubits), std::move(couplers));
}

const std::vector<Subchain>& SubchainLibrary::at(std::size_t length) const {
  static const std::vector<Subchain> none;
  auto it = entries.find(length);
  return it == entries.end() ? none : it->second;
}

SubchainLibrary build_subchain_library(const ChipModel& chip, std::size_t max_len, std::size_t beam_width,
                                       bool exhaustive) {
  if (max_len > chip.num_qubits()) {
    throw CapacityError("subchains of length " + std::to_string(max_len) + " requested on a " +
                        std::to_string(chip.num_qubits()) + "-qubit chip");
  }
  if (beam_width == 0) throw ConfigError("beam width must be at least 1");
  SubchainLibrary lib;
  for (std::size_t k = 2; k <= max_len; ++k) lib.entries[k];
  if (max_len < 2) return lib;

  if (exhaustive) {
    for (const auto& q : chip.qubits()) {
      Subchain path{{q.id}, {}, 1.0};
      std::set<int> on_path{q.id};
      exhaustive_from(chip, path, on_path, max_len, lib.entries);
    }
    for (auto& [k, list] : lib.entries) sort_unique(list);
    return lib;
  }

  std::vector<Subchain> beam = seed_paths(chip);
  if (beam.size() > beam_width) beam.resize(beam_width);
  lib.entries[2] = beam;
  for (std::size_t k = 3; k <= max_len && !beam.empty(); ++k) {
    std::vector<Subchain> next;
    for (const auto& path : beam) {
      for (bool front : {true, false}) {
        const int end = front ? path.qubits.front() : path.qubits.back();
        for (int q : chip.neighbours(end)) {
          if (std::find(path.qubits.begin(), path.qubits.end(), q) != path.qubits.end()) continue;
          next.push_back(extended(path, q, chip.coupler_fidelity(end, q), front));
        }
      }
    }
    sort_unique(next);
    if (next.size() > beam_width) next.resize(beam_width);
    lib.entries[k] = next;
    beam = std::move(next);
  }
  return lib;
}

Subchain select_subchain(const SubchainLibrary& library, std::size_t k) {
  if (k < 2) throw ConfigError("subchain length must be at least 2");
  const auto& exact = library.at(k);
  if (!exact.empty()) return exact.front();
  for (auto it = library.entries.upper_bound(k); it != library.entries.end(); ++it) {
    if (it->second.empty()) continue;
    const Subchain& longer = it->second.front();
    std::size_t best_start = 0;
    double best = -1.0;
    for (std::size_t s = 0; s + k <= longer.qubits.size(); ++s) {
      double f = 1.0;
      for (std::size_t i = s; i + 1 < s + k; ++i) f *= longer.links[i];
      if (f > best) {
        best = f;
        best_start = s;
      }
    }
    Subchain out;
    out.qubits.assign(longer.qubits.begin() + static_cast<std::ptrdiff_t>(best_start),
                      longer.qubits.begin() + static_cast<std::ptrdiff_t>(best_start + k));
    out.links.assign(longer.links.begin() + static_cast<std::ptrdiff_t>(best_start),
                     longer.links.begin() + static_cast<std::ptrdiff_t>(best_start + k - 1));
    canonicalize(out);
    return out;
  }
  throw CapacityError("no chain of " + std::to_string(k) + " or more coupled qubits in the library");
}

SubchainLibrary refresh(const SubchainLibrary& library, const ChipModel& chip, std::size_t beam_width) {
  std::size_t max_len = library.entries.empty() ? 0 : library.entries.rbegin()->first;
  max_len = std::min(max_len, chip.num_qubits());
  return build_subchain_library(chip, max_len, beam_width);
}

std::string library_to_json(const SubchainLibrary& library) {
  std::string out = "{";
  bool first_key = true;
  for (const auto& [k, list] : library.entries) {
    out += first_key ? "\n" : ",\n";
    first_key = false;
    out += "  \"" + std::to_string(k) + "\": [";
    for (std::size_t i = 0; i < list.size(); ++i) {
      out += i ? ", " : "";
      out += "{\"fidelity\": " + real(list[i].fidelity) + ", \"qubits\": [";
      for (std::size_t j = 0; j < list[i].qubits.size(); ++j) {
        out += (j ? ", " : "") + std::to_string(list[i].qubits[j]);
      }
      out += "]}";
    }
    out += "]";
  }
  out += "\n}\n";
  return out;
}

LibraryHandle::LibraryHandle(SubchainLibrary initial)
    : current_(std::make_shared<const SubchainLibrary>(std::move(initial))) {}

std::shared_ptr<const SubchainLibrary> LibraryHandle::snapshot() const {
  std::lock_guard lock(mutex_);
  return current_;
}

void LibraryHandle::refresh(const ChipModel& chip, std::size_t beam_width) {
  auto fresh = std::make_shared<const SubchainLibrary>(qaoachain::refresh(*snapshot(), chip, beam_width));
  std::lock_guard lock(mutex_);
  current_ = std::move(fresh);
}

}  // namespace qaoachain
