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

#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

namespace qaoachain {

struct QubitCalibration {
  int id = 0;
  double t1_us = 0.0;
  double t2_us = 0.0;
  double f1q = 1.0;
};

struct CouplerCalibration {
  int a = 0;
  int b = 0;
  double f2q = 1.0;
};

/// Validated chip description. Qubit ids are arbitrary non-negative
/// integers; couplers must join two distinct known qubits at most once.
class ChipModel {
 public:
  ChipModel() = default;
  ChipModel(std::vector<QubitCalibration> qubits, std::vector<CouplerCalibration> couplers);

  const std::vector<QubitCalibration>& qubits() const noexcept { return qubits_; }
  const std::vector<CouplerCalibration>& couplers() const noexcept { return couplers_; }
  std::size_t num_qubits() const noexcept { return qubits_.size(); }

  /// Two-qubit fidelity of the coupler joining a and b, or a negative
  /// value when they are not coupled.
  double coupler_fidelity(int a, int b) const;
  /// Coupled neighbours of `id`, ascending.
  const std::vector<int>& neighbours(int id) const;

 private:
  std::vector<QubitCalibration> qubits_;
  std::vector<CouplerCalibration> couplers_;
  std::map<int, std::vector<int>> adjacency_;
  std::map<std::pair<int, int>, double> fidelity_;
};

// Calibration JSON:
//   {"qubits": [{"id": i, "t1_us": r, "t2_us": r, "f1q": r}...],
//    "couplers": [{"a": i, "b": i, "f2q": r}...]}
ChipModel chip_from_json(std::string_view text);
ChipModel load_calibration(const std::filesystem::path& path);
std::string chip_to_json(const ChipModel& chip);

/// Uniform 1-D chip: qubits 0..n−1 coupled in a line.
ChipModel line_chip(std::size_t n, double f2q = 1.0, double t1_us = 0.0, double t2_us = 0.0, double f1q = 1.0);

struct Subchain {
  std::vector<int> qubits;
  std::vector<double> links;  // coupler fidelity between qubits[i] and qubits[i+1]
  double fidelity = 1.0;      // product of `links`

  friend bool operator==(const Subchain&, const Subchain&) = default;
};

/// Chain length -> candidate paths, best overall fidelity first.
class SubchainLibrary {
 public:
  std::map<std::size_t, std::vector<Subchain>> entries;

  /// Empty list for unknown keys.
  const std::vector<Subchain>& at(std::size_t length) const;
};

/// Paths of every length 2..max_len. By default a beam search seeded from
/// every coupler keeps the `beam_width` best paths per length and extends
/// them at either end. `exhaustive` enumerates every simple path instead
/// (intended for chips of at most a dozen qubits). Paths are stored with
/// the smaller end id first; ties in fidelity are ordered by qubit list.
SubchainLibrary build_subchain_library(const ChipModel& chip, std::size_t max_len, std::size_t beam_width = 64,
                                       bool exhaustive = false);

/// Best path of exactly k qubits: the head of key k, or else the best
/// k-window of the head of the smallest longer key. Throws CapacityError
/// when no chain of length ≥ k exists.
Subchain select_subchain(const SubchainLibrary& library, std::size_t k);

/// Rebuilds the library for a new calibration with the same settings.
SubchainLibrary refresh(const SubchainLibrary& library, const ChipModel& chip, std::size_t beam_width = 64);

std::string library_to_json(const SubchainLibrary& library);

/// Shared, atomically replaced library. Readers hold a snapshot that stays
/// valid across refreshes.
class LibraryHandle {
 public:
  explicit LibraryHandle(SubchainLibrary initial);

  std::shared_ptr<const SubchainLibrary> snapshot() const;
  void refresh(const ChipModel& chip, std::size_t beam_width = 64);

 private:
  mutable std::mutex mutex_;
  std::shared_ptr<const SubchainLibrary> current_;
};

}  // namespace qaoachain
