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

#include <condition_variable>
#include <cstdint>
#include <deque>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "qaoachain/circuit.hpp"
#include "qaoachain/problem_model.hpp"
#include "qaoachain/weight_graph.hpp"

namespace qaoachain {

enum class TaskStatus { kQueued, kRunning, kCompleted, kFailed };

std::string_view status_name(TaskStatus s) noexcept;
TaskStatus status_from_name(std::string_view name);

/// Bitstring -> shots. Character l of a key is classical bit l, i.e. the
/// measured value of logical qubit l.
using Counts = std::map<std::string, std::uint64_t>;

struct TaskRecord {
  std::string id;
  std::string name;
  std::string qasm;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  TaskStatus status = TaskStatus::kQueued;
  Counts counts;
  std::string error;
  // Milliseconds since the Unix epoch; 0 when the stage has not happened.
  std::int64_t created_ms = 0;
  std::int64_t started_ms = 0;
  std::int64_t finished_ms = 0;

  bool terminal() const noexcept { return status == TaskStatus::kCompleted || status == TaskStatus::kFailed; }
};

std::string record_to_json(const TaskRecord& r);
TaskRecord record_from_json(std::string_view line);

/// Append-only JSON-lines log at <dir>/tasks.jsonl. The last line for an
/// id is its current state.
class TaskStore {
 public:
  explicit TaskStore(std::filesystem::path dir);

  const std::filesystem::path& file() const noexcept { return file_; }
  /// Replays the log. Malformed lines are reported as ParseErrors with
  /// their line number.
  std::map<std::string, TaskRecord> load() const;
  void append(const TaskRecord& r);

 private:
  std::filesystem::path file_;
  std::mutex mutex_;
};

class SamplingBackend {
 public:
  virtual ~SamplingBackend() = default;
  virtual std::string_view name() const = 0;
  virtual Counts sample(const PhysicalCircuit& circuit, std::uint64_t shots, std::uint64_t seed) = 0;
};

/// Exact statevector probabilities sampled with mt19937_64. Throws
/// CapacityError above the simulator limit.
Counts local_sample(const PhysicalCircuit& circuit, std::uint64_t shots, std::uint64_t seed);

class LocalSampler final : public SamplingBackend {
 public:
  std::string_view name() const override { return "local"; }
  Counts sample(const PhysicalCircuit& circuit, std::uint64_t shots, std::uint64_t seed) override {
    return local_sample(circuit, shots, seed);
  }
};

/// 128 random bits as 32 lowercase hex characters.
std::string new_task_id();

/// Task lifecycle over a store and a backend. One executor thread runs
/// queued tasks in submission order; a backend failure marks the task
/// failed. On construction, tasks the log left queued or running are
/// queued again. The destructor finishes every queued task first.
class TaskService {
 public:
  explicit TaskService(std::filesystem::path store_dir,
                       std::unique_ptr<SamplingBackend> backend = std::make_unique<LocalSampler>());
  ~TaskService();
  TaskService(const TaskService&) = delete;
  TaskService& operator=(const TaskService&) = delete;

  /// Validates the QASM (ParseError) and shots ≥ 1 (ConfigError) before
  /// anything is stored. Without a seed one is drawn at random and kept in
  /// the record.
  std::string submit(const std::string& qasm, std::uint64_t shots, const std::string& name = "",
                     std::optional<std::uint64_t> seed = std::nullopt);
  TaskRecord submit_and_wait(const std::string& qasm, std::uint64_t shots, const std::string& name = "",
                             std::optional<std::uint64_t> seed = std::nullopt);

  /// NotFoundError for unknown ids.
  TaskStatus status(const std::string& id) const;
  TaskRecord record(const std::string& id) const;
  /// UnavailableError unless the task completed.
  Counts result(const std::string& id) const;
  std::vector<TaskRecord> list() const;
  /// Blocks until the task is completed or failed.
  TaskRecord wait(const std::string& id) const;

 private:
  void run();
  void enqueue_locked(const std::string& id);
  void update(TaskRecord r);

  TaskStore store_;
  std::unique_ptr<SamplingBackend> backend_;
  mutable std::mutex mutex_;
  mutable std::condition_variable changed_;
  std::map<std::string, TaskRecord> records_;
  std::deque<std::string> queue_;
  bool stopping_ = false;
  std::thread worker_;
};

struct RankedRow {
  std::string bits;
  std::uint64_t count = 0;
  double energy = 0.0;     // C(z) with z_l = 1 − 2·bit_l, offset excluded
  double objective = 0.0;  // energy + offset, sign restored for maximization problems
  bool solution = false;   // among the first `top` rows
};

/// Scores every observed bitstring on g and sorts by energy, then by
/// descending count; equal rows keep bitstring order. ModelError when a
/// bitstring length differs from the node count.
std::vector<RankedRow> process_results(const Counts& counts, const WeightGraph& g, std::size_t top,
                                       Sense sense = Sense::kMinimize);

/// Spins for a logical bitstring: '0' -> +1, '1' -> −1.
std::vector<int> spins_of(std::string_view bits);

}  // namespace qaoachain
