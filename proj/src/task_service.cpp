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

#include "qaoachain/task_service.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <random>

#include "json.hpp"
#include "qaoachain/errors.hpp"
#include "qaoachain/qasm.hpp"
#include "qaoachain/simulator.hpp"

namespace qaoachain {

namespace {

using nlohmann::json;

constexpr std::string_view kStatusNames[] = {"queued", "running", "completed", "failed"};

std::int64_t now_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::system_clock::now().time_since_epoch())
      .count();
}

}  // namespace

std::string_view status_name(TaskStatus s) noexcept { return kStatusNames[static_cast<int>(s)]; }

TaskStatus status_from_name(std::string_view name) {
  for (int i = 0; i < 4; ++i) {
    if (kStatusNames[i] == name) return static_cast<TaskStatus>(i);
  }
  throw ParseError("unknown task status '" + std::string(name) + "'", "status");
}

std::string record_to_json(const TaskRecord& r) {
  json j = {{"id", r.id},
            {"name", r.name},
            {"shots", r.shots},
            {"seed", r.seed},
            {"status", status_name(r.status)},
            {"created_ms", r.created_ms},
            {"started_ms", r.started_ms},
            {"finished_ms", r.finished_ms},
            {"qasm", r.qasm}};
  if (r.status == TaskStatus::kCompleted) j["counts"] = r.counts;
  if (!r.error.empty()) j["error"] = r.error;
  return j.dump();
}

TaskRecord record_from_json(std::string_view line) {
  TaskRecord r;
  try {
    const json j = json::parse(line.begin(), line.end());
    r.id = j.at("id").get<std::string>();
    r.name = j.value("name", "");
    r.qasm = j.at("qasm").get<std::string>();
    r.shots = j.at("shots").get<std::uint64_t>();
    r.seed = j.value("seed", std::uint64_t{0});
    r.status = status_from_name(j.at("status").get<std::string>());
    r.created_ms = j.value("created_ms", std::int64_t{0});
    r.started_ms = j.value("started_ms", std::int64_t{0});
    r.finished_ms = j.value("finished_ms", std::int64_t{0});
    if (auto it = j.find("counts"); it != j.end()) r.counts = it->get<Counts>();
    r.error = j.value("error", "");
  } catch (const json::exception& e) {
    throw ParseError(e.what(), "record");
  }
  return r;
}

TaskStore::TaskStore(std::filesystem::path dir) : file_(dir / "tasks.jsonl") {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error("cannot create task store '" + dir.string() + "': " + ec.message());
}

std::map<std::string, TaskRecord> TaskStore::load() const {
  std::map<std::string, TaskRecord> out;
  std::ifstream in(file_);
  if (!in) return out;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    if (line.empty()) continue;
    try {
      TaskRecord r = record_from_json(line);
      out[r.id] = std::move(r);
    } catch (const ParseError& e) {
      throw ParseError(e.message(), file_.string() + ":" + std::to_string(n));
    }
  }
  return out;
}

void TaskStore::append(const TaskRecord& r) {
  const std::string line = record_to_json(r) + "\n";
  std::lock_guard lock(mutex_);
  std::ofstream out(file_, std::ios::app | std::ios::binary);
  out << line;
  out.flush();
  if (!out) throw Error("cannot write task store '" + file_.string() + "'");
}

Counts local_sample(const PhysicalCircuit& circuit, std::uint64_t shots, std::uint64_t seed) {
  const std::vector<Gate> gates = circuit.gates();
  const StateVector psi = simulate(circuit.num_qubits, gates);
  std::vector<double> cdf = psi.probabilities();
  std::partial_sum(cdf.begin(), cdf.end(), cdf.begin());
  const double total = cdf.back();

  std::mt19937_64 rng(seed);
  std::map<std::size_t, std::uint64_t> by_index;
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    ++by_index[static_cast<std::size_t>(it - cdf.begin())];
  }

  Counts counts;
  const std::size_t m = circuit.final_layout.size();
  for (const auto& [index, n] : by_index) {
    std::string bits(m, '0');
    for (std::size_t l = 0; l < m; ++l) {
      if ((index >> circuit.final_layout[l]) & 1U) bits[l] = '1';
    }
    counts[bits] += n;
  }
  return counts;
}

std::string new_task_id() {
  static std::mutex mutex;
  static std::mt19937_64 rng = [] {
    std::random_device rd;
    std::seed_seq seq{rd(), rd(), rd(), rd(), rd(), rd(), rd(), rd()};
    return std::mt19937_64(seq);
  }();
  std::lock_guard lock(mutex);
  char buf[33];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(rng()),
                static_cast<unsigned long long>(rng()));
  return buf;
}

TaskService::TaskService(std::filesystem::path store_dir, std::unique_ptr<SamplingBackend> backend)
    : store_(std::move(store_dir)), backend_(std::move(backend)) {
  if (!backend_) throw ConfigError("task service needs a sampling backend");
  records_ = store_.load();
  std::vector<const TaskRecord*> pending;
  for (const auto& [id, r] : records_) {
    if (!r.terminal()) pending.push_back(&r);
  }
  std::stable_sort(pending.begin(), pending.end(),
                   [](const TaskRecord* a, const TaskRecord* b) { return a->created_ms < b->created_ms; });
  for (const TaskRecord* r : pending) queue_.push_back(r->id);
  worker_ = std::thread([this] { run(); });
}

TaskService::~TaskService() {
  {
    std::lock_guard lock(mutex_);
    stopping_ = true;
  }
  changed_.notify_all();
  worker_.join();
}

void TaskService::update(TaskRecord r) {
  store_.append(r);
  {
    std::lock_guard lock(mutex_);
    records_[r.id] = std::move(r);
  }
  changed_.notify_all();
}

std::string TaskService::submit(const std::string& qasm, std::uint64_t shots, const std::string& name,
                                std::optional<std::uint64_t> seed) {
  if (shots < 1) throw ConfigError("shots must be at least 1");
  parse_qasm(qasm);

  TaskRecord r;
  r.name = name;
  r.qasm = qasm;
  r.shots = shots;
  r.seed = seed ? *seed : std::random_device{}() * 0x100000000ULL + std::random_device{}();
  r.created_ms = now_ms();
  std::unique_lock lock(mutex_);
  do {
    r.id = new_task_id();
  } while (records_.count(r.id));
  store_.append(r);
  records_[r.id] = r;
  queue_.push_back(r.id);
  lock.unlock();
  changed_.notify_all();
  return r.id;
}

TaskRecord TaskService::submit_and_wait(const std::string& qasm, std::uint64_t shots, const std::string& name,
                                        std::optional<std::uint64_t> seed) {
  return wait(submit(qasm, shots, name, seed));
}

TaskStatus TaskService::status(const std::string& id) const { return record(id).status; }

TaskRecord TaskService::record(const std::string& id) const {
  std::lock_guard lock(mutex_);
  auto it = records_.find(id);
  if (it == records_.end()) throw NotFoundError("no task with id '" + id + "'");
  return it->second;
}

Counts TaskService::result(const std::string& id) const {
  const TaskRecord r = record(id);
  if (r.status == TaskStatus::kCompleted) return r.counts;
  std::string message = "task " + id + " is " + std::string(status_name(r.status));
  if (r.status == TaskStatus::kFailed) message += ": " + r.error;
  throw UnavailableError(message, std::string(status_name(r.status)));
}

std::vector<TaskRecord> TaskService::list() const {
  std::lock_guard lock(mutex_);
  std::vector<TaskRecord> out;
  for (const auto& [id, r] : records_) out.push_back(r);
  std::stable_sort(out.begin(), out.end(),
                   [](const TaskRecord& a, const TaskRecord& b) { return a.created_ms < b.created_ms; });
  return out;
}

TaskRecord TaskService::wait(const std::string& id) const {
  std::unique_lock lock(mutex_);
  auto it = records_.find(id);
  if (it == records_.end()) throw NotFoundError("no task with id '" + id + "'");
  changed_.wait(lock, [&] { return records_.at(id).terminal(); });
  return records_.at(id);
}

void TaskService::run() {
  while (true) {
    std::unique_lock lock(mutex_);
    changed_.wait(lock, [&] { return stopping_ || !queue_.empty(); });
    if (queue_.empty()) return;  // stopping with nothing left
    TaskRecord r = records_.at(queue_.front());
    queue_.pop_front();
    lock.unlock();

    r.status = TaskStatus::kRunning;
    r.started_ms = now_ms();
    update(r);
    try {
      r.counts = backend_->sample(parse_qasm(r.qasm), r.shots, r.seed);
      r.status = TaskStatus::kCompleted;
    } catch (const std::exception& e) {
      r.counts.clear();
      r.error = e.what();
      r.status = TaskStatus::kFailed;
    }
    r.finished_ms = now_ms();
    update(r);
  }
}

std::vector<int> spins_of(std::string_view bits) {
  std::vector<int> z(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') throw ModelError("bitstring '" + std::string(bits) + "' is not binary");
    z[i] = bits[i] == '0' ? 1 : -1;
  }
  return z;
}

std::vector<RankedRow> process_results(const Counts& counts, const WeightGraph& g, std::size_t top, Sense sense) {
  std::vector<RankedRow> rows;
  rows.reserve(counts.size());
  for (const auto& [bits, n] : counts) {
    if (bits.size() != g.num_nodes()) {
      throw ModelError("bitstring '" + bits + "' has " + std::to_string(bits.size()) + " bits for a " +
                       std::to_string(g.num_nodes()) + "-node graph");
    }
    const std::vector<int> z = spins_of(bits);
    RankedRow row{bits, n, g.energy(z), 0.0, false};
    row.objective = row.energy + g.offset();
    if (sense == Sense::kMaximize) row.objective = -row.objective;
    rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const RankedRow& a, const RankedRow& b) {
    if (a.energy != b.energy) return a.energy < b.energy;
    return a.count > b.count;
  });
  for (std::size_t i = 0; i < rows.size() && i < top; ++i) rows[i].solution = true;
  return rows;
}

}  // namespace qaoachain
