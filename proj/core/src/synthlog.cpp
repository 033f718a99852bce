#include "logknee/synthlog.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <stdexcept>

namespace logknee {

namespace {

// 2026-01-01T00:00:00Z, the simulation's time origin.
constexpr std::int64_t kBaseEpochMicros = 1767225600LL * 1000000LL;
constexpr double kMicrosPerTimeUnit = 60e6;  // one simulated time unit = one minute

// Uniform in [0, 1) from the raw engine output; keeps the stream
// identical across standard library implementations.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double exponential(std::mt19937_64& rng, double mean) {
  return -mean * std::log(1.0 - uniform01(rng));
}

struct PendingStep {
  double ready_time;
  std::uint64_t sequence;  // insertion order, breaks time ties
  int job;
  int step;  // index into the job's route

  bool operator>(const PendingStep& other) const {
    if (ready_time != other.ready_time) return ready_time > other.ready_time;
    return sequence > other.sequence;
  }
};

}  // namespace

std::vector<std::string> JobShopParams::default_machine_names(int count) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(count));
  for (int i = 1; i <= count; ++i) names.push_back("M" + std::to_string(i));
  return names;
}

EventLog generate_jobshop_log(const JobShopParams& params) {
  if (params.num_jobs < 1) throw std::invalid_argument("num_jobs must be >= 1");
  if (params.machines.empty()) throw std::invalid_argument("at least one machine required");
  if (params.rework_probability < 0 || params.rework_probability >= 1)
    throw std::invalid_argument("rework_probability must lie in [0, 1)");
  if (params.arrival_mean <= 0 || params.service_mean <= 0)
    throw std::invalid_argument("time distribution means must be positive");

  std::mt19937_64 rng(params.seed);
  const int machine_count = static_cast<int>(params.machines.size());

  // Arrival times and routes are drawn up front in job order.
  std::vector<double> arrival(static_cast<std::size_t>(params.num_jobs));
  std::vector<std::vector<int>> route(static_cast<std::size_t>(params.num_jobs));
  double clock = 0.0;
  for (int job = 0; job < params.num_jobs; ++job) {
    clock += exponential(rng, params.arrival_mean);
    arrival[job] = clock;
    auto& r = route[job];
    r.resize(static_cast<std::size_t>(machine_count));
    for (int i = 0; i < machine_count; ++i) r[i] = i;
    if (params.routing == JobShopParams::Routing::Shuffled) {
      for (int i = machine_count - 1; i > 0; --i) {
        int j = static_cast<int>(uniform01(rng) * (i + 1));
        std::swap(r[i], r[j]);
      }
    }
  }

  // FIFO per machine: serving steps in global ready order plus a
  // per-machine free time reproduces single-server queues.
  std::priority_queue<PendingStep, std::vector<PendingStep>, std::greater<>> pending;
  std::uint64_t sequence = 0;
  for (int job = 0; job < params.num_jobs; ++job)
    pending.push({arrival[job], sequence++, job, 0});

  std::vector<double> machine_free(static_cast<std::size_t>(machine_count), 0.0);
  std::vector<std::vector<double>> completions(static_cast<std::size_t>(params.num_jobs));
  std::vector<std::vector<int>> visited_machines(static_cast<std::size_t>(params.num_jobs));

  while (!pending.empty()) {
    PendingStep step = pending.top();
    pending.pop();
    const int machine = route[step.job][step.step];
    const double start = std::max(step.ready_time, machine_free[machine]);
    const double completion = start + exponential(rng, params.service_mean);
    machine_free[machine] = completion;
    completions[step.job].push_back(completion);
    visited_machines[step.job].push_back(machine);

    const bool rework =
        params.rework_probability > 0 && uniform01(rng) < params.rework_probability;
    if (rework) {
      pending.push({completion, sequence++, step.job, step.step});
    } else if (step.step + 1 < machine_count) {
      pending.push({completion, sequence++, step.job, step.step + 1});
    }
  }

  EventLog log;
  log.source_name = "jobshop(jobs=" + std::to_string(params.num_jobs) +
                    ",machines=" + std::to_string(machine_count) +
                    ",seed=" + std::to_string(params.seed) + ")";
  std::uint64_t ordinal = 0;
  for (int job = 0; job < params.num_jobs; ++job) {
    Trace trace;
    trace.case_id = "job_" + std::to_string(job + 1);
    std::int64_t previous_micros = -1;
    for (std::size_t i = 0; i < completions[job].size(); ++i) {
      Event event;
      event.case_id = trace.case_id;
      event.activity = params.machines[static_cast<std::size_t>(visited_machines[job][i])];
      std::int64_t micros =
          kBaseEpochMicros + static_cast<std::int64_t>(completions[job][i] * kMicrosPerTimeUnit);
      if (micros <= previous_micros) micros = previous_micros + 1;  // keep strictly increasing
      previous_micros = micros;
      event.timestamp = Timestamp{micros};
      event.ordinal = ordinal++;
      trace.events.push_back(std::move(event));
    }
    log.traces.push_back(std::move(trace));
  }
  log.refresh_totals();
  return log;
}

}  // namespace logknee
