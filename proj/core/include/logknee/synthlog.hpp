#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "logknee/event_log.hpp"

namespace logknee {

// Discrete-event simulation of a job shop: jobs arrive over time and
// visit every machine once (FIFO, one job in service per machine), with
// optional rework that repeats the machine just completed. One event
// per completed processing step.
struct JobShopParams {
  int num_jobs = 50;
  std::vector<std::string> machines = {"M1", "M2", "M3", "M4", "M5"};

  enum class Routing { Fixed, Shuffled };
  Routing routing = Routing::Fixed;

  double rework_probability = 0.0;  // per completed step, must be < 1
  double arrival_mean = 2.0;        // exponential inter-arrival time
  double service_mean = 1.5;        // exponential service time
  std::uint64_t seed = 1;

  static std::vector<std::string> default_machine_names(int count);
};

// Deterministic given params (including the seed): the RNG stream and
// the event ordering are fully specified, independent of platform.
// One trace per job, strictly increasing timestamps within a trace.
EventLog generate_jobshop_log(const JobShopParams& params);

}  // namespace logknee
