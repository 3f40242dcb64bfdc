#ifndef TVFLOW_TRAJECTORY_HPP
#define TVFLOW_TRAJECTORY_HPP

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include <tvflow/types.hpp>

namespace tvflow {

/// Scalar diagnostics of one time level.
struct TrajectoryRecord {
  long step = 0;
  double t = 0.0;
  double sup_norm = 0.0;
  double tv_energy = 0.0;
  double hminus1_norm = 0.0;
  double constraint_gap = 0.0;
};

/// Full zero-mean field at one time level (cell values, x-fastest in 2D).
struct Snapshot {
  long step = 0;
  double t = 0.0;
  Vector values;
};

/// First step at which the sup-norm fell strictly below a threshold.
struct Crossing {
  double threshold = 0.0;
  std::optional<long> step;
};

enum class FlowStatus { Extinct, MaxSteps };

std::string_view to_string(FlowStatus status);

/// Stopping rule and recording schedule of a flow run.
struct FlowMonitors {
  double stop_supnorm = 1e-4;
  long max_steps = 1'000'000;
  std::vector<double> thresholds;   // extra sup-norm crossings to report
  long record_every = 1;            // 0 records only the first and last step
  long snap_every = 0;              // 0 disables periodic snapshots
  std::vector<long> snapshot_steps; // explicit snapshot steps
  // Called with the full field after every step (and for step 0).
  std::function<void(long step, const Vector& full)> observer;
};

struct Trajectory {
  std::vector<TrajectoryRecord> records;
  std::vector<Snapshot> snapshots;
  std::vector<Crossing> crossings;
  FlowStatus status = FlowStatus::MaxSteps;
  long final_step = 0;
  Vector final_u;  // reduced coordinates
};

}  // namespace tvflow

#endif  // TVFLOW_TRAJECTORY_HPP
