#ifndef TVFLOW_DETAIL_FLOW_LOOP_HPP
#define TVFLOW_DETAIL_FLOW_LOOP_HPP

#include <algorithm>
#include <cmath>
#include <string>

#include <tvflow/trajectory.hpp>

namespace tvflow::detail {

// Shared time loop of the 1D and 2D flows. `step` advances the state by one
// backward Euler step, `full` reconstructs the zero-mean field, and `diag`
// fills a record for the current state.
template <class State, class StepFn, class FullFn, class DiagFn>
Trajectory run_flow_loop(State state, double tau, const FlowMonitors& monitors, StepFn step,
                         FullFn full, DiagFn diag) {
  Trajectory traj;
  for (double thr : monitors.thresholds) traj.crossings.push_back({thr, std::nullopt});

  auto wants_snapshot = [&](long k) {
    if (monitors.snap_every > 0 && k % monitors.snap_every == 0) return true;
    return std::find(monitors.snapshot_steps.begin(), monitors.snapshot_steps.end(), k) !=
           monitors.snapshot_steps.end();
  };
  auto wants_record = [&](long k) {
    return k == 0 || (monitors.record_every > 0 && k % monitors.record_every == 0);
  };

  auto observe = [&](long k, const State& s) {
    const Vector field = full(s);
    const double sup = field.cwiseAbs().maxCoeff();
    if (!std::isfinite(sup)) {
      throw SolverError("non-finite iterate at step " + std::to_string(k));
    }
    for (auto& c : traj.crossings) {
      if (!c.step && sup < c.threshold) c.step = k;
    }
    if (monitors.observer) monitors.observer(k, field);
    if (wants_record(k)) traj.records.push_back(diag(s, k, sup));
    if (wants_snapshot(k)) traj.snapshots.push_back({k, k * tau, field});
    return sup;
  };

  long k = 0;
  double sup = observe(0, state);
  traj.status = sup < monitors.stop_supnorm ? FlowStatus::Extinct : FlowStatus::MaxSteps;
  while (traj.status != FlowStatus::Extinct && k < monitors.max_steps) {
    state = step(state);
    ++k;
    sup = observe(k, state);
    if (sup < monitors.stop_supnorm) traj.status = FlowStatus::Extinct;
  }

  if (traj.records.empty() || traj.records.back().step != k) {
    traj.records.push_back(diag(state, k, sup));
  }
  if (traj.snapshots.empty() || traj.snapshots.back().step != k) {
    traj.snapshots.push_back({k, k * tau, full(state)});
  }
  traj.final_step = k;
  traj.final_u = state.u;
  return traj;
}

}  // namespace tvflow::detail

#endif  // TVFLOW_DETAIL_FLOW_LOOP_HPP
