#pragma once

#include <functional>

#include "scan.hpp"
#include "synclust/esync.hpp"

namespace synclust::detail {

void renew_all(const StateVector& cur, const std::vector<std::vector<Index>>& neighbors,
               Model model, double v_dt, StateVector& next, int step,
               std::vector<std::string>& flags);

// Common loop for the naive and grid-backed point engines. `scan` delivers
// neighbor sets, edge statistics and coincidence components for a state;
// `moved` is told about each applied update so a spatial index can follow
// the points.
RunReport run_point_engine(const StateVector& data, const ModelParams& params,
                           const RunOptions& opts,
                           const std::function<ScanResult(const StateVector&)>& scan,
                           const std::function<void(const StateVector&, const StateVector&)>& moved,
                           std::vector<std::string> initial_flags);

}  // namespace synclust::detail
