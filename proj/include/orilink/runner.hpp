// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <istream>
#include <string>

#include "orilink/config.hpp"
#include "orilink/table.hpp"

namespace orilink {

// Angle series ingested from a measurement CSV with header
// t_seconds,alpha_deg,beta_deg,gamma_deg. All series share the timestamps;
// values are converted to radians and the polar-angle series is derived from
// pitch and roll.
struct OrientationDataset {
    SampleSeries alpha;
    SampleSeries beta;
    SampleSeries gamma;
    SampleSeries theta;
};

OrientationDataset ingest_orientation_csv(const std::string& path);
OrientationDataset parse_orientation_csv(std::istream& in);

// Fit table for an ingested dataset (both families on the polar angle).
TableArtifact fit_dataset_table(const OrientationDataset& data);

// Trajectory export with the columns t,x,y,omega_rad,theta_rad,serving_ap.
TableArtifact trajectory_table(const RunConfig& cfg, std::size_t n_runs);

// Executes the configured scenario and returns its table. Validation
// scenarios set artifact.ok = false when any check fails.
TableArtifact run(const RunConfig& cfg);

}  // namespace orilink
