// Copyright 2026 The fockqo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fockqo_cli/state_spec.hpp"

namespace fockqo::cli {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum ExitCode : int { exit_ok = 0, exit_parameter = 1, exit_convergence = 2, exit_io = 3 };

enum class GridKind { wigner, tomogram };

struct GridRequest {
    GridKind kind = GridKind::wigner;
    StateSpec state;
    double window = 0.0;  // half-width; <= 0: sqrt(2N) + 6
    int resolution = 201; // points per axis (X points for a tomogram)
    int angles = 64;      // tomogram only
};

/// Long-format CSV (x,p,value or X,theta,value) after a metadata line
/// carrying the state, window, resolution and normalization check.
void run_grid(const GridRequest& request, unsigned workers, std::ostream& out);

struct VolumeRequest {
    StateSpec state;
    double tolerance = 1e-5;
    double window = 0.0;  // half-width; <= 0: automatic
    int resolution = 0;   // base cells per axis; <= 0: automatic
};

/// JSON report with delta, the negative-part volume, the window and
/// refinement history. On non-convergence an error report with the partial
/// history is written and the ConvergenceError rethrown.
void run_volume(const VolumeRequest& request, unsigned workers, std::ostream& out);

/// Coefficients and photon-number distribution: n,re,im,probability.
void run_state(const StateSpec& state, std::ostream& out);

/// Full command line (args[0] is the program name). Returns an ExitCode.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fockqo::cli
