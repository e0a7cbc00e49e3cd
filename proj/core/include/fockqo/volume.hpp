// Copyright 2026 The fockqo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "fockqo/fock_state.hpp"

namespace fockqo {

struct VolumeOptions {
    double radius = 0.0;     // half-width of the square window; <= 0: sqrt(2N) + 6
    int base_cells = 0;      // cells per axis in the first pass; <= 0: automatic
    double tolerance = 1e-5; // stop once successive delta estimates differ by less
    int max_refinements = 12;
    unsigned workers = 1;
};

/// One refinement pass of the volume integral.
struct VolumeEstimate {
    int pass = 0;
    double finest_cell = 0.0;     // edge length of the smallest cells in this pass
    double delta = 0.0;           // integral |W| - 1
    double negative_volume = 0.0; // integral max(-W, 0)
    double integral = 0.0;        // integral W (normalization check)
    std::size_t sign_change_cells = 0;
    std::uint64_t evaluations = 0; // cumulative W evaluations
};

struct VolumeReport {
    double delta = 0.0;
    double negative_volume = 0.0;
    double radius = 0.0;
    int base_cells = 0;
    double tolerance = 0.0;
    std::vector<VolumeEstimate> history;
};

/// Nonclassical volume delta = integral |W| dx dp - 1 over a square window,
/// together with the volume of the negative part (delta / 2 up to
/// normalization error).
///
/// Quadrature: the window is tiled into base cells integrated by 4x4
/// Gauss-Legendre. |W| is smooth except where W changes sign, so a cell whose
/// samples (nodes and corners) carry both signs is split into four on each
/// subsequent pass; cells of one sign are final. Passes continue until two
/// successive delta estimates agree within `tolerance`, otherwise a
/// ConvergenceError carrying the delta history is thrown.
///
/// Cells are processed in any order by up to `workers` threads and reduced
/// in a fixed order, so results are bitwise independent of the worker count.
VolumeReport nonclassical_volume(const FockSuperposition& state, const VolumeOptions& options = {});

} // namespace fockqo
