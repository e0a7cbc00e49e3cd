// Copyright 2026 The fockqo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "fockqo/witnesses.hpp"
#include "fockqo_cli/state_spec.hpp"
#include "json.hpp"

namespace fockqo::cli {

struct WitnessSpec {
    Criterion criterion;
    int order;

    bool operator==(const WitnessSpec&) const = default;
};

/// "name:order", or "all" for default_witnesses(). Throws ParameterError.
std::vector<WitnessSpec> parse_witness(std::string_view text);

/// hoa 1-3, hosps 2-3, hong_mandel 2 and 4, hillery 1-2, agarwal_tara 2-3, vogel 3-4.
std::vector<WitnessSpec> default_witnesses();

/// Throws ParameterError when `order` is outside the criterion's domain.
void check_witness(const WitnessSpec& w);

struct SweepRange {
    std::string name;
    double start = 0.0;
    double stop = 1.0;
    int count = 2;

    double at(int i) const noexcept;
    bool operator==(const SweepRange&) const = default;
};

struct SweepSpec {
    Family family = Family::ngbs;
    ParamMap fixed_params;
    SweepRange sweep;
    std::vector<WitnessSpec> witnesses;
    std::string output_path = "-";
    std::string output_format = "csv";

    /// Throws ParameterError unless the sweep parameter belongs to the family
    /// and is absent from fixed_params, every other family parameter is
    /// fixed, count >= 2, start < stop, and every witness order is valid.
    void validate() const;

    bool operator==(const SweepSpec&) const = default;
};

nlohmann::json to_json(const SweepSpec& spec);
SweepSpec sweep_spec_from_json(const nlohmann::json& j);

/// Writes the metadata line and CSV rows
///   sweep_value,criterion,order,value,nonclassical,status
/// ordered by sweep value, then criterion, then order. Points whose
/// parameters are invalid produce rows with status "invalid-params".
/// Output is identical for every worker count.
void run_sweep(const SweepSpec& spec, unsigned workers, std::ostream& out);

/// Recovers the SweepSpec echoed in the metadata line of a sweep file.
SweepSpec read_sweep_metadata(std::istream& in);

} // namespace fockqo::cli
