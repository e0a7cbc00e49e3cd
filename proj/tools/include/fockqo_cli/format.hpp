// Copyright 2026 The fockqo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "json.hpp"

namespace fockqo::cli {

/// Twelve significant digits, "nan" / "inf" / "-inf" for non-finite values.
std::string format_number(double x);

/// x rounded to twelve significant digits, for numbers stored in JSON.
double round12(double x);

/// RFC 4180 field: quoted only when it holds a comma, quote or line break.
std::string csv_field(std::string_view text);

/// Writes `meta` as a single "# {...}" comment line.
void write_metadata(std::ostream& out, const nlohmann::json& meta);

} // namespace fockqo::cli
