// Copyright 2026 The fockqo Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockqo_cli/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <string>

#include "fockqo/errors.hpp"
#include "fockqo/parallel.hpp"
#include "fockqo_cli/format.hpp"

namespace fockqo::cli {

namespace {

struct Row {
    std::string value;
    bool nonclassical = false;
    std::string_view status;
};

std::vector<WitnessSpec> canonical(std::vector<WitnessSpec> ws) {
    std::stable_sort(ws.begin(), ws.end(), [](const WitnessSpec& a, const WitnessSpec& b) {
        if (a.criterion != b.criterion) return a.criterion < b.criterion;
        return a.order < b.order;
    });
    return ws;
}

} // namespace

std::vector<WitnessSpec> default_witnesses() {
    return {{Criterion::antibunching, 1},   {Criterion::antibunching, 2},
            {Criterion::antibunching, 3},   {Criterion::sub_poissonian, 2},
            {Criterion::sub_poissonian, 3}, {Criterion::hong_mandel, 2},
            {Criterion::hong_mandel, 4},    {Criterion::hillery, 1},
            {Criterion::hillery, 2},        {Criterion::agarwal_tara, 2},
            {Criterion::agarwal_tara, 3},   {Criterion::vogel, 3},
            {Criterion::vogel, 4}};
}

void check_witness(const WitnessSpec& w) {
    bool ok = false;
    switch (w.criterion) {
    case Criterion::antibunching: ok = w.order >= 1; break;
    case Criterion::sub_poissonian: ok = w.order >= 2; break;
    case Criterion::hong_mandel: ok = w.order >= 2 && w.order % 2 == 0; break;
    case Criterion::hillery: ok = w.order >= 1; break;
    case Criterion::agarwal_tara: ok = w.order >= 2; break;
    case Criterion::vogel: ok = w.order >= 3; break;
    }
    if (!ok)
        throw ParameterError("invalid order " + std::to_string(w.order) + " for witness " +
                             std::string(to_string(w.criterion)));
}

std::vector<WitnessSpec> parse_witness(std::string_view text) {
    if (text == "all") return default_witnesses();
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw ParameterError("witness must be name:order or all, got '" + std::string(text) + "'");
    const auto criterion = parse_criterion(text.substr(0, colon));
    if (!criterion) throw ParameterError("unknown witness '" + std::string(text.substr(0, colon)) + "'");
    const auto digits = text.substr(colon + 1);
    int order = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), order);
    if (ec != std::errc{} || end != digits.data() + digits.size() || digits.empty())
        throw ParameterError("bad witness order in '" + std::string(text) + "'");
    WitnessSpec w{*criterion, order};
    check_witness(w);
    return {w};
}

double SweepRange::at(int i) const noexcept {
    if (i == count - 1) return stop;
    return start + i * ((stop - start) / (count - 1));
}

void SweepSpec::validate() const {
    const auto names = family_parameters(family);
    if (std::find(names.begin(), names.end(), sweep.name) == names.end())
        throw ParameterError("cannot sweep '" + sweep.name + "' for family " +
                             std::string(to_string(family)));
    if (fixed_params.count(sweep.name))
        throw ParameterError("sweep parameter '" + sweep.name + "' is also fixed");
    if (sweep.count < 2) throw ParameterError("sweep count must be >= 2");
    if (!(sweep.start < sweep.stop)) throw ParameterError("sweep requires from < to");
    for (auto name : names)
        if (name != sweep.name && !fixed_params.count(std::string(name)))
            throw ParameterError("missing parameter " + std::string(name));
    for (const auto& [name, value] : fixed_params)
        if (std::find(names.begin(), names.end(), name) == names.end())
            throw ParameterError("parameter " + name + " does not apply to family " +
                                 std::string(to_string(family)));
    if (witnesses.empty()) throw ParameterError("no witnesses requested");
    for (const auto& w : witnesses) check_witness(w);
}

nlohmann::json to_json(const SweepSpec& spec) {
    nlohmann::json ws = nlohmann::json::array();
    for (const auto& w : spec.witnesses)
        ws.push_back({{"criterion", to_string(w.criterion)}, {"order", w.order}});
    return {{"family", to_string(spec.family)},
            {"fixed_params", spec.fixed_params},
            {"sweep",
             {{"name", spec.sweep.name},
              {"start", spec.sweep.start},
              {"stop", spec.sweep.stop},
              {"count", spec.sweep.count}}},
            {"witnesses", ws},
            {"output", {{"path", spec.output_path}, {"format", spec.output_format}}}};
}

SweepSpec sweep_spec_from_json(const nlohmann::json& j) {
    SweepSpec spec;
    const auto family = parse_family(j.at("family").get<std::string>());
    if (!family) throw ParameterError("unknown family " + j.at("family").dump());
    spec.family = *family;
    spec.fixed_params = j.at("fixed_params").get<ParamMap>();
    const auto& s = j.at("sweep");
    spec.sweep = {s.at("name").get<std::string>(), s.at("start").get<double>(),
                  s.at("stop").get<double>(), s.at("count").get<int>()};
    for (const auto& w : j.at("witnesses")) {
        const auto c = parse_criterion(w.at("criterion").get<std::string>());
        if (!c) throw ParameterError("unknown witness " + w.at("criterion").dump());
        spec.witnesses.push_back({*c, w.at("order").get<int>()});
    }
    spec.output_path = j.at("output").at("path").get<std::string>();
    spec.output_format = j.at("output").at("format").get<std::string>();
    return spec;
}

void run_sweep(const SweepSpec& spec, unsigned workers, std::ostream& out) {
    spec.validate();
    if (spec.output_format != "csv")
        throw ParameterError("unsupported sweep format '" + spec.output_format + "'");
    const auto witnesses = canonical(spec.witnesses);
    const auto points = static_cast<std::size_t>(spec.sweep.count);
    std::vector<std::vector<Row>> rows(points);

    parallel_for(points, workers, [&](std::size_t i) {
        StateSpec state{spec.family, spec.fixed_params};
        state.params[spec.sweep.name] = spec.sweep.at(static_cast<int>(i));
        auto& out_rows = rows[i];
        std::optional<FockSuperposition> s;
        try {
            s = state.build();
        } catch (const ParameterError&) {
            out_rows.assign(witnesses.size(), Row{"nan", false, "invalid-params"});
            return;
        }
        for (const auto& w : witnesses) {
            const auto r = evaluate_witness(*s, w.criterion, w.order);
            const bool ok = r.status == WitnessStatus::ok;
            out_rows.push_back({format_number(r.value), r.nonclassical, ok ? "ok" : "indeterminate"});
        }
    });

    write_metadata(out, {{"command", "sweep"}, {"spec", to_json(spec)}});
    out << "sweep_value,criterion,order,value,nonclassical,status\n";
    for (std::size_t i = 0; i < points; ++i) {
        const std::string x = format_number(spec.sweep.at(static_cast<int>(i)));
        for (std::size_t k = 0; k < witnesses.size(); ++k) {
            const auto& r = rows[i][k];
            out << x << ',' << csv_field(to_string(witnesses[k].criterion)) << ','
                << witnesses[k].order << ',' << r.value << ',' << (r.nonclassical ? "true" : "false")
                << ',' << r.status << '\n';
        }
    }
}

SweepSpec read_sweep_metadata(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("# ", 0) != 0) break;
        const auto meta = nlohmann::json::parse(line.substr(2), nullptr, false);
        if (!meta.is_discarded() && meta.value("command", "") == "sweep")
            return sweep_spec_from_json(meta.at("spec"));
    }
    throw ParameterError("no sweep metadata found");
}

} // namespace fockqo::cli
