// One line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "fockqo/moments.hpp"
#include "fockqo/ngbs.hpp"
#include "fockqo/tomogram.hpp"
#include "fockqo/volume.hpp"
#include "fockqo/wigner.hpp"
#include "fockqo/witnesses.hpp"
#include "fockqo_cli/commands.hpp"
#include "generators.hpp"

using namespace fockqo;
using std::numbers::pi;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

FockSuperposition ngbs(int m, double p, double q) { return ngbs_state(NgbsParams(m, p, q)); }

Outcome ngbs_volume() {
    const double ps[] = {0.2, 0.4, 0.6, 0.8};
    const double table[] = {0.166724, 0.244092, 0.324178, 0.416412};
    bool ok = true;
    double previous = -1;
    std::string detail;
    for (int i = 0; i < 4; ++i) {
        VolumeOptions opts;
        opts.tolerance = 1e-5;
        opts.workers = 1;
        const auto t0 = std::chrono::steady_clock::now();
        const auto r = nonclassical_volume(ngbs(25, ps[i], 0.5), opts);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool row = std::abs(r.negative_volume - table[i]) <= 5e-4 &&
                         std::abs(r.delta - 2 * table[i]) <= 1e-3 && secs < 60 &&
                         r.negative_volume > previous;
        ok = ok && row;
        previous = r.negative_volume;
        detail += fmt(" p=%.1f neg=%.6f (ref %.6f) delta=%.6f %.1fs;", ps[i], r.negative_volume,
                      table[i], r.delta, secs);
    }
    return {ok, detail};
}

Outcome fock1_volume() {
    const auto r = nonclassical_volume(FockSuperposition::number_state(1));
    const double exact = 4 * std::exp(-0.5) - 2;
    const double err = std::abs(r.delta - exact);
    return {err <= 1e-5, fmt("delta=%.9f exact=%.9f |err|=%.2e", r.delta, exact, err)};
}

Outcome wigner_agreement() {
    testing::Rng rng(20261016);
    double worst = 0;
    for (int i = 0; i < 50; ++i) {
        auto s = testing::random_state(rng, testing::uniform_int(rng, 0, 8));
        const double r = testing::uniform(rng, 0, 4);
        const double phi = testing::uniform(rng, 0, 2 * pi);
        const double x = r * std::cos(phi), p = r * std::sin(phi);
        const double a = wigner_point(s, x, p);
        const double b = wigner_series(s, x, p);
        const double c = wigner_quadrature(s, x, p);
        worst = std::max({worst, std::abs(a - b), std::abs(a - c), std::abs(b - c)});
    }
    return {worst <= 1e-8, fmt("max pairwise difference %.2e over 50 samples", worst)};
}

Outcome limiting_states() {
    double worst_q0 = 0;
    for (int m = 0; m <= 20; ++m) {
        for (int i = 1; i <= 9; ++i) {
            auto a = ngbs(m, 0.1 * i, 0.0);
            auto b = binomial_state(m, 0.1 * i);
            for (int n = 0; n <= m; ++n)
                worst_q0 = std::max(worst_q0, std::abs(a.amplitude(n) - b.amplitude(n)));
        }
    }
    bool endpoints = true;
    for (int m = 0; m <= 20; ++m) {
        auto vac = binomial_state(m, 0.0);
        auto top = binomial_state(m, 1.0);
        for (int n = 0; n <= m; ++n) {
            endpoints = endpoints && vac.amplitude(n) == complex(n == 0 ? 1.0 : 0.0);
            endpoints = endpoints && top.amplitude(n) == complex(n == m ? 1.0 : 0.0);
        }
    }
    double worst_coherent = 0;
    for (double alpha : {0.5, 1.0, 2.0}) {
        auto s = truncated_coherent_state(alpha);
        const std::vector<WitnessResult> all{
            hoa(s, 1), hoa(s, 2), hoa(s, 3), hosps(s, 2), hosps(s, 3), hosps(s, 4),
            hong_mandel_hos(s, 2), hong_mandel_hos(s, 4), hillery_hos(s, 1), hillery_hos(s, 2),
            agarwal_tara(s, 2), agarwal_tara(s, 3), vogel_determinant(s, 3), vogel_determinant(s, 4)};
        for (const auto& w : all) worst_coherent = std::max(worst_coherent, std::abs(w.value));
    }
    const bool ok = worst_q0 <= 1e-12 && endpoints && worst_coherent < 1e-6;
    return {ok, fmt("q=0 max diff %.1e; endpoints %s; coherent max |witness| %.1e", worst_q0,
                    endpoints ? "exact" : "NOT exact", worst_coherent)};
}

Outcome fock_witnesses() {
    double worst = 0;
    for (int n = 1; n <= 6; ++n) {
        auto s = FockSuperposition::number_state(n);
        worst = std::max({worst, std::abs(hoa(s, 1).value + n), std::abs(hosps(s, 2).value + n),
                          std::abs(agarwal_tara(s, 2).value + 1),
                          std::abs(hong_mandel_hos(s, 2).value - 2 * n)});
    }
    return {worst <= 1e-12, fmt("max deviation %.1e for n = 1..6", worst)};
}

Outcome witness_regimes() {
    // (a) M = 10, q = -0.02: valid p is [0.2, 0.8].
    bool negative_somewhere[3] = {false, false, false};
    for (int i = 0; i <= 60; ++i) {
        const double p = 0.2 + 0.01 * i;
        auto s = ngbs(10, p, -0.02);
        for (int l = 1; l <= 3; ++l) negative_somewhere[l - 1] |= hoa(s, l).value < 0;
    }
    auto high = ngbs(10, 0.8, -0.02);
    const double d1 = hoa(high, 1).value, d2 = hoa(high, 2).value, d3 = hoa(high, 3).value;
    const bool a = negative_somewhere[0] && negative_somewhere[1] && negative_somewhere[2] &&
                   d3 < d2 && d2 < d1;

    // (b) M = 10, l = 2, p = 0.5 along q.
    const double qs[] = {-0.02, 0.0, 0.05, 0.2};
    double dq[4];
    for (int i = 0; i < 4; ++i) dq[i] = hoa(ngbs(10, 0.5, qs[i]), 2).value;
    const bool b = dq[0] < dq[1] && dq[1] < dq[2] && dq[2] < dq[3] && dq[0] < 0 && dq[3] > 0;

    // (c) M = 10, q = -0.005: the Abel bound caps p at 0.95.
    const double p_max = 1 + 10 * -0.005;
    bool monotone = true, bounded = true;
    double last = 0, first = 0;
    for (int i = 0; i <= 90; ++i) {
        const double p = 0.05 + (p_max - 0.05) * i / 90;
        const double v = agarwal_tara(ngbs(10, p, -0.005), 2).value;
        if (i == 0) first = v;
        else monotone = monotone && v < last;
        bounded = bounded && v >= -1 && v < 0;
        last = v;
    }
    const bool c = monotone && bounded && last < -0.95;

    return {a && b && c,
            fmt("D(1..3) at p=0.8: %.4g > %.4g > %.4g; D(2) along q: %.4g %.4g %.4g %.4g; "
                "A2 from %.4f (p=0.05) to %.4f (p=%.2f) %s",
                d1, d2, d3, dq[0], dq[1], dq[2], dq[3], first, last, p_max,
                monotone ? "decreasing" : "NOT decreasing")};
}

Outcome closed_form_moments() {
    double worst = 0;
    for (int m = 1; m <= 15; ++m) {
        for (double p : {0.05, 0.2, 0.35, 0.5, 0.65, 0.8, 0.95}) {
            const double bound = NgbsParams::abel_bound(m, p);
            for (double q : {bound, bound / 2, 0.0, 0.05, 0.2, 0.5, 1.0}) {
                const NgbsParams params(m, p, q);
                auto s = ngbs_state(params);
                for (int k = 0; k <= 3; ++k)
                    for (int l = 0; l <= 3; ++l)
                        worst = std::max(worst, std::abs(ngbs_moment_closed_form(params, k, l) -
                                                         moment(s, k, l).real()));
            }
        }
    }
    return {worst <= 1e-8, fmt("max |closed form - direct| %.2e over 735 states, k,l <= 3", worst)};
}

Outcome tomograms() {
    auto s = ngbs(25, 0.2, 0.5);
    auto g = tomogram_grid(s, Axis{-12, 12, 2401}, 16);
    double norm_err = 0;
    for (int j = 0; j < 16; ++j) norm_err = std::max(norm_err, std::abs(g.marginal_norm(j) - 1));

    testing::Rng rng(8);
    auto r = testing::random_state(rng, 6);
    double radon = 0;
    for (int i = 0; i < 10; ++i)
        radon = std::max(radon, radon_consistency(r, testing::uniform(rng, 0, 2 * pi),
                                                  testing::uniform(rng, -4, 4)));

    auto vac = FockSuperposition::number_state(0);
    double vac_err = 0;
    for (double theta : {0.0, 1.0, 2.5, 4.0})
        for (double x = -6; x <= 6; x += 0.05)
            vac_err = std::max(vac_err, std::abs(tomogram_point(vac, x, theta) -
                                                 std::exp(-x * x) / std::sqrt(pi)));

    return {norm_err <= 1e-8 && radon < 1e-6 && vac_err <= 1e-12,
            fmt("normalization %.1e, Radon residual %.1e, vacuum %.1e", norm_err, radon, vac_err)};
}

Outcome sweep_determinism() {
    auto run = [](const char* workers) {
        std::ostringstream out, err;
        const int code = cli::run_cli({"fockqo", "sweep", "--M", "10", "--q", "-0.005", "--sweep", "p",
                                       "--from", "0.01", "--to", "0.99", "--count", "99", "--witness",
                                       "all", "--workers", workers},
                                      out, err);
        return code == 0 ? out.str() : std::string();
    };
    const auto a = run("1"), b = run("1"), c = run("8");
    const bool ok = !a.empty() && a == b && a == c;
    return {ok, fmt("%zu bytes; repeat %s, 1 vs 8 workers %s", a.size(), a == b ? "identical" : "DIFFERENT",
                    a == c ? "identical" : "DIFFERENT")};
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"ngbs-volume", ngbs_volume},
        {"fock1-volume", fock1_volume},
        {"wigner-three-way", wigner_agreement},
        {"limiting-states", limiting_states},
        {"fock-witnesses", fock_witnesses},
        {"witness-regimes", witness_regimes},
        {"closed-form-moments", closed_form_moments},
        {"tomogram-suite", tomograms},
        {"sweep-determinism", sweep_determinism},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o{false, ""};
        try {
            o = check();
        } catch (const std::exception& e) {
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("%s %-20s %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
        std::fflush(stdout);
        failures += !o.pass;
    }
    return failures == 0 ? 0 : 1;
}
