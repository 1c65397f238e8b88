// One PASS/FAIL line per primary acceptance criterion.
//   acceptance                 run every criterion
//   acceptance --criterion N   run criterion N only
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oldroyd/analysis/inequalities.hpp"
#include "oldroyd/analysis/linear_decay.hpp"
#include "oldroyd/lp/besov.hpp"
#include "oldroyd/para/bony.hpp"
#include "oldroyd/para/estimates.hpp"
#include "oldroyd/spectral/operators.hpp"
#include "oldroyd/spectral/random_field.hpp"
#include "oldroyd_cli/config.hpp"
#include "oldroyd_cli/initial_data.hpp"

using namespace oldroyd;
using spectral::Grid;
using spectral::ScalarField;
using spectral::VectorField;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

struct Criterion {
    int id;
    const char* name;
    double time_limit;  // seconds; <= 0 means none
    std::function<Outcome()> run;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::vector<double> white_noise(const Grid& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> n;
    std::vector<double> v(g.size());
    for (auto& x : v) x = n(rng);
    return v;
}

struct Shape {
    int d, n;
};
constexpr Shape shapes[] = {{2, 32}, {2, 64}, {3, 32}, {3, 64}};

// 1. transform round trip, Parseval, integration by parts, Leray projector
constexpr double tol_spectral = 1e-12;

Outcome spectral_identities() {
    double worst = 0.0;
    int fields = 0;
    for (const auto& sh : shapes) {
        Grid g(sh.d, sh.n);
        for (int k = 0; k < 25; ++k, ++fields) {
            const std::uint64_t seed = 1000 + static_cast<std::uint64_t>(fields);
            const auto a = white_noise(g, seed);
            const auto b = white_noise(g, seed ^ 0xabcdefULL);
            const auto fa = ScalarField::from_physical(g, a);
            const auto fb = ScalarField::from_physical(g, b);

            const auto back = fa.physical();
            double err = 0.0, amax = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                err = std::max(err, std::abs(back[i] - a[i]));
                amax = std::max(amax, std::abs(a[i]));
            }
            worst = std::max(worst, err / amax);

            double direct = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i) direct += a[i] * b[i];
            direct *= g.volume() / static_cast<double>(g.size());
            const double scale = spectral::norm_l2(fa) * spectral::norm_l2(fb);
            worst = std::max(worst, std::abs(direct - spectral::inner_product(fa, fb)) / scale);

            for (int j = 0; j < sh.d; ++j) {
                const auto da = spectral::partial(fa, j), db = spectral::partial(fb, j);
                const double s = spectral::norm_l2(da) * spectral::norm_l2(fb) +
                                 spectral::norm_l2(fa) * spectral::norm_l2(db);
                worst = std::max(worst,
                                 std::abs(spectral::inner_product(da, fb) + spectral::inner_product(fa, db)) / s);
            }

            std::vector<ScalarField> comps;
            for (int j = 0; j < sh.d; ++j)
                comps.push_back(ScalarField::from_physical(g, white_noise(g, seed + 77 * (j + 1))));
            const VectorField v(comps);
            const auto pv = spectral::leray_project(v);
            worst = std::max(worst, spectral::norm_l2(spectral::leray_project(pv) - pv) / spectral::norm_l2(pv));
            const auto gp = spectral::grad(fa);
            worst = std::max(worst, spectral::norm_l2(spectral::leray_project(gp)) / spectral::norm_l2(gp));
        }
    }
    return {worst <= tol_spectral, fmt("%d fields, worst relative residual %.2e (tol %.0e)", fields, worst,
                                       tol_spectral)};
}

// 2. Littlewood-Paley: partition of unity, reconstruction, quasi-orthogonality, Bernstein
constexpr double tol_partition = 1e-12;
constexpr double tol_reconstruction = 1e-12;

Outcome littlewood_paley() {
    double partition = 0.0;
    for (double r = 1e-3; r < 1e3; r *= 1.001) {
        double s = lp::DyadicFilterBank::chi(r);
        for (int q = 0; q < 12; ++q) s += lp::DyadicFilterBank::phi(std::ldexp(r, -q));
        partition = std::max(partition, std::abs(s - 1.0));
    }
    double recon = 0.0, ortho = 0.0;
    long blocks = 0, bernstein_ok = 0;
    int fields = 0;
    for (const auto& sh : shapes) {
        Grid g(sh.d, sh.n);
        lp::DyadicFilterBank bank(g);
        const auto& wv = g.wavevectors();
        for (std::size_t i = 1; i < g.size(); ++i) {
            if (!wv.retained[i]) continue;
            double s = 0.0;
            for (int q = bank.q_min(); q <= bank.q_max(); ++q) s += bank.weight(i, q);
            partition = std::max(partition, std::abs(s - 1.0));
        }
        for (int k = 0; k < 25; ++k, ++fields) {
            auto f = spectral::dealias(ScalarField::from_physical(g, white_noise(g, 5000 + fields)));
            f[0] = 0.0;
            std::vector<ScalarField> parts;
            ScalarField sum(g);
            for (int q = bank.q_min(); q <= bank.q_max(); ++q) {
                parts.push_back(bank.block(f, q));
                sum += parts.back();
            }
            recon = std::max(recon, spectral::norm_l2(sum - f) / spectral::norm_l2(f));
            for (std::size_t p = 0; p < parts.size(); ++p) {
                for (std::size_t q = p + 2; q < parts.size(); ++q) {
                    const int qq = bank.q_min() + static_cast<int>(q);
                    ortho = std::max(ortho, spectral::norm_l2(bank.block(parts[p], qq)) / spectral::norm_l2(f));
                }
                const double n0 = spectral::norm_l2(parts[p]);
                if (n0 == 0.0) continue;
                ++blocks;
                const double n1 = spectral::norm_l2(spectral::grad(parts[p]));
                const double two_q = std::ldexp(1.0, bank.q_min() + static_cast<int>(p));
                if (n1 >= 0.75 * two_q * n0 && n1 <= 8.0 / 3.0 * two_q * n0) ++bernstein_ok;
            }
        }
    }
    const bool pass = partition <= tol_partition && recon <= tol_reconstruction && ortho == 0.0 &&
                      bernstein_ok == blocks;
    return {pass, fmt("partition %.1e, reconstruction %.1e (tol 1e-12), quasi-orthogonality %.1e (exact 0), "
                      "Bernstein %ld/%ld blocks",
                      partition, recon, ortho, bernstein_ok, blocks)};
}

// 3. Bony decomposition on dealiased products
constexpr double tol_bony = 1e-12;

Outcome bony_decomposition() {
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        const auto& sh = shapes[k % 4];
        Grid g(sh.d, sh.n);
        lp::DyadicFilterBank bank(g);
        const double gamma = k % 2 ? 1.0 : 2.5;
        auto f = spectral::random_scalar(g, {gamma, 0.0}, 9000 + k);
        auto h = spectral::random_scalar(g, {gamma, 0.0}, 9500 + k);
        f[0] = 0.1 * (k % 5);
        h[0] = -0.3;
        const auto split = para::bony(bank, f, h);
        auto expected = spectral::multiply(f, h);
        expected[0] -= f[0] * h[0];
        const auto total = split.T_fg + split.T_gf + split.R_fg;
        worst = std::max(worst, spectral::norm_l2(total - expected) / spectral::norm_l2(expected));
    }
    return {worst <= tol_bony, fmt("50 products, worst relative residual %.2e (tol %.0e)", worst, tol_bony)};
}

// 4. transport/stress cancelation and the vertical rewrite
constexpr double tol_structure = 1e-10;

Outcome structure_identities() {
    double canc = 0.0, vert = 0.0;
    for (int k = 0; k < 50; ++k) {
        const auto& sh = shapes[k % 4];
        Grid g(sh.d, sh.n);
        model::State s = model::State::zero(g);
        s.u = spectral::random_divfree(g, {1.5, 0.0}, 300 + k);
        s.tau = spectral::random_symtensor(g, {1.5, 0.0}, 600 + k);
        const auto r = model::check_structure_identities(s);
        canc = std::max(canc, r.cancelation);
        vert = std::max(vert, r.vertical);
    }
    return {canc <= tol_structure && vert <= tol_structure,
            fmt("50 solenoidal samples, cancelation %.2e, vertical rewrite %.2e (tol %.0e)", canc, vert,
                tol_structure)};
}

// 5. linear decay per regime against the coefficient and the eigenvalue oracle
constexpr double min_pass_fraction = 0.95;

Outcome linear_decay() {
    int cells = 0, passed = 0;
    double worst_oracle = 0.0, worst_margin = 1e300;
    for (double Re : {0.5, 1.0, 2.0})
        for (double We : {0.5, 1.0, 2.0})
            for (double omega : {0.1, 0.5, 0.9}) {
                const model::ModelParams p(Re, We, omega, 0.0, 2);
                const auto th = analysis::thresholds(p);
                for (int q : {th.q1, th.q0, th.q0 + 1}) {
                    const auto r = analysis::verify_linear_decay(p, q);
                    ++cells;
                    passed += r.pass;
                    worst_oracle = std::max(worst_oracle, std::abs(r.fitted_rate - r.oracle_rate) / r.oracle_rate);
                    worst_margin = std::min(worst_margin, r.fitted_rate / r.paper_rate);
                }
            }
    const double frac = static_cast<double>(passed) / cells;
    return {frac >= min_pass_fraction,
            fmt("%d/%d cells pass (need %.0f%%), worst oracle deviation %.2f%% (tol 5%%), min fitted/coefficient "
                "%.3g",
                passed, cells, 100.0 * min_pass_fraction, 100.0 * worst_oracle, worst_margin)};
}

// 6. self-convergence of the time integrator
constexpr double min_order = 1.8;

Outcome integrator_order() {
    Grid g(2, 32);
    const model::ModelParams p(1.0, 1.0, 0.5, 0.2, 2);
    cli::InitialDataSpec spec;
    spec.uh = 0.05;
    spec.ud = 0.05;
    spec.tau = 0.05;
    spec.k_cut = 4.0;
    spec.seed = 17;
    const auto s0 = cli::make_initial_data(g, spec);
    const double T = 1.0;
    auto solve = [&](int steps) {
        model::State s = s0;
        for (int i = 0; i < steps; ++i) s = integrate::step(s, p, T / steps);
        return s;
    };
    const auto a = solve(25), b = solve(50), c = solve(100);
    auto dist = [](const model::State& x, const model::State& y) {
        return spectral::norm_l2(x.u - y.u) + spectral::norm_l2(x.tau - y.tau);
    };
    const double e1 = dist(a, b), e2 = dist(b, c);
    const double order = std::log2(e1 / e2);
    return {order >= min_order, fmt("observed order %.3f (need >= %.1f), successive differences %.2e, %.2e",
                                    order, min_order, e1, e2)};
}

struct RunOutput {
    analysis::Trajectory traj;
    bool blew_up;
};

RunOutput run_config(const std::string& name) {
    const auto cfg = cli::load_config(std::string(OLDROYD_CONFIG_DIR) + "/" + name);
    const Grid g(cfg.dim, cfg.n, cfg.box_length);
    const auto params = cfg.params();
    analysis::TrajectoryRecorder rec(g, params, {false});
    const integrate::Observer obs = rec.observer();
    const auto sum = integrate::integrate(cli::make_initial_data(g, cfg.initial), params, cfg.integrator,
                                          std::span(&obs, 1));
    return {rec.trajectory(), sum.blew_up};
}

// 7. small data in every component
constexpr double max_growth_small = 100.0;

Outcome small_data_run() {
    const auto r = run_config("small_data.toml");
    const auto& agg = r.traj.aggregates;
    const double data = agg.front().Ah + agg.front().Ad + agg.front().B;
    const auto& last = agg.back();
    const double peak = last.Ah + last.Ad + last.B;  // every term is non-decreasing in t
    const double integral = r.traj.diagnostics.back().blowup_integral;
    const bool pass = !r.blew_up && std::isfinite(peak) && peak <= max_growth_small * data &&
                      std::isfinite(integral) && r.traj.times.back() == 10.0;
    return {pass, fmt("T = %.1f, blow-up flag %s, A^h %.3e, A^d %.3e, B %.3e (sum <= %.0fx data %.3e), "
                      "blow-up integral %.3e",
                      r.traj.times.back(), r.blew_up ? "set" : "clear", last.Ah, last.Ad, last.B, max_growth_small,
                      data, integral)};
}

// 8. large vertical velocity with small omega u^d
constexpr double max_ratio_to_small = 10.0;
constexpr double ad_low = 0.1, ad_high = 10.0;

Outcome headline_run() {
    const auto small = run_config("small_data.toml");
    const auto big = run_config("headline.toml");
    const auto& s = small.traj.aggregates.back();
    const auto& h = big.traj.aggregates.back();
    const double rh = h.Ah / s.Ah, rb = h.B / s.B;
    const bool pass = !big.blew_up && big.traj.times.back() == 10.0 && rh <= max_ratio_to_small &&
                      rb <= max_ratio_to_small && h.Ad >= ad_low && h.Ad <= ad_high;
    return {pass, fmt("blow-up flag %s, A^h(T)/small %.3g, B(T)/small %.3g (each <= %.0f), A^d(T) %.3g "
                      "(in [%.1f, %.0f])",
                      big.blew_up ? "set" : "clear", rh, rb, max_ratio_to_small, h.Ad, ad_low, ad_high)};
}

// 9. fitted energy-inequality constants over a seeded ensemble
constexpr double tol_constants = 0.10;

Outcome fitted_constants() {
    auto ensemble = [](int n, double dt) {
        std::array<double, 3> c{0, 0, 0};
        bool finite = true;
        const model::ModelParams p(1.0, 1.0, 0.5, 0.0, 2);
        const Grid g(2, n);
        integrate::IntegratorConfig ic;
        ic.dt = dt;
        ic.t_end = 2.0;
        ic.output_every = 0.05;
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            cli::InitialDataSpec spec;
            spec.uh = 0.05;
            spec.ud = 0.2;
            spec.tau = 0.05;
            spec.k_cut = 6.0;
            spec.seed = seed;
            analysis::TrajectoryRecorder rec(g, p, {false});
            const integrate::Observer obs = rec.observer();
            integrate::integrate(cli::make_initial_data(g, spec), p, ic, std::span(&obs, 1));
            const auto fits = analysis::fit_energy_constants(rec.trajectory(), p);
            for (int i = 0; i < 3; ++i) {
                finite = finite && fits[i].samples > 0 && std::isfinite(fits[i].max_ratio);
                c[i] = std::max(c[i], fits[i].max_ratio);
            }
        }
        return std::pair{c, finite};
    };
    const auto [base, f0] = ensemble(32, 0.02);
    const auto [half, f1] = ensemble(32, 0.01);
    const auto [fine, f2] = ensemble(64, 0.02);
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
        worst = std::max(worst, std::abs(half[i] - base[i]) / base[i]);
        worst = std::max(worst, std::abs(fine[i] - base[i]) / base[i]);
    }
    return {f0 && f1 && f2 && worst <= tol_constants,
            fmt("C1 %.4g, C2 %.4g, C3 %.4g; dt-halved %.4g/%.4g/%.4g, grid-doubled %.4g/%.4g/%.4g; "
                "worst change %.2f%% (tol %.0f%%)",
                base[0], base[1], base[2], half[0], half[1], half[2], fine[0], fine[1], fine[2], 100.0 * worst,
                100.0 * tol_constants)};
}

// 10. harmonic-analysis estimate verifiers under resolution doubling
constexpr double tol_estimates = 0.10;

Outcome estimate_verifiers() {
    double worst = 0.0;
    std::string detail;
    for (const auto& sh : {Shape{2, 64}, Shape{3, 32}}) {
        const Grid g(sh.d, sh.n);
        para::EnsembleSpec spec;
        for (auto kind : para::all_estimate_kinds()) {
            const auto r = para::verify_estimate(kind, g, spec);
            worst = std::max(worst, r.resolution_stability);
            detail += fmt("%s%s(d=%d) %.3g/%.3g", detail.empty() ? "" : ", ", r.name.c_str(), sh.d, r.max_ratio,
                          r.max_ratio_doubled);
        }
    }
    return {worst <= tol_estimates,
            fmt("worst change %.3f%% (tol %.0f%%): ", 100.0 * worst, 100.0 * tol_estimates) + detail};
}

const std::vector<Criterion> criteria{
    {1, "spectral identities", 60.0, spectral_identities},
    {2, "Littlewood-Paley suite", 60.0, littlewood_paley},
    {3, "Bony decomposition", 0.0, bony_decomposition},
    {4, "structure identities", 0.0, structure_identities},
    {5, "linear decay", 180.0, linear_decay},
    {6, "integrator order", 120.0, integrator_order},
    {7, "small-data global run", 300.0, small_data_run},
    {8, "headline regime", 300.0, headline_run},
    {9, "fitted energy constants", 0.0, fitted_constants},
    {10, "estimate verifiers", 0.0, estimate_verifiers},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
            return 2;
        }
    }
    if (only < 0 || only > static_cast<int>(criteria.size())) {
        std::fprintf(stderr, "no criterion %d\n", only);
        return 2;
    }
    bool all = true;
    for (const auto& c : criteria) {
        if (only && c.id != only) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome out{false, ""};
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.time_limit <= 0.0 || secs <= c.time_limit;
        const bool pass = out.pass && in_time;
        all = all && pass;
        std::string timing = fmt("%.1f s", secs);
        if (c.time_limit > 0.0) timing += fmt(" (limit %.0f s)", c.time_limit);
        std::printf("[%s] %2d %s: %s; %s\n", pass ? "PASS" : "FAIL", c.id, c.name, out.detail.c_str(),
                    timing.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
