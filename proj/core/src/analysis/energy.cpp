#include "oldroyd/analysis/energy.hpp"

#include <cmath>

#include "oldroyd/errors.hpp"
#include "oldroyd/spectral/operators.hpp"

namespace oldroyd::analysis {

Thresholds thresholds(const ModelParams& p) {
    const double a = 3.0 / 32.0 * std::sqrt(p.We * p.Re) / (p.Re + p.We);
    const double b = 8.0 / (3.0 * (1.0 - p.omega)) * std::sqrt(p.Re / p.We);
    Thresholds th{static_cast<int>(std::floor(std::log2(a))), static_cast<int>(std::floor(std::log2(b))) + 1};
    if (!(th.q1 < th.q0)) throw NumericError("frequency thresholds out of order");
    return th;
}

Regime regime_of(int q, const Thresholds& th) {
    if (q <= th.q1) return Regime::low;
    if (q <= th.q0) return Regime::mid;
    return Regime::high;
}

std::string_view regime_name(Regime r) {
    switch (r) {
        case Regime::low: return "low";
        case Regime::mid: return "mid";
        case Regime::high: return "high";
    }
    return "unknown";
}

double regime_rate(Regime r, int q, const ModelParams& p) {
    switch (r) {
        case Regime::low: return std::exp2(2.0 * q);
        case Regime::high: return 1.0 / ((1.0 - p.omega) * p.We);
        case Regime::mid: return 81.0 * p.We * (1.0 - p.omega) / (65536.0 * (p.Re + p.We) * (p.Re + p.We));
    }
    return 0.0;
}

YqRecord compute_Yq(const ScalarField& u, const ScalarField& s, int q, int component, const ModelParams& p,
                    const Thresholds& th) {
    using spectral::inner_product;
    YqRecord rec{q, component, regime_of(q, th), 0.0};
    const double uu = inner_product(u, u);
    double form = 0.0;
    double scale = 0.0;
    switch (rec.regime) {
        case Regime::low: {
            const double a = p.We / p.Re;
            const double ss = inner_product(s, s);
            const double us = inner_product(u, s);
            const double uls = inner_product(u, spectral::laplacian(s));
            form = uu + 2.0 * a * a * ss + 2.0 * a * us + 2.0 * a * uls;
            scale = uu + 2.0 * a * a * ss + 2.0 * a * std::abs(us) + 2.0 * a * std::abs(uls);
            break;
        }
        case Regime::high: {
            const double b = (1.0 - p.omega) * p.We / (p.omega * p.Re);
            const double ss = inner_product(s, s);
            const double us = inner_product(u, s);
            form = 2.0 * uu + b * b * ss - 2.0 * b * us;
            scale = 2.0 * uu + b * b * ss + 2.0 * b * std::abs(us);
            break;
        }
        case Regime::mid: {
            const auto inv = spectral::lambda_power(s, -1.0);
            form = uu + p.We / (p.omega * p.Re) * inner_product(inv, inv);
            scale = form;
            break;
        }
    }
    if (form < -1e-13 * scale)
        throw NumericError("negative energy functional at block " + std::to_string(q) + " (" +
                           std::string(regime_name(rec.regime)) + " regime)");
    rec.value = std::sqrt(std::max(0.0, form));
    return rec;
}

}  // namespace oldroyd::analysis
