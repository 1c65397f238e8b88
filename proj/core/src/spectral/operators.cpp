#include "oldroyd/spectral/operators.hpp"

#include <algorithm>
#include <cmath>

#include "oldroyd/errors.hpp"
#include "oldroyd/spectral/fft.hpp"

namespace oldroyd::spectral {

namespace {

constexpr cplx I{0.0, 1.0};

double max_pointwise_root(const std::vector<std::vector<double>>& samples, const std::vector<double>& weights) {
    double best = 0.0;
    const std::size_t size = samples.front().size();
    for (std::size_t p = 0; p < size; ++p) {
        double s = 0.0;
        for (std::size_t c = 0; c < samples.size(); ++c) s += weights[c] * samples[c][p] * samples[c][p];
        best = std::max(best, s);
    }
    return std::sqrt(best);
}

}  // namespace

ScalarField partial(const ScalarField& f, int axis) {
    const auto& k = f.grid().wavevectors().k[static_cast<std::size_t>(axis)];
    ScalarField out(f.grid());
    for (std::size_t i = 0; i < k.size(); ++i) out[i] = I * k[i] * f[i];
    return out;
}

VectorField grad(const ScalarField& f) {
    std::vector<ScalarField> comps;
    for (int a = 0; a < f.grid().dim(); ++a) comps.push_back(partial(f, a));
    return VectorField(std::move(comps));
}

ScalarField div(const VectorField& v) {
    const Grid& g = v.grid();
    ScalarField out(g);
    for (int a = 0; a < g.dim(); ++a) {
        const auto& k = g.wavevectors().k[static_cast<std::size_t>(a)];
        const auto& c = v[a];
        for (std::size_t i = 0; i < k.size(); ++i) out[i] += I * k[i] * c[i];
    }
    return out;
}

ScalarField laplacian(const ScalarField& f) {
    const auto& k2 = f.grid().wavevectors().k2;
    ScalarField out(f.grid());
    for (std::size_t i = 0; i < k2.size(); ++i) out[i] = -k2[i] * f[i];
    return out;
}

std::vector<ScalarField> partial_h(const ScalarField& f) {
    std::vector<ScalarField> out;
    for (int a = 0; a + 1 < f.grid().dim(); ++a) out.push_back(partial(f, a));
    return out;
}

ScalarField div_h(const VectorField& v) {
    const Grid& g = v.grid();
    ScalarField out(g);
    for (int a = 0; a + 1 < g.dim(); ++a) {
        const auto& k = g.wavevectors().k[static_cast<std::size_t>(a)];
        const auto& c = v[a];
        for (std::size_t i = 0; i < k.size(); ++i) out[i] += I * k[i] * c[i];
    }
    return out;
}

ScalarField lambda_power(const ScalarField& f, double s) {
    const auto& k2 = f.grid().wavevectors().k2;
    ScalarField out(f.grid());
    for (std::size_t i = 0; i < k2.size(); ++i) {
        if (k2[i] == 0.0)
            out[i] = s == 0.0 ? f[i] : cplx{};
        else
            out[i] = std::pow(k2[i], 0.5 * s) * f[i];
    }
    return out;
}

VectorField leray_project(const VectorField& v) {
    const Grid& g = v.grid();
    const auto& wv = g.wavevectors();
    const int d = g.dim();
    VectorField out = v;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (wv.k2[i] == 0.0) continue;
        cplx kv{};
        for (int a = 0; a < d; ++a) kv += wv.k[static_cast<std::size_t>(a)][i] * v[a][i];
        const cplx c = kv / wv.k2[i];
        for (int a = 0; a < d; ++a) out[a][i] -= wv.k[static_cast<std::size_t>(a)][i] * c;
    }
    return out;
}

double inner_product(const ScalarField& a, const ScalarField& b) {
    require_same_grid(a.grid(), b.grid());
    double s = 0.0;
    for (std::size_t i = 0; i < a.grid().size(); ++i)
        s += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    return a.grid().volume() * s;
}

double inner_product(const VectorField& a, const VectorField& b) {
    double s = 0.0;
    for (int c = 0; c < a.dim(); ++c) s += inner_product(a[c], b[c]);
    return s;
}

double inner_product(const SymTensorField& a, const SymTensorField& b) {
    double s = 0.0;
    for (std::size_t e = 0; e < a.entries().size(); ++e)
        s += a.weight(e) * inner_product(a.entries()[e], b.entries()[e]);
    return s;
}

double norm_l2(const ScalarField& f) { return std::sqrt(std::max(0.0, inner_product(f, f))); }
double norm_l2(const VectorField& v) { return std::sqrt(std::max(0.0, inner_product(v, v))); }
double norm_l2(const SymTensorField& t) { return std::sqrt(std::max(0.0, inner_product(t, t))); }

double norm_linf(const ScalarField& f) {
    const auto values = resample(f, 2);
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

double norm_linf(const VectorField& v) {
    std::vector<std::vector<double>> samples;
    for (const auto& c : v.components()) samples.push_back(resample(c, 2));
    return max_pointwise_root(samples, std::vector<double>(samples.size(), 1.0));
}

double norm_linf(const SymTensorField& t) {
    std::vector<std::vector<double>> samples;
    std::vector<double> weights;
    for (std::size_t e = 0; e < t.entries().size(); ++e) {
        samples.push_back(resample(t.entries()[e], 2));
        weights.push_back(t.weight(e));
    }
    return max_pointwise_root(samples, weights);
}

double norm_linf_gradient(const VectorField& u) {
    std::vector<std::vector<double>> samples;
    for (const auto& c : u.components())
        for (int a = 0; a < u.dim(); ++a) samples.push_back(resample(partial(c, a), 2));
    return max_pointwise_root(samples, std::vector<double>(samples.size(), 1.0));
}

double norm_l2h_linf_v(const ScalarField& f) {
    const Grid& g = f.grid();
    const auto values = resample(f, 2);
    const std::size_t line = static_cast<std::size_t>(2 * g.n());
    const double h = g.spacing() / 2.0;
    double s = 0.0;
    for (std::size_t start = 0; start < values.size(); start += line) {
        double m = 0.0;
        for (std::size_t j = 0; j < line; ++j) m = std::max(m, std::abs(values[start + j]));
        s += m * m;
    }
    return std::sqrt(s * std::pow(h, g.dim() - 1));
}

ScalarField dealias(const ScalarField& f) {
    const auto& keep = f.grid().wavevectors().retained;
    ScalarField out = f;
    for (std::size_t i = 0; i < keep.size(); ++i)
        if (!keep[i]) out[i] = cplx{};
    return out;
}

VectorField dealias(const VectorField& v) {
    VectorField out = v;
    for (int c = 0; c < v.dim(); ++c) out[c] = dealias(v[c]);
    return out;
}

SymTensorField dealias(const SymTensorField& t) {
    SymTensorField out = t;
    for (auto& e : out.entries()) e = dealias(e);
    return out;
}

ScalarField multiply(const ScalarField& f, const ScalarField& g) {
    require_same_grid(f.grid(), g.grid());
    const auto a = f.physical();
    const auto b = g.physical();
    std::vector<double> p(a.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = a[i] * b[i];
    return dealias(transform_forward(f.grid(), p));
}

void remove_mean(ScalarField& f) { f[0] = cplx{}; }
void remove_mean(VectorField& v) {
    for (int c = 0; c < v.dim(); ++c) remove_mean(v[c]);
}
void remove_mean(SymTensorField& t) {
    for (auto& e : t.entries()) remove_mean(e);
}

bool all_finite(const ScalarField& f) {
    for (const auto& c : f.coeffs())
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    return true;
}
bool all_finite(const VectorField& v) {
    return std::all_of(v.components().begin(), v.components().end(),
                       [](const ScalarField& f) { return all_finite(f); });
}
bool all_finite(const SymTensorField& t) {
    return std::all_of(t.entries().begin(), t.entries().end(), [](const ScalarField& f) { return all_finite(f); });
}

}  // namespace oldroyd::spectral
