#include "oldroyd/spectral/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

namespace oldroyd::spectral {

namespace {

class PlanCache {
public:
    ~PlanCache() {
        for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
    }

    fftw_plan get(int dim, int n, int sign) {
        std::lock_guard<std::mutex> lock(mutex_);
        const auto key = std::make_tuple(dim, n, sign);
        if (auto it = plans_.find(key); it != plans_.end()) return it->second;
        std::size_t size = 1;
        int dims[3];
        for (int a = 0; a < dim; ++a) {
            dims[a] = n;
            size *= static_cast<std::size_t>(n);
        }
        std::vector<cplx> in(size), out(size);
        fftw_plan plan = fftw_plan_dft(dim, dims, reinterpret_cast<fftw_complex*>(in.data()),
                                       reinterpret_cast<fftw_complex*>(out.data()), sign,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans_.emplace(key, plan);
        return plan;
    }

private:
    std::mutex mutex_;
    std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

PlanCache& cache() {
    static PlanCache instance;
    return instance;
}

void execute(const Grid& grid, int sign, std::span<const cplx> in, std::span<cplx> out) {
    fftw_plan plan = cache().get(grid.dim(), grid.n(), sign);
    if (in.data() == out.data()) {
        std::vector<cplx> copy(in.begin(), in.end());
        fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(copy.data()),
                         reinterpret_cast<fftw_complex*>(out.data()));
        return;
    }
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in.data())),
                     reinterpret_cast<fftw_complex*>(out.data()));
}

}  // namespace

void forward(const Grid& grid, std::span<const cplx> physical, std::span<cplx> spectral) {
    execute(grid, FFTW_FORWARD, physical, spectral);
    const double scale = 1.0 / static_cast<double>(grid.size());
    for (auto& c : spectral) c *= scale;
}

void inverse(const Grid& grid, std::span<const cplx> spectral, std::span<cplx> physical) {
    execute(grid, FFTW_BACKWARD, spectral, physical);
}

ScalarField transform_forward(const Grid& grid, std::span<const double> physical) {
    std::vector<cplx> buf(physical.begin(), physical.end());
    std::vector<cplx> out(grid.size());
    forward(grid, buf, out);
    return ScalarField(grid, std::move(out));
}

std::vector<double> transform_inverse(const ScalarField& field) {
    const Grid& grid = field.grid();
    std::vector<cplx> out(grid.size());
    inverse(grid, field.coeffs(), out);
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = out[i].real();
    return values;
}

std::vector<double> resample(const ScalarField& field, int factor) {
    const Grid& g = field.grid();
    if (factor == 1) return field.physical();
    const Grid fine(g.dim(), g.n() * factor, g.box_length());
    std::vector<cplx> coeffs(fine.size(), cplx{});
    const int d = g.dim();
    for (std::size_t flat = 0; flat < g.size(); ++flat) {
        const cplx c = field[flat];
        if (c == cplx{}) continue;
        const auto idx = g.multi_index(flat);
        int nyq_axes[3];
        int n_nyq = 0;
        std::array<int, 3> m{0, 0, 0};
        for (int a = 0; a < d; ++a) {
            const int i = idx[static_cast<std::size_t>(a)];
            m[static_cast<std::size_t>(a)] = g.signed_index(i);
            if (g.is_nyquist(i)) nyq_axes[n_nyq++] = a;
        }
        const double share = 1.0 / static_cast<double>(1 << n_nyq);
        for (int mask = 0; mask < (1 << n_nyq); ++mask) {
            auto mm = m;
            for (int b = 0; b < n_nyq; ++b)
                if (mask & (1 << b)) mm[static_cast<std::size_t>(nyq_axes[b])] *= -1;
            coeffs[fine.flat_from_signed(mm)] += share * c;
        }
    }
    std::vector<cplx> out(fine.size());
    inverse(fine, coeffs, out);
    std::vector<double> values(fine.size());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = out[i].real();
    return values;
}

}  // namespace oldroyd::spectral
