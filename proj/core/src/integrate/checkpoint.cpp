#include "oldroyd/integrate/checkpoint.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include "oldroyd/errors.hpp"

namespace oldroyd::integrate {

namespace {

constexpr char magic[4] = {'O', 'L', 'D', 'B'};

template <typename U>
void put_le(std::ostream& out, U v) {
    unsigned char bytes[sizeof(U)];
    for (std::size_t i = 0; i < sizeof(U); ++i) bytes[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xFF);
    out.write(reinterpret_cast<const char*>(bytes), sizeof(U));
}

template <typename U>
U get_le(std::istream& in) {
    unsigned char bytes[sizeof(U)];
    in.read(reinterpret_cast<char*>(bytes), sizeof(U));
    if (!in) throw IoError("checkpoint truncated");
    U v = 0;
    for (std::size_t i = 0; i < sizeof(U); ++i) v |= static_cast<U>(bytes[i]) << (8 * i);
    return v;
}

void put_f64(std::ostream& out, double v) { put_le(out, std::bit_cast<std::uint64_t>(v)); }
double get_f64(std::istream& in) { return std::bit_cast<double>(get_le<std::uint64_t>(in)); }

void put_field(std::ostream& out, const spectral::ScalarField& f) {
    for (const auto& c : f.coeffs()) {
        put_f64(out, c.real());
        put_f64(out, c.imag());
    }
}

void get_field(std::istream& in, spectral::ScalarField& f) {
    for (auto& c : f.coeffs()) {
        const double re = get_f64(in);
        const double im = get_f64(in);
        c = {re, im};
    }
}

}  // namespace

void write_checkpoint(const std::filesystem::path& path, const model::State& state,
                      const model::ModelParams& params) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open checkpoint for writing: " + path.string());
    const auto& grid = state.u.grid();
    out.write(magic, 4);
    put_le<std::uint32_t>(out, checkpoint_version);
    put_le<std::uint32_t>(out, static_cast<std::uint32_t>(grid.dim()));
    put_le<std::uint32_t>(out, static_cast<std::uint32_t>(grid.n()));
    put_f64(out, params.Re);
    put_f64(out, params.We);
    put_f64(out, params.omega);
    put_f64(out, params.alpha);
    put_f64(out, state.t);
    put_f64(out, grid.box_length());
    for (const auto& c : state.u.components()) put_field(out, c);
    for (const auto& e : state.tau.entries()) put_field(out, e);
    if (!out) throw IoError("failed writing checkpoint: " + path.string());
}

Checkpoint read_checkpoint(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open checkpoint: " + path.string());
    char head[4];
    in.read(head, 4);
    if (!in || std::memcmp(head, magic, 4) != 0) throw IoError("not a checkpoint file: " + path.string());
    const auto version = get_le<std::uint32_t>(in);
    if (version != checkpoint_version) throw IoError("unsupported checkpoint version");
    const auto d = static_cast<int>(get_le<std::uint32_t>(in));
    const auto n = static_cast<int>(get_le<std::uint32_t>(in));
    const double Re = get_f64(in);
    const double We = get_f64(in);
    const double omega = get_f64(in);
    const double alpha = get_f64(in);
    const double t = get_f64(in);
    const double length = get_f64(in);
    try {
        const spectral::Grid grid(d, n, length);
        Checkpoint cp{model::State::zero(grid), model::ModelParams(Re, We, omega, alpha, d)};
        cp.state.t = t;
        for (int c = 0; c < d; ++c) get_field(in, cp.state.u[c]);
        for (auto& e : cp.state.tau.entries()) get_field(in, e);
        return cp;
    } catch (const ConfigError& e) {
        throw IoError(std::string("corrupt checkpoint header: ") + e.what());
    }
}

}  // namespace oldroyd::integrate
