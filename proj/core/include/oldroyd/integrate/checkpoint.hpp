#pragma once

#include <cstdint>
#include <filesystem>

#include "oldroyd/model/system.hpp"

namespace oldroyd::integrate {

// Little-endian layout:
//   "OLDB", u32 version, u32 d, u32 n, f64 Re, We, omega, alpha, f64 t, f64 box_length,
//   then the d velocity components and the d(d+1)/2 stored tau entries, each as
//   n^d (re, im) f64 pairs in flat index order.
inline constexpr std::uint32_t checkpoint_version = 1;

struct Checkpoint {
    model::State state;
    model::ModelParams params;
};

void write_checkpoint(const std::filesystem::path& path, const model::State& state,
                      const model::ModelParams& params);
Checkpoint read_checkpoint(const std::filesystem::path& path);

}  // namespace oldroyd::integrate
