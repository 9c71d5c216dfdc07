// Binary field snapshots: magic "SLAB1", then little-endian u64 n_points,
// f64 length, f64 time, n_points x f64 samples.
#pragma once

#include <filesystem>

#include "slab/grid.hpp"

namespace slab {

void write_snapshot(const std::filesystem::path& path, const WaveField& f);
WaveField read_snapshot(const std::filesystem::path& path);

}  // namespace slab
