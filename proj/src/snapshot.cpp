#include "slab/snapshot.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace slab {

namespace {

static_assert(std::endian::native == std::endian::little,
              "snapshot i/o assumes a little-endian host");

constexpr char kMagic[5] = {'S', 'L', 'A', 'B', '1'};

template <class T>
void write_raw(std::ofstream& os, const T& v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T read_raw(std::ifstream& is) {
  T v;
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!is) throw std::runtime_error("snapshot: truncated file");
  return v;
}

}  // namespace

void write_snapshot(const std::filesystem::path& path, const WaveField& f) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("snapshot: cannot open " + path.string());
  os.write(kMagic, sizeof(kMagic));
  write_raw(os, static_cast<std::uint64_t>(f.grid.n()));
  write_raw(os, f.grid.length());
  write_raw(os, f.time);
  os.write(reinterpret_cast<const char*>(f.samples.data()),
           static_cast<std::streamsize>(f.samples.size() * sizeof(double)));
  if (!os) throw std::runtime_error("snapshot: write failed for " + path.string());
}

WaveField read_snapshot(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("snapshot: cannot open " + path.string());
  char magic[5];
  is.read(magic, sizeof(magic));
  if (!is || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
    throw std::runtime_error("snapshot: bad magic in " + path.string());
  const auto n = read_raw<std::uint64_t>(is);
  const auto length = read_raw<double>(is);
  const auto time = read_raw<double>(is);
  std::vector<double> samples(n);
  is.read(reinterpret_cast<char*>(samples.data()),
          static_cast<std::streamsize>(n * sizeof(double)));
  if (!is) throw std::runtime_error("snapshot: truncated samples in " + path.string());
  return WaveField(Grid1D(n, length), std::move(samples), time);
}

}  // namespace slab
