#include <array>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <string>

#include "latlab/arith.hpp"
#include "latlab/error.hpp"

namespace latlab::arith {

namespace {

constexpr std::array<char, 8> kMagic = {'L', 'A', 'T', 'L', 'A', 'B', '0', '1'};

void put_u64(std::ostream& out, std::uint64_t v) {
  std::array<char, 8> b{};
  for (int i = 0; i < 8; ++i) b[static_cast<std::size_t>(i)] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b.data(), b.size());
}

std::uint64_t get_u64(std::istream& in) {
  std::array<unsigned char, 8> b{};
  in.read(reinterpret_cast<char*>(b.data()), b.size());
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[static_cast<std::size_t>(i)];
  return v;
}

void put_u32_array(std::ostream& out, std::span<const std::uint32_t> values) {
  std::vector<char> buf(values.size() * 4);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::uint32_t v = values[i];
    for (int k = 0; k < 4; ++k) buf[4 * i + static_cast<std::size_t>(k)] = static_cast<char>((v >> (8 * k)) & 0xff);
  }
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

std::vector<std::uint32_t> get_u32_array(std::istream& in, std::uint64_t count) {
  std::vector<unsigned char> buf(static_cast<std::size_t>(count) * 4);
  in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  std::vector<std::uint32_t> out(static_cast<std::size_t>(count) + 1, 0);
  for (std::size_t i = 0; i < count; ++i) {
    const unsigned char* p = &buf[4 * i];
    out[i + 1] = static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
                 (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
  }
  return out;
}

}  // namespace

void write_sieve_cache(const SieveTable& table, const std::filesystem::path& file) {
  std::error_code ec;
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path(), ec);
  // Write to a temporary name first so a crash never leaves a truncated cache.
  const auto tmp = std::filesystem::path(file.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write sieve cache " + tmp.string());
    out.write(kMagic.data(), kMagic.size());
    put_u64(out, table.limit());
    put_u32_array(out, table.r_values().subspan(1));
    put_u32_array(out, table.d_values().subspan(1));
    if (!out) throw IoError("short write to sieve cache " + tmp.string());
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) throw IoError("cannot move sieve cache into place: " + ec.message());
}

SieveTable read_sieve_cache(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw IoError("cannot open sieve cache " + file.string());
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw IoError("bad sieve cache header in " + file.string());
  const std::uint64_t n = get_u64(in);
  if (!in || n < 1 || n > kDefaultSieveCap) throw IoError("bad sieve cache length in " + file.string());
  auto r = get_u32_array(in, n);
  auto d = get_u32_array(in, n);
  if (!in) throw IoError("truncated sieve cache " + file.string());
  return SieveTable(std::move(r), std::move(d));
}

std::filesystem::path default_cache_dir() {
  if (const char* dir = std::getenv("LATLAB_CACHE_DIR"); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "latlab";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "latlab";
  }
  return std::filesystem::temp_directory_path() / "latlab";
}

std::filesystem::path cache_file_for(const std::filesystem::path& dir, std::uint64_t limit) {
  return dir / ("sieve_" + std::to_string(limit) + ".bin");
}

SieveTable load_or_build_sieve(std::uint64_t limit, const std::filesystem::path& dir,
                               bool* cache_hit) {
  const auto file = cache_file_for(dir, limit);
  if (std::filesystem::exists(file)) {
    auto table = read_sieve_cache(file);
    if (table.limit() == limit) {
      if (cache_hit) *cache_hit = true;
      return table;
    }
  }
  if (cache_hit) *cache_hit = false;
  auto table = build_sieve(limit);
  write_sieve_cache(table, file);
  return table;
}

}  // namespace latlab::arith
