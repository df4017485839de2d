#include "coxsolomon/cache.hpp"

#include <cstring>
#include <fstream>

namespace coxsolomon {

namespace {

template <typename T>
void put(std::ofstream& out, T v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::ifstream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) fail(errc::corrupt_cache, "unexpected end of cache file");
  return v;
}

}  // namespace

class CacheIO {
public:
  static const std::vector<std::int16_t>& perms(const CoxeterSystem& sys) { return sys.perm_; }
};

std::string cache_file_name(const CoxeterType& type) { return type.to_string() + ".coxs"; }

void write_cache(const CoxeterSystem& sys, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(errc::corrupt_cache, "cannot open cache file for writing: " + path);
  out.write("COXS", 4);
  put<std::uint32_t>(out, kCacheVersion);
  const std::string& spec = sys.spec();
  put<std::uint32_t>(out, static_cast<std::uint32_t>(spec.size()));
  out.write(spec.data(), static_cast<std::streamsize>(spec.size()));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(sys.rank()));
  for (const auto& row : sys.coxeter_matrix())
    for (int m : row) put<std::uint32_t>(out, static_cast<std::uint32_t>(m));
  put<std::uint64_t>(out, sys.order());
  put<std::uint32_t>(out, static_cast<std::uint32_t>(sys.num_positive_roots()));
  const auto& perms = CacheIO::perms(sys);
  out.write(reinterpret_cast<const char*>(perms.data()),
            static_cast<std::streamsize>(perms.size() * sizeof(std::int16_t)));
  if (!out) fail(errc::corrupt_cache, "short write to cache file: " + path);
}

CoxeterSystem load_cache(const std::string& path, const BuildOptions& opt) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::corrupt_cache, "cannot open cache file: " + path);
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, "COXS", 4) != 0)
    fail(errc::corrupt_cache, "bad magic in " + path);
  std::uint32_t version = get<std::uint32_t>(in);
  if (version != kCacheVersion)
    fail(errc::corrupt_cache, "cache format version " + std::to_string(version) +
                                  " is not supported (expected " +
                                  std::to_string(kCacheVersion) + ")");
  std::uint32_t spec_len = get<std::uint32_t>(in);
  if (spec_len > 4096) fail(errc::corrupt_cache, "implausible spec length");
  std::string spec(spec_len, '\0');
  in.read(spec.data(), spec_len);
  if (!in) fail(errc::corrupt_cache, "unexpected end of cache file");

  CoxeterType type = CoxeterType::parse(spec);
  std::uint32_t rank = get<std::uint32_t>(in);
  if (rank != static_cast<std::uint32_t>(type.rank()))
    fail(errc::corrupt_cache, "rank does not match the type spec");
  CoxMatrix expect = type.coxeter_matrix();
  for (std::uint32_t i = 0; i < rank; ++i)
    for (std::uint32_t j = 0; j < rank; ++j)
      if (get<std::uint32_t>(in) != static_cast<std::uint32_t>(expect[i][j]))
        fail(errc::corrupt_cache, "Coxeter matrix does not match the type spec");
  std::uint64_t order = get<std::uint64_t>(in);
  if (order != type.order()) fail(errc::corrupt_cache, "stored order does not match the type");
  std::uint32_t npos = get<std::uint32_t>(in);
  if (npos != static_cast<std::uint32_t>(type.num_positive_roots()))
    fail(errc::corrupt_cache, "stored root count does not match the type");

  std::vector<std::int16_t> perms(static_cast<std::size_t>(order) * npos);
  in.read(reinterpret_cast<char*>(perms.data()),
          static_cast<std::streamsize>(perms.size() * sizeof(std::int16_t)));
  if (!in) fail(errc::corrupt_cache, "cache file is truncated");
  char extra;
  if (in.read(&extra, 1)) fail(errc::corrupt_cache, "trailing bytes after element store");

  return CoxeterSystem::from_store(type, std::move(perms), opt);
}

}  // namespace coxsolomon
