#ifndef COXSOLOMON_CACHE_HPP
#define COXSOLOMON_CACHE_HPP

#include "coxsolomon/system.hpp"

#include <string>

namespace coxsolomon {

/// On-disk group cache, little-endian:
///   magic "COXS" | u32 version | u32 spec length | spec bytes
///   | u32 rank | rank*rank u32 Coxeter matrix | u64 order | u32 npos
///   | order * npos i16 signed root images.
/// The loader re-validates every structural invariant (signed permutations,
/// no duplicates, closure under the generators, lengths, unique longest
/// element) before the store is trusted.
constexpr std::uint32_t kCacheVersion = 1;

std::string cache_file_name(const CoxeterType& type);

void write_cache(const CoxeterSystem& sys, const std::string& path);
CoxeterSystem load_cache(const std::string& path, const BuildOptions& opt = {});

}  // namespace coxsolomon

#endif
