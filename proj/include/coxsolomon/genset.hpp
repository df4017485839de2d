#ifndef COXSOLOMON_GENSET_HPP
#define COXSOLOMON_GENSET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace coxsolomon {

/// Subset of the simple generators {0, ..., rank-1}, stored as a bitmask.
/// Generators are printed 1-based ("124" means {0,1,3}) to match the usual
/// diagram labelling.
class GenSet {
  std::uint32_t bits_ = 0;

public:
  constexpr GenSet() = default;
  constexpr explicit GenSet(std::uint32_t mask) : bits_(mask) {}

  static constexpr GenSet all(int rank) {
    return GenSet(rank >= 32 ? ~std::uint32_t(0) : ((std::uint32_t(1) << rank) - 1));
  }
  static GenSet of(std::initializer_list<int> gens) {
    GenSet s;
    for (int g : gens) s.bits_ |= (std::uint32_t(1) << g);
    return s;
  }

  constexpr std::uint32_t mask() const { return bits_; }
  constexpr bool contains(int g) const { return (bits_ >> g) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }

  constexpr GenSet with(int g) const { return GenSet(bits_ | (std::uint32_t(1) << g)); }
  constexpr GenSet without(int g) const { return GenSet(bits_ & ~(std::uint32_t(1) << g)); }

  friend constexpr GenSet operator|(GenSet a, GenSet b) { return GenSet(a.bits_ | b.bits_); }
  friend constexpr GenSet operator&(GenSet a, GenSet b) { return GenSet(a.bits_ & b.bits_); }
  friend constexpr GenSet operator-(GenSet a, GenSet b) { return GenSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(GenSet a, GenSet b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(GenSet a, GenSet b) { return a.bits_ != b.bits_; }
  friend constexpr bool operator<(GenSet a, GenSet b) { return a.bits_ < b.bits_; }

  constexpr bool subset_of(GenSet other) const { return (bits_ & ~other.bits_) == 0; }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  /// "12", "134", ... (1-based digits); "{}" for the empty set. Falls back to
  /// a comma form for ranks above 9.
  std::string label(int rank = 9) const {
    if (bits_ == 0) return "{}";
    std::string out;
    if (rank <= 9) {
      for (int g : elements()) out += char('1' + g);
    } else {
      out = "{";
      bool first = true;
      for (int g : elements()) {
        if (!first) out += ",";
        out += std::to_string(g + 1);
        first = false;
      }
      out += "}";
    }
    return out;
  }
};

/// All subsets of all(rank) in (cardinality, bitmask) order.
std::vector<GenSet> subsets_by_size(int rank);

}  // namespace coxsolomon

#endif
