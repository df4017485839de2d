#include "coxsolomon/system.hpp"

#include <algorithm>
#include <cstring>

namespace coxsolomon {

namespace {

// Compose: image of root r under w*s given s's action table and w's row.
inline std::int16_t compose_entry(const std::int16_t* wrow, std::int32_t s_img) {
  if (s_img > 0) return wrow[s_img - 1];
  return static_cast<std::int16_t>(-wrow[-s_img - 1]);
}

}  // namespace

std::string CoxeterSystem::key_of(const std::int16_t* perm_row) const {
  std::string key(std::size_t(rank_) * sizeof(std::int16_t), '\0');
  for (int s = 0; s < rank_; ++s) {
    std::int16_t v = perm_row[roots_.simple_root[s]];
    std::memcpy(key.data() + std::size_t(s) * sizeof(std::int16_t), &v, sizeof(std::int16_t));
  }
  return key;
}

CoxeterSystem CoxeterSystem::build(const std::string& spec, const BuildOptions& opt) {
  return build(CoxeterType::parse(spec), opt);
}

CoxeterSystem CoxeterSystem::build(const CoxeterType& type, const BuildOptions& opt) {
  CoxeterSystem sys;
  sys.type_ = type;
  sys.spec_ = type.to_string();
  sys.rank_ = type.rank();
  sys.cox_ = type.coxeter_matrix();

  const std::uint64_t expected = type.order();
  if (expected > opt.cap)
    fail(errc::cap_exceeded, sys.spec_ + " has " + std::to_string(expected) +
                                 " elements, above the cap of " + std::to_string(opt.cap) +
                                 " (raise the cap or use fixture mode)");

  sys.roots_ = build_root_action(type);
  sys.npos_ = sys.roots_.npos;
  if (expected > (std::uint64_t(1) << 31) ||
      std::uint64_t(2) * expected * std::uint64_t(sys.npos_) > (std::uint64_t(1) << 31))
    fail(errc::cap_exceeded, sys.spec_ + ": element store would exceed the 2 GiB budget");

  const int rank = sys.rank_;
  const int npos = sys.npos_;
  const std::size_t n = static_cast<std::size_t>(expected);

  sys.perm_.reserve(n * npos);
  sys.len_.reserve(n);
  sys.rmult_.assign(n * std::max(rank, 1), 0);
  sys.index_.reserve(n * 2);

  // Identity.
  for (int r = 0; r < npos; ++r) sys.perm_.push_back(static_cast<std::int16_t>(r + 1));
  sys.len_.push_back(0);
  sys.index_.emplace(sys.key_of(sys.perm_.data()), 0);

  // Breadth-first over the Cayley graph by right multiplication; ids come out
  // sorted by length and the whole walk is deterministic.
  std::vector<std::int16_t> scratch(npos);
  for (ElementId w = 0; w < sys.len_.size(); ++w) {
    const std::size_t base = std::size_t(w) * npos;
    for (int s = 0; s < rank; ++s) {
      const auto& act = sys.roots_.action[s];
      const std::int16_t* wrow = sys.perm_.data() + base;
      for (int r = 0; r < npos; ++r) scratch[r] = compose_entry(wrow, act[r]);
      std::string key = sys.key_of(scratch.data());
      auto [it, inserted] = sys.index_.try_emplace(std::move(key), ElementId(sys.len_.size()));
      if (inserted) {
        if (sys.len_.size() >= n) fail(errc::internal, "enumeration exceeded the expected order");
        sys.perm_.insert(sys.perm_.end(), scratch.begin(), scratch.end());
        sys.len_.push_back(static_cast<std::uint16_t>(sys.len_[w] + 1));
      }
      sys.rmult_[std::size_t(w) * rank + s] = it->second;
    }
  }
  if (sys.len_.size() != n) fail(errc::internal, "enumeration produced the wrong order");

  sys.init_from_perms(opt, true, {});
  return sys;
}

CoxeterSystem CoxeterSystem::from_store(const CoxeterType& type, std::vector<std::int16_t> perm,
                                        const BuildOptions& opt) {
  CoxeterSystem sys;
  sys.type_ = type;
  sys.spec_ = type.to_string();
  sys.rank_ = type.rank();
  sys.cox_ = type.coxeter_matrix();

  const std::uint64_t expected = type.order();
  if (expected > opt.cap) fail(errc::cap_exceeded, sys.spec_ + " is above the element cap");
  sys.roots_ = build_root_action(type);
  sys.npos_ = sys.roots_.npos;
  const std::size_t n = static_cast<std::size_t>(expected);
  if (perm.size() != n * std::size_t(sys.npos_))
    fail(errc::corrupt_cache, "element store has the wrong size");
  sys.perm_ = std::move(perm);

  const int npos = sys.npos_;
  // Validate each row as a signed permutation of the roots, and recover
  // lengths as the count of sign flips.
  std::vector<bool> seen(npos);
  sys.len_.resize(n);
  for (std::size_t w = 0; w < n; ++w) {
    std::fill(seen.begin(), seen.end(), false);
    int negs = 0;
    for (int r = 0; r < npos; ++r) {
      std::int16_t v = sys.perm_[w * npos + r];
      int idx = (v > 0 ? v : -v) - 1;
      if (idx < 0 || idx >= npos || seen[idx])
        fail(errc::corrupt_cache, "element row is not a signed root permutation");
      seen[idx] = true;
      if (v < 0) ++negs;
    }
    if (negs > 0xffff) fail(errc::corrupt_cache, "length overflow");
    sys.len_[w] = static_cast<std::uint16_t>(negs);
  }
  if (sys.len_[0] != 0) fail(errc::corrupt_cache, "identity is not at id 0");
  for (std::size_t w = 1; w < n; ++w)
    if (sys.len_[w] < sys.len_[w - 1]) fail(errc::corrupt_cache, "ids are not sorted by length");

  // Rebuild the canonical index; duplicates mean a corrupt store.
  sys.index_.reserve(n * 2);
  for (std::size_t w = 0; w < n; ++w) {
    auto [it, inserted] = sys.index_.emplace(sys.key_of(sys.perm_.data() + w * npos), ElementId(w));
    if (!inserted) fail(errc::corrupt_cache, "duplicate element in store");
  }

  // Rebuild the multiplication table by composing stored permutations.
  const int rank = sys.rank_;
  sys.rmult_.assign(n * std::max(rank, 1), 0);
  std::vector<std::int16_t> scratch(npos);
  for (std::size_t w = 0; w < n; ++w) {
    const std::int16_t* wrow = sys.perm_.data() + w * npos;
    for (int s = 0; s < rank; ++s) {
      const auto& act = sys.roots_.action[s];
      for (int r = 0; r < npos; ++r) scratch[r] = compose_entry(wrow, act[r]);
      auto it = sys.index_.find(sys.key_of(scratch.data()));
      if (it == sys.index_.end()) fail(errc::corrupt_cache, "store is not closed under the generators");
      sys.rmult_[w * rank + s] = it->second;
    }
  }

  sys.init_from_perms(opt, false, {});
  return sys;
}

void CoxeterSystem::init_from_perms(const BuildOptions&, bool /*trust_bfs_lengths*/,
                                    std::vector<std::uint16_t>) {
  const std::size_t n = len_.size();
  order_ = n;
  const int npos = npos_;

  // Inverses: invert the signed permutation and look the key up.
  inv_.resize(n);
  std::vector<std::int16_t> invrow(npos);
  for (std::size_t w = 0; w < n; ++w) {
    const std::int16_t* row = perm_.data() + w * npos;
    for (int r = 0; r < npos; ++r) {
      std::int16_t v = row[r];
      if (v > 0) invrow[v - 1] = static_cast<std::int16_t>(r + 1);
      else invrow[-v - 1] = static_cast<std::int16_t>(-(r + 1));
    }
    auto it = index_.find(key_of(invrow.data()));
    if (it == index_.end()) fail(errc::corrupt_cache, "store is not closed under inversion");
    inv_[w] = it->second;
  }

  // Canonical word structure: strip the smallest right descent.
  parent_gen_.assign(n, 0xff);
  for (std::size_t w = 1; w < n; ++w) {
    for (int s = 0; s < rank_; ++s) {
      if (perm_[w * npos + roots_.simple_root[s]] < 0) {
        parent_gen_[w] = static_cast<std::uint8_t>(s);
        break;
      }
    }
    if (parent_gen_[w] == 0xff) fail(errc::corrupt_cache, "non-identity element with no descent");
  }

  // Lengths must equal the number of roots sent negative (and BFS depth).
  for (std::size_t w = 0; w < n; ++w) {
    int negs = 0;
    const std::int16_t* row = perm_.data() + w * npos;
    for (int r = 0; r < npos; ++r) negs += row[r] < 0;
    if (negs != len_[w]) fail(errc::internal, "length disagrees with inversion count");
  }

  // The longest element: unique, with every generator a descent.
  std::size_t top = 0;
  for (std::size_t w = 1; w < n; ++w)
    if (len_[w] > len_[top]) top = w;
  if (len_[top] != npos) fail(errc::internal, "longest element has unexpected length");
  for (std::size_t w = 0; w < n; ++w)
    if (w != top && len_[w] == len_[top]) fail(errc::internal, "longest element is not unique");
  longest_ = static_cast<ElementId>(top);
}

int CoxeterSystem::as_generator(ElementId w) const {
  if (len_[w] != 1) return -1;
  for (int s = 0; s < rank_; ++s)
    if (generator(s) == w) return s;
  return -1;
}

GenSet CoxeterSystem::descent_set(ElementId w) const {
  GenSet d;
  const std::int16_t* row = perm_.data() + std::size_t(w) * npos_;
  for (int s = 0; s < rank_; ++s)
    if (row[roots_.simple_root[s]] < 0) d = d.with(s);
  return d;
}

std::vector<int> CoxeterSystem::word(ElementId w) const {
  std::vector<int> letters;
  letters.reserve(len_[w]);
  while (w != 0) {
    int s = parent_gen_[w];
    letters.push_back(s);
    w = mult_gen(w, s);
  }
  std::reverse(letters.begin(), letters.end());
  return letters;
}

ElementId CoxeterSystem::from_word(std::span<const int> letters) const {
  ElementId w = 0;
  for (int s : letters) w = mult_gen(w, s);
  return w;
}

ElementId CoxeterSystem::multiply(ElementId a, ElementId b) const {
  // Walk a through a reduced word of b; length(b) table lookups.
  int k = len_[b];
  if (k == 0) return a;
  // Collect letters of b from the right, then apply left-to-right.
  std::vector<int> letters;
  letters.reserve(k);
  ElementId v = b;
  while (v != 0) {
    int s = parent_gen_[v];
    letters.push_back(s);
    v = mult_gen(v, s);
  }
  ElementId w = a;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) w = mult_gen(w, *it);
  return w;
}

std::pair<ElementId, ElementId> CoxeterSystem::parabolic_components(ElementId w, GenSet I) const {
  ElementId u = w;
  std::vector<int> stripped;
  while (true) {
    int found = -1;
    const std::int16_t* row = perm_.data() + std::size_t(u) * npos_;
    for (int s : I.elements())
      if (row[roots_.simple_root[s]] < 0) {
        found = s;
        break;
      }
    if (found < 0) break;
    stripped.push_back(found);
    u = mult_gen(u, found);
  }
  // w = u * (s_k ... s_1) with s_i the i-th stripped letter.
  ElementId v = 0;
  for (auto it = stripped.rbegin(); it != stripped.rend(); ++it) v = mult_gen(v, *it);
  return {u, v};
}

bool CoxeterSystem::in_parabolic(ElementId w, GenSet I) const {
  ElementId u = w;
  while (u != 0) {
    int found = -1;
    const std::int16_t* row = perm_.data() + std::size_t(u) * npos_;
    for (int s : I.elements())
      if (row[roots_.simple_root[s]] < 0) {
        found = s;
        break;
      }
    if (found < 0) return false;
    u = mult_gen(u, found);
  }
  return true;
}

std::vector<ElementId> CoxeterSystem::parabolic_elements(GenSet I) const {
  std::vector<ElementId> out{0};
  std::vector<bool> seen(order_, false);
  seen[0] = true;
  auto gens = I.elements();
  for (std::size_t q = 0; q < out.size(); ++q) {
    ElementId w = out[q];
    for (int s : gens) {
      ElementId u = mult_gen(w, s);
      if (!seen[u]) {
        seen[u] = true;
        out.push_back(u);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

GenSet CoxeterSystem::support(ElementId w) const {
  GenSet sup;
  while (w != 0) {
    int s = parent_gen_[w];
    sup = sup.with(s);
    w = mult_gen(w, s);
  }
  return sup;
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  if (a.sys != b.sys) fail(errc::mixed_systems, "elements belong to different systems");
  return {a.sys, a.sys->multiply(a.id, b.id)};
}

GroupElement inverse(const GroupElement& a) { return {a.sys, a.sys->inverse(a.id)}; }
int length(const GroupElement& a) { return a.sys->length(a.id); }
GenSet descent_set(const GroupElement& a) { return a.sys->descent_set(a.id); }
GenSet ascent_set(const GroupElement& a) { return a.sys->ascent_set(a.id); }

}  // namespace coxsolomon
