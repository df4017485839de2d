#ifndef COXSOLOMON_SYSTEM_HPP
#define COXSOLOMON_SYSTEM_HPP

#include "coxsolomon/ctype.hpp"
#include "coxsolomon/errors.hpp"
#include "coxsolomon/genset.hpp"
#include "coxsolomon/rootsystem.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace coxsolomon {

using ElementId = std::uint32_t;

struct BuildOptions {
  std::uint64_t cap = 1'000'000;  // hard error above this many elements
};

/// A fully enumerated finite Coxeter group.
///
/// Every element is stored as the signed permutation it induces on the
/// positive roots; the element id doubles as a handle everywhere else in the
/// library.  Ids are assigned in breadth-first order over the Cayley graph,
/// so they are sorted by length, with the identity at id 0.  Instances are
/// immutable after construction and safe to share across threads.
class CoxeterSystem {
public:
  /// Empty shell; only meaningful once assigned from build() or from_store().
  CoxeterSystem() = default;

  static CoxeterSystem build(const std::string& spec, const BuildOptions& opt = {});
  static CoxeterSystem build(const CoxeterType& type, const BuildOptions& opt = {});

  const CoxeterType& type() const { return type_; }
  const std::string& spec() const { return spec_; }
  int rank() const { return rank_; }
  std::uint64_t order() const { return order_; }
  int num_positive_roots() const { return npos_; }
  const CoxMatrix& coxeter_matrix() const { return cox_; }
  const std::vector<std::string>& root_labels() const { return roots_.root_labels; }
  std::vector<GenSet> component_partition() const { return type_.component_partition(); }

  ElementId identity() const { return 0; }
  ElementId longest_element() const { return longest_; }
  ElementId generator(int s) const { return rmult_[s]; }
  /// Index of the generator equal to w, or -1.
  int as_generator(ElementId w) const;

  int length(ElementId w) const { return len_[w]; }
  ElementId mult_gen(ElementId w, int s) const { return rmult_[std::size_t(w) * rank_ + s]; }
  ElementId inverse(ElementId w) const { return inv_[w]; }
  ElementId multiply(ElementId a, ElementId b) const;
  ElementId conjugate_by_gen(ElementId w, int s) const {  // s w s
    return mult_gen(inverse(mult_gen(inv_[w], s)), s);
  }
  ElementId conjugate(ElementId w, ElementId g) const {  // g^-1 w g
    return multiply(multiply(inv_[g], w), g);
  }

  bool is_descent(ElementId w, int s) const {  // ell(ws) < ell(w)
    return perm_[std::size_t(w) * npos_ + roots_.simple_root[s]] < 0;
  }
  GenSet descent_set(ElementId w) const;
  GenSet ascent_set(ElementId w) const { return GenSet::all(rank_) - descent_set(w); }

  std::vector<int> word(ElementId w) const;  // reduced, deterministic
  ElementId from_word(std::span<const int> letters) const;

  /// Signed one-based image of positive root r under w.
  std::int32_t root_image(ElementId w, int r) const { return perm_[std::size_t(w) * npos_ + r]; }
  std::span<const std::int16_t> root_permutation(ElementId w) const {
    return {perm_.data() + std::size_t(w) * npos_, std::size_t(npos_)};
  }

  /// Unique factorization w = w^I * w_I with w^I in X_I, w_I in W_I and
  /// additive lengths.
  std::pair<ElementId, ElementId> parabolic_components(ElementId w, GenSet I) const;
  bool in_parabolic(ElementId w, GenSet I) const;
  /// Elements of the standard parabolic W_I, ascending ids.
  std::vector<ElementId> parabolic_elements(GenSet I) const;
  /// Generators appearing in a reduced word for w (independent of the word).
  GenSet support(ElementId w) const;

  /// Rebuild a system from a raw element store (cache loading); validates the
  /// store against the type before accepting it.
  static CoxeterSystem from_store(const CoxeterType& type, std::vector<std::int16_t> perm,
                                  const BuildOptions& opt = {});

private:
  void init_from_perms(const BuildOptions& opt, bool trust_bfs_lengths,
                       std::vector<std::uint16_t> bfs_lengths);

  CoxeterType type_;
  std::string spec_;
  int rank_ = 0;
  int npos_ = 0;
  CoxMatrix cox_;
  RootAction roots_;
  std::uint64_t order_ = 0;
  ElementId longest_ = 0;

  std::vector<std::int16_t> perm_;       // |W| x npos signed one-based images
  std::vector<std::uint16_t> len_;       // |W|
  std::vector<ElementId> rmult_;         // |W| x rank
  std::vector<ElementId> inv_;           // |W|
  std::vector<std::uint8_t> parent_gen_; // min right descent; 0xff at identity
  std::unordered_map<std::string, ElementId> index_;  // canonical prefix -> id

  std::string key_of(const std::int16_t* perm_row) const;
  friend class CacheIO;
};

/// Element handle carrying its system; guards against mixing systems in the
/// public API (internals work on raw ids).
struct GroupElement {
  const CoxeterSystem* sys = nullptr;
  ElementId id = 0;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.sys == b.sys && a.id == b.id;
  }
};

GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);
int length(const GroupElement& a);
GenSet descent_set(const GroupElement& a);
GenSet ascent_set(const GroupElement& a);

}  // namespace coxsolomon

#endif
