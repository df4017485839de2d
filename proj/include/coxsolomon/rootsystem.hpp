#ifndef COXSOLOMON_ROOTSYSTEM_HPP
#define COXSOLOMON_ROOTSYSTEM_HPP

#include "coxsolomon/ctype.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace coxsolomon {

/// Action of the simple reflections on the positive roots.
///
/// Roots are indexed 0..npos-1 with the simple root of generator s at the
/// index stored in `simple_root[s]`.  Entries are signed one-based indices:
/// action[s][r] == +(k+1) means s sends root r to root k, -(k+1) means it
/// sends it to the negative of root k.
struct RootAction {
  int npos = 0;
  std::vector<int> simple_root;               // per generator
  std::vector<std::vector<std::int32_t>> action;  // [gen][root], signed one-based
  std::vector<std::string> root_labels;       // exact coordinates (or dihedral index)
};

/// Build the positive-root action tables for a finite type.  Crystallographic
/// and H components use exact vectors in the simple-root basis; I2(m)
/// components use the rotation-index model, so no trigonometric field
/// arithmetic is involved.
RootAction build_root_action(const CoxeterType& type);

}  // namespace coxsolomon

#endif
