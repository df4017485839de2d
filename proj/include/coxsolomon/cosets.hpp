#ifndef COXSOLOMON_COSETS_HPP
#define COXSOLOMON_COSETS_HPP

#include "coxsolomon/system.hpp"

#include <tuple>
#include <vector>

namespace coxsolomon {

/// X_I: the minimal-length coset representatives of W / W_I, i.e. the
/// elements with D(w) contained in S - I.  Sorted by (length, id).
struct CosetSection {
  GenSet I;
  std::vector<ElementId> reps;
};

/// X_IJ = X_I^{-1} cap X_J: minimal-length double coset representatives of
/// W_I \ W / W_J.
struct DoubleCosetSection {
  GenSet I, J;
  std::vector<ElementId> reps;
};

CosetSection minimal_coset_reps(const CoxeterSystem& sys, GenSet I);
DoubleCosetSection double_coset_reps(const CoxeterSystem& sys, GenSet I, GenSet J);

/// X^I_{I cap K} = W_I cap X_K: minimal reps of W_{I cap K} in W_I.
std::vector<ElementId> cross_section_in_parabolic(const CoxeterSystem& sys, GenSet I, GenSet K);

/// Alternative inductive construction X_I = X_K X^K_I for I inside K = S - {s};
/// used as a memory-friendly route and cross-checked against the filter.
std::vector<ElementId> minimal_coset_reps_inductive(const CoxeterSystem& sys, GenSet I);

/// Double parabolic components: the unique w = a b c with b in X_IJ,
/// a in X^I_{I cap bJb^-1}, c in W_J, lengths additive.
struct DoubleParabolic {
  ElementId a, b, c;
};
DoubleParabolic double_parabolic_components(const CoxeterSystem& sys, ElementId w, GenSet I,
                                            GenSet J);

/// Kilmoyer intersection: K = {s in J : b s b^-1 in I}, so that
/// W_K = b^-1 W_I b cap W_J.  Requires b in X_IJ.
GenSet kilmoyer_subset(const CoxeterSystem& sys, GenSet I, GenSet J, ElementId b);

bool is_double_coset_rep(const CoxeterSystem& sys, GenSet I, GenSet J, ElementId b);

}  // namespace coxsolomon

#endif
