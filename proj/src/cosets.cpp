#include "coxsolomon/cosets.hpp"

#include <algorithm>

namespace coxsolomon {

CosetSection minimal_coset_reps(const CoxeterSystem& sys, GenSet I) {
  CosetSection out;
  out.I = I;
  const std::uint64_t n = sys.order();
  for (ElementId w = 0; w < n; ++w)
    if ((sys.descent_set(w) & I).empty()) out.reps.push_back(w);
  // Ids ascend with length, so this is already (length, id) order.
  const std::uint64_t sub = parabolic_order(sys.type(), I);
  if (out.reps.size() * sub != n) fail(errc::internal, "|X_I| |W_I| != |W|");
  return out;
}

std::vector<ElementId> minimal_coset_reps_inductive(const CoxeterSystem& sys, GenSet I) {
  // One-step factorization X_I = X_K X^K_I with K = S - {s}, s outside I.
  // Keeping the two factors instead of X_I is the memory-friendly layout; here
  // it serves as an independent route to cross-check the descent filter.
  GenSet S = GenSet::all(sys.rank());
  if (I == S) return {sys.identity()};
  int s = (S - I).elements().front();
  GenSet K = S.without(s);
  std::vector<ElementId> out;
  auto xk = minimal_coset_reps(sys, K).reps;
  auto xki = cross_section_in_parabolic(sys, K, I);
  out.reserve(xk.size() * xki.size());
  for (ElementId a : xk)
    for (ElementId b : xki) out.push_back(sys.multiply(a, b));
  std::sort(out.begin(), out.end());
  return out;
}

DoubleCosetSection double_coset_reps(const CoxeterSystem& sys, GenSet I, GenSet J) {
  DoubleCosetSection out;
  out.I = I;
  out.J = J;
  for (ElementId w = 0; w < sys.order(); ++w)
    if ((sys.descent_set(w) & J).empty() && (sys.descent_set(sys.inverse(w)) & I).empty())
      out.reps.push_back(w);
  return out;
}

std::vector<ElementId> cross_section_in_parabolic(const CoxeterSystem& sys, GenSet I, GenSet K) {
  std::vector<ElementId> out;
  for (ElementId w : sys.parabolic_elements(I))
    if ((sys.descent_set(w) & K).empty()) out.push_back(w);
  return out;
}

DoubleParabolic double_parabolic_components(const CoxeterSystem& sys, ElementId w, GenSet I,
                                            GenSet J) {
  auto [u, c] = sys.parabolic_components(w, J);  // u = w^J in X_J
  // b = unique element of X_IJ in W_I u: the inverse of (u^-1)^I.
  ElementId b = sys.inverse(sys.parabolic_components(sys.inverse(u), I).first);
  ElementId a = sys.multiply(u, sys.inverse(b));
  if (sys.length(a) + sys.length(b) + sys.length(c) != sys.length(w))
    fail(errc::internal, "double parabolic components are not length additive");
  return {a, b, c};
}

bool is_double_coset_rep(const CoxeterSystem& sys, GenSet I, GenSet J, ElementId b) {
  return (sys.descent_set(b) & J).empty() && (sys.descent_set(sys.inverse(b)) & I).empty();
}

GenSet kilmoyer_subset(const CoxeterSystem& sys, GenSet I, GenSet J, ElementId b) {
  if (!is_double_coset_rep(sys, I, J, b))
    fail(errc::not_a_double_coset_rep, "b is not the minimal element of its double coset");
  GenSet K;
  ElementId binv = sys.inverse(b);
  for (int s : J.elements()) {
    ElementId t = sys.multiply(sys.multiply(b, sys.generator(s)), binv);
    int g = sys.as_generator(t);
    if (g >= 0 && I.contains(g)) K = K.with(s);
  }
  return K;
}

}  // namespace coxsolomon
