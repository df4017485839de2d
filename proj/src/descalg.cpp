#include "coxsolomon/descalg.hpp"

namespace coxsolomon {

GroupAlgebraVector ga_add(const GroupAlgebraVector& x, const GroupAlgebraVector& y) {
  GroupAlgebraVector out = x;
  for (const auto& [w, c] : y.coeffs) out.add(w, c);
  return out;
}

GroupAlgebraVector ga_scale(const GroupAlgebraVector& x, const Rational& c) {
  GroupAlgebraVector out;
  if (c == 0) return out;
  for (const auto& [w, v] : x.coeffs) out.coeffs[w] = v * c;
  return out;
}

GroupAlgebraVector ga_multiply(const CoxeterSystem& sys, const GroupAlgebraVector& x,
                               const GroupAlgebraVector& y) {
  GroupAlgebraVector out;
  for (const auto& [w, a] : x.coeffs)
    for (const auto& [v, b] : y.coeffs) out.add(sys.multiply(w, v), a * b);
  return out;
}

GroupAlgebraVector x_element(const CoxeterSystem& sys, GenSet I) {
  GroupAlgebraVector out;
  for (ElementId w : minimal_coset_reps(sys, I).reps) out.coeffs[w] = 1;
  return out;
}

GroupAlgebraVector y_element(const CoxeterSystem& sys, GenSet I) {
  GroupAlgebraVector out;
  for (ElementId w = 0; w < sys.order(); ++w)
    if (sys.ascent_set(w) == I) out.coeffs[w] = 1;
  return out;
}

std::map<GenSet, std::uint64_t> structure_constants(const CoxeterSystem& sys, GenSet I, GenSet J) {
  std::map<GenSet, std::uint64_t> out;
  auto xij = double_coset_reps(sys, I, J);
  for (ElementId b : xij.reps) out[kilmoyer_subset(sys, I, J, b)]++;
  return out;
}

DescentAlgebraElement multiply_x_basis(const CoxeterSystem& sys, const DescentAlgebraElement& u,
                                       const DescentAlgebraElement& v) {
  DescentAlgebraElement out;
  for (const auto& [I, a] : u.x_coeffs)
    for (const auto& [J, b] : v.x_coeffs) {
      Rational ab = a * b;
      if (ab == 0) continue;
      for (const auto& [K, mult] : structure_constants(sys, I, J)) {
        auto& slot = out.x_coeffs[K];
        slot += ab * Rational(mult);
        if (slot == 0) out.x_coeffs.erase(K);
      }
    }
  return out;
}

GroupAlgebraVector expand(const CoxeterSystem& sys, const DescentAlgebraElement& d) {
  GroupAlgebraVector out;
  for (const auto& [I, c] : d.x_coeffs)
    for (ElementId w : minimal_coset_reps(sys, I).reps) out.add(w, c);
  return out;
}

std::map<GenSet, Rational> basis_change_x_to_y(int rank, const std::map<GenSet, Rational>& c) {
  // x_J = sum_{I >= J} y_I, so the y-coefficient at I sums c over subsets.
  std::map<GenSet, Rational> out;
  for (std::uint32_t m = 0; m < (1u << rank); ++m) {
    GenSet I(m);
    Rational acc = 0;
    for (const auto& [J, v] : c)
      if (J.subset_of(I)) acc += v;
    if (acc != 0) out[I] = acc;
  }
  return out;
}

std::map<GenSet, Rational> basis_change_y_to_x(int rank, const std::map<GenSet, Rational>& c) {
  // y_I = sum_{J >= I} (-1)^{|J - I|} x_J (inclusion-exclusion).
  std::map<GenSet, Rational> out;
  for (std::uint32_t m = 0; m < (1u << rank); ++m) {
    GenSet J(m);
    Rational acc = 0;
    for (const auto& [I, v] : c)
      if (I.subset_of(J)) acc += ((J - I).count() % 2 == 0) ? v : -v;
    if (acc != 0) out[J] = acc;
  }
  return out;
}

}  // namespace coxsolomon
