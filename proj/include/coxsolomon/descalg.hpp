#ifndef COXSOLOMON_DESCALG_HPP
#define COXSOLOMON_DESCALG_HPP

#include "coxsolomon/cosets.hpp"
#include "coxsolomon/rational.hpp"
#include "coxsolomon/system.hpp"

#include <map>

namespace coxsolomon {

/// Sparse rational vector in the group algebra QW.  No explicit zeros.
struct GroupAlgebraVector {
  std::map<ElementId, Rational> coeffs;

  Rational at(ElementId w) const {
    auto it = coeffs.find(w);
    return it == coeffs.end() ? Rational(0) : it->second;
  }
  void add(ElementId w, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = coeffs.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) coeffs.erase(it);
    }
  }
  friend bool operator==(const GroupAlgebraVector& x, const GroupAlgebraVector& y) {
    return x.coeffs == y.coeffs;
  }
};

GroupAlgebraVector ga_add(const GroupAlgebraVector& x, const GroupAlgebraVector& y);
GroupAlgebraVector ga_scale(const GroupAlgebraVector& x, const Rational& c);
GroupAlgebraVector ga_multiply(const CoxeterSystem& sys, const GroupAlgebraVector& x,
                               const GroupAlgebraVector& y);

/// Element of the descent algebra in the x-basis: sum of c_I x_I.
struct DescentAlgebraElement {
  std::map<GenSet, Rational> x_coeffs;

  static DescentAlgebraElement x_basis(GenSet I) {
    DescentAlgebraElement d;
    d.x_coeffs[I] = 1;
    return d;
  }
  friend bool operator==(const DescentAlgebraElement& a, const DescentAlgebraElement& b) {
    return a.x_coeffs == b.x_coeffs;
  }
};

/// x_I = sum over X_I (ascent set containing I).
GroupAlgebraVector x_element(const CoxeterSystem& sys, GenSet I);
/// y_I = sum over Y_I (ascent set equal to I).
GroupAlgebraVector y_element(const CoxeterSystem& sys, GenSet I);

/// Structure constants a_IJK of x_I x_J = sum_K a_IJK x_K, computed from the
/// double-coset section and the Kilmoyer rule (not by expanding products).
std::map<GenSet, std::uint64_t> structure_constants(const CoxeterSystem& sys, GenSet I, GenSet J);

DescentAlgebraElement multiply_x_basis(const CoxeterSystem& sys, const DescentAlgebraElement& u,
                                       const DescentAlgebraElement& v);

/// Expansion into the group algebra (test oracle for products).
GroupAlgebraVector expand(const CoxeterSystem& sys, const DescentAlgebraElement& d);

/// Coefficient maps between the x- and y-bases (inclusion-exclusion over
/// supersets); mutually inverse.
std::map<GenSet, Rational> basis_change_x_to_y(int rank, const std::map<GenSet, Rational>& c);
std::map<GenSet, Rational> basis_change_y_to_x(int rank, const std::map<GenSet, Rational>& c);

}  // namespace coxsolomon

#endif
