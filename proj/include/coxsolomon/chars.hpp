#ifndef COXSOLOMON_CHARS_HPP
#define COXSOLOMON_CHARS_HPP

#include "coxsolomon/descalg.hpp"
#include "coxsolomon/rational.hpp"
#include "coxsolomon/system.hpp"

#include <vector>

namespace coxsolomon {

struct ConjugacyClass {
  std::uint32_t id;
  std::uint64_t size;
  ElementId min_rep;            // minimal length, smallest id
  std::vector<bool> members;    // bitset over element ids
};

struct ClassTable {
  std::vector<ConjugacyClass> classes;
  std::vector<std::uint32_t> class_of;  // element id -> class id

  std::size_t count() const { return classes.size(); }
};

/// Orbit partition of W under conjugation.  Classes are numbered by their
/// smallest element id, so the identity class is always class 0.
ClassTable conjugacy_classes(const CoxeterSystem& sys);

/// Rational class function, one value per conjugacy class.
struct ClassFunction {
  std::vector<Rational> values;

  Rational at(std::uint32_t cls) const { return values[cls]; }
  friend bool operator==(const ClassFunction& f, const ClassFunction& g) {
    return f.values == g.values;
  }
};

ClassFunction cf_add(const ClassFunction& f, const ClassFunction& g);
ClassFunction cf_scale(const ClassFunction& f, const Rational& c);
ClassFunction cf_pointwise(const ClassFunction& f, const ClassFunction& g);

/// Induced trivial character 1^W_{W_I}, evaluated per class at the minimal
/// representative by counting fixed cosets: #{g in X_I : wg in gW_I}.
ClassFunction induced_trivial(const CoxeterSystem& sys, const ClassTable& ct, GenSet I);

/// Test oracle: |W_I|^-1 #{x in W : x^-1 w x in W_I}, by full scan.
ClassFunction induced_trivial_by_conjugation_count(const CoxeterSystem& sys, const ClassTable& ct,
                                                   GenSet I);

/// All 2^rank induced trivial characters, indexed by subset mask.
std::vector<ClassFunction> induced_bank(const CoxeterSystem& sys, const ClassTable& ct);

/// <f, g>_W = |W|^-1 sum_w f(w) g(w).
Rational scalar_product_classfn(const CoxeterSystem& sys, const ClassTable& ct,
                                const ClassFunction& f, const ClassFunction& g);

/// <z1, z2> with <w, g> = 1 iff w = g^-1.
Rational pairing_group_algebra(const CoxeterSystem& sys, const GroupAlgebraVector& z1,
                               const GroupAlgebraVector& z2);

/// Solomon homomorphism: x_I -> 1^W_{W_I}, extended linearly.
ClassFunction phi(const CoxeterSystem& sys, const ClassTable& ct,
                  const DescentAlgebraElement& d);
ClassFunction phi(const CoxeterSystem& sys, const ClassTable& ct,
                  const DescentAlgebraElement& d, const std::vector<ClassFunction>& bank);

/// f extended linearly to QW.
Rational evaluate_classfn_on_vector(const ClassTable& ct, const ClassFunction& f,
                                    const GroupAlgebraVector& z);
/// Integer fast path: sum of f over a list of elements.
Rational evaluate_classfn_on_ids(const ClassTable& ct, const ClassFunction& f,
                                 const std::vector<ElementId>& ids);

/// Character of the right (equivalently left) module of an idempotent:
/// chi_e(w) = sum_x <x^-1 e x, w>.  Throws NotIdempotent when e*e != e.
ClassFunction idempotent_character(const CoxeterSystem& sys, const ClassTable& ct,
                                   const GroupAlgebraVector& e);

/// e_I = |W_I|^-1 sum_{w in W_I} w.
GroupAlgebraVector trivial_idempotent(const CoxeterSystem& sys, GenSet I);
/// Sign-twisted variant: |W_I|^-1 sum_{w in W_I} (-1)^{l(w)} w.
GroupAlgebraVector sign_idempotent(const CoxeterSystem& sys, GenSet I);

/// Exact rank of a list of class functions, by Gaussian elimination.
int rank_of_classfns(const std::vector<ClassFunction>& fns);

}  // namespace coxsolomon

#endif
