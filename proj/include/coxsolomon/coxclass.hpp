#ifndef COXSOLOMON_COXCLASS_HPP
#define COXSOLOMON_COXCLASS_HPP

#include "coxsolomon/chars.hpp"
#include "coxsolomon/system.hpp"

#include <optional>
#include <vector>

namespace coxsolomon {

/// An orbit of subsets of S under W-conjugation.  The representative is the
/// first subset found when scanning by (cardinality, bitmask); the paper's
/// printed representative lists follow the same rule.
struct CoxeterClass {
  std::uint32_t id;
  GenSet representative;
  std::vector<GenSet> members;
  ElementId coxeter_element;  // c_I for the representative
};

struct CoxeterClassTable {
  std::vector<CoxeterClass> classes;
  std::vector<std::uint32_t> class_of_subset;  // mask -> coxeter class id

  std::size_t count() const { return classes.size(); }
  std::uint32_t of(GenSet I) const { return class_of_subset[I.mask()]; }
};

/// Product of the generators of I in ascending index order.
ElementId coxeter_element_of(const CoxeterSystem& sys, GenSet I);

/// Subsets join a class iff their Coxeter elements are conjugate; scan order
/// is ascending cardinality, then ascending bitmask.
CoxeterClassTable coxeter_class_reps(const CoxeterSystem& sys, const ClassTable& ct);

/// I ~_W J via conjugacy of Coxeter elements (constant time after the class
/// table).  find_set_conjugator searches for an explicit w with wIw^-1 = J
/// and backs the three-way equivalence tests.
bool are_W_conjugate(const CoxeterSystem& sys, const ClassTable& ct, GenSet I, GenSet J);
std::optional<ElementId> find_set_conjugator(const CoxeterSystem& sys, GenSet I, GenSet J);

/// W_I rebuilt as a standalone system from its induced Coxeter graph, with
/// maps back into the parent.
struct ParabolicSubsystem {
  CoxeterSystem sys;
  GenSet I;                          // parent subset
  std::vector<int> gen_to_parent;    // sub generator -> parent generator
  std::vector<ElementId> to_parent;  // sub element -> parent element
};
ParabolicSubsystem build_parabolic_subsystem(const CoxeterSystem& parent, GenSet I);

/// Classes meeting no proper standard parabolic, i.e. classes all of whose
/// members have full support.
std::vector<std::uint32_t> cuspidal_classes(const CoxeterSystem& sys, const ClassTable& ct);

struct CuspidalInParabolic {
  ParabolicSubsystem sub;
  ClassTable sub_classes;
  std::vector<std::uint32_t> cuspidal;  // sub class ids
};
CuspidalInParabolic cuspidal_classes_in_parabolic(const CoxeterSystem& parent, GenSet I);

/// Assignment of a Coxeter type to every conjugacy class: the minimal
/// cardinality I (ascending scan) whose intersection with the class is a
/// single I-cuspidal class of W_I.  Throws TypeAssignmentAmbiguous if two
/// non-conjugate qualifying subsets are found at the minimal cardinality.
struct LambdaPartition {
  std::vector<std::uint32_t> lambda_of_class;              // conj class -> coxeter class
  std::vector<std::vector<std::uint32_t>> classes_of_lambda;  // coxeter class -> conj classes
  std::vector<std::uint64_t> lambda_size;                  // |C(lambda)|
};
LambdaPartition lambda_partition(const CoxeterSystem& sys, const ClassTable& ct,
                                 const CoxeterClassTable& cct);

/// Coxeter type of an element.
std::uint32_t coxeter_type(const CoxeterSystem& sys, const ClassTable& ct,
                           const LambdaPartition& lp, ElementId w);

/// Indicator class function of C(lambda).
ClassFunction xi_lambda(const ClassTable& ct, const LambdaPartition& lp, std::uint32_t lambda);

/// A = (phi_lambda(c_mu)) over Coxeter classes, with its exact inverse.
struct MatrixA {
  std::vector<std::vector<Rational>> entries;
  std::vector<std::vector<Rational>> inverse;  // nu_{lambda mu}
};
MatrixA matrix_A(const CoxeterSystem& sys, const ClassTable& ct, const CoxeterClassTable& cct,
                 const std::vector<ClassFunction>& bank);

/// |Lambda(W)| == |Cl(W)|, which holds exactly for products of type-A
/// components.
bool check_coxeqequ(const ClassTable& ct, const CoxeterClassTable& cct);

/// Exact inverse of a square rational matrix; throws SingularA.
std::vector<std::vector<Rational>> invert_rational_matrix(
    const std::vector<std::vector<Rational>>& m);

}  // namespace coxsolomon

#endif
