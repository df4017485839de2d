#ifndef COXSOLOMON_CTYPE_HPP
#define COXSOLOMON_CTYPE_HPP

#include "coxsolomon/genset.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace coxsolomon {

using CoxMatrix = std::vector<std::vector<int>>;

/// Finite irreducible Coxeter types per the classification:
/// A_n (n>=1), B_n (n>=2), D_n (n>=4), E6/E7/E8, F4, H3/H4, I2(m) (m>=3).
struct Component {
  char family = 'A';
  int rank = 1;
  int m = 0;  // I2 only

  std::uint64_t order() const;           // saturates at UINT64_MAX
  std::vector<int> degrees() const;
  CoxMatrix coxeter_matrix() const;      // canonical diagram numbering
  std::string to_string() const;
};

struct CoxeterType {
  std::vector<Component> components;

  /// Grammar: TYPE := COMPONENT ("x" COMPONENT)*;
  /// COMPONENT := [ABDEFH][0-9]+ | "I2(" m ")".
  /// Throws parse_error for malformed input and infinite_or_unsupported for
  /// ranks outside the classification.
  static CoxeterType parse(std::string_view spec);

  int rank() const;
  std::uint64_t order() const;           // saturating product
  std::vector<int> degrees() const;      // concatenated component degrees
  int num_positive_roots() const;        // sum of (d_i - 1)
  CoxMatrix coxeter_matrix() const;      // block diagonal
  std::string to_string() const;

  /// Partition of {0..rank-1} into the irreducible components, in order.
  std::vector<GenSet> component_partition() const;
};

/// Identify the finite type of a connected Coxeter graph given by `matrix`
/// restricted to `vertices`, and return the vertex order realizing the
/// canonical numbering of that type.  Throws infinite_or_unsupported when the
/// graph is not one of the finite irreducible diagrams.
struct ClassifiedComponent {
  Component type;
  std::vector<int> vertex_order;  // vertex_order[i] plays canonical role i+1
};
ClassifiedComponent classify_component(const CoxMatrix& matrix, const std::vector<int>& vertices);

/// Decompose the induced graph on I into connected components and classify
/// each.  Component order follows the smallest vertex in each component.
std::vector<ClassifiedComponent> classify_subset(const CoxMatrix& matrix, GenSet I);

/// |W_I| from the induced diagram alone; no enumeration.  Saturating.
std::uint64_t parabolic_order(const CoxeterType& type, GenSet I);
std::uint64_t parabolic_order(const CoxMatrix& matrix, GenSet I);

}  // namespace coxsolomon

#endif
