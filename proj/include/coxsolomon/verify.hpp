#ifndef COXSOLOMON_VERIFY_HPP
#define COXSOLOMON_VERIFY_HPP

#include "coxsolomon/coxclass.hpp"
#include "coxsolomon/fixtures.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace coxsolomon {

/// Everything the checkers need about one group, computed once.  The induced
/// character bank and the coset sections are exponential in the rank, so they
/// are only populated up to kFullBankRank.
struct GroupTables {
  static constexpr int kFullBankRank = 14;

  CoxeterSystem sys;
  ClassTable ct;
  CoxeterClassTable cct;
  LambdaPartition lp;
  std::vector<ClassFunction> bank;            // induced trivial per subset mask
  std::vector<std::vector<std::int64_t>> ibank;  // same, as machine integers
  std::vector<std::vector<ElementId>> xsec;   // X_I per subset mask
  std::vector<std::uint32_t> desc_mask;       // descent set per element, as bits
  std::vector<std::uint32_t> idesc_mask;      // descent set of the inverse
  bool full_bank = false;

  static GroupTables build(CoxeterSystem sys, int threads = 1);
  static GroupTables build(const std::string& spec, const BuildOptions& opt = {}, int threads = 1);

  std::uint64_t phi_x_at_x(GenSet I, GenSet J) const;  // Phi(x_I)(x_J), integer
};

/// One verdict per check invocation.
///
/// verdict values: "pass" (theorem-backed identity holds), "fail" (a
/// theorem-backed identity is violated), "open:holds" (open-conjecture scan
/// found no counterexample), "open:witnesses" (open-conjecture scan found
/// discrepancies, listed in witnesses).
struct CheckReport {
  std::string type;
  std::string check;
  std::string verdict;
  nlohmann::json witnesses = nlohmann::json::array();
  std::int64_t timing_ms = 0;

  bool failed() const { return verdict == "fail"; }
};

/// D' submatrix over Coxeter classes whose representatives have at least
/// min_size generators; rows/cols in (cardinality, bitmask) representative
/// order.  Entries d(lambda, mu) = sum over X_I of 1^W_{W_J}; computed both
/// by the factored class-count route and by direct summation, which must
/// agree exactly (CrossCheckMismatch otherwise).
struct DPrimeMatrix {
  int min_size = 2;
  std::vector<std::uint32_t> lambda_ids;
  std::vector<std::string> labels;
  std::vector<std::vector<std::uint64_t>> entries;
};
DPrimeMatrix d_matrix(const GroupTables& g, int min_size, int threads = 1);

/// Reorder rows/columns to a printed label list (each label names a subset;
/// entries only depend on its Coxeter class).
DPrimeMatrix reorder_to_labels(const GroupTables& g, const DPrimeMatrix& m,
                               const std::vector<std::string>& labels);

/// W(I,J,b) = {w : w^J b^-1 = (w b^-1)_I}, with the three-components
/// characterization cross-checked against the defining equation.
struct WSet {
  GenSet I, J;
  ElementId b;
  std::vector<ElementId> members;
};
WSet w_set(const CoxeterSystem& sys, GenSet I, GenSet J, ElementId b);

CheckReport check_symmetry(const GroupTables& g);
CheckReport check_isometry(const GroupTables& g);
CheckReport check_gessel_counts(const GroupTables& g);
CheckReport check_prop_wset(const GroupTables& g);
CheckReport check_double_coset_conjecture(const GroupTables& g);
CheckReport check_single_generator(const GroupTables& g);
CheckReport check_structure(const GroupTables& g);
CheckReport check_classes(const GroupTables& g);

/// All of the above in a fixed order (the "all" suite).
std::vector<CheckReport> run_suite(const GroupTables& g, const std::string& suite);

/// Entrywise fixture comparison for recomputable types; symmetry plus
/// lambda(S)-row consistency (entries |W|/|W_I| via parabolic_order) for the
/// stored-only E7/E8 tables.
CheckReport compare_with_fixture(const std::string& type_label, int threads = 1);

nlohmann::json report_to_json(const CheckReport& r, bool with_timing);

}  // namespace coxsolomon

#endif
