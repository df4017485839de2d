#ifndef COXSOLOMON_FIXTURES_HPP
#define COXSOLOMON_FIXTURES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace coxsolomon {

/// A published D' reference table, bundled verbatim.  Two transcriptions are
/// kept: these compiled-in tables and the TSV files under data/fixtures/;
/// the test suite compares them entry by entry.
struct Fixture {
  std::string type_label;
  std::vector<std::string> labels;  // printed representative order
  std::vector<std::vector<std::uint64_t>> entries;
  std::string provenance;
  bool recomputable;  // false for E7/E8 (consistency checks only)
};

const std::vector<Fixture>& all_fixtures();
const Fixture* find_fixture(const std::string& type_label);

Fixture make_fixture(const char* label, const char* const* labels, const std::uint64_t* entries,
                     int n, const char* provenance, bool recomputable);

/// Parse a TSV fixture file (comment lines start with '#'); used by the
/// double-entry comparison.
Fixture parse_fixture_tsv(const std::string& path, const std::string& type_label);

}  // namespace coxsolomon

#endif
