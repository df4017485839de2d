#include "coxsolomon/fixtures.hpp"

#include "coxsolomon/errors.hpp"

#include <fstream>
#include <sstream>

namespace coxsolomon {

Fixture make_fixture(const char* label, const char* const* labels, const std::uint64_t* entries,
                     int n, const char* provenance, bool recomputable) {
  Fixture f;
  f.type_label = label;
  f.provenance = provenance;
  f.recomputable = recomputable;
  f.labels.assign(labels, labels + n);
  f.entries.assign(n, std::vector<std::uint64_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) f.entries[i][j] = entries[i * n + j];
  return f;
}

const Fixture* find_fixture(const std::string& type_label) {
  for (const auto& f : all_fixtures())
    if (f.type_label == type_label) return &f;
  return nullptr;
}

Fixture parse_fixture_tsv(const std::string& path, const std::string& type_label) {
  std::ifstream in(path);
  if (!in) fail(errc::internal, "cannot open fixture file " + path);
  Fixture f;
  f.type_label = type_label;
  f.recomputable = true;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      f.provenance = line.substr(1);
      continue;
    }
    std::stringstream ss(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ss, cell, '\t')) cells.push_back(cell);
    if (!have_header) {
      f.labels.assign(cells.begin() + 1, cells.end());
      have_header = true;
      continue;
    }
    std::vector<std::uint64_t> row;
    for (std::size_t i = 1; i < cells.size(); ++i) row.push_back(std::stoull(cells[i]));
    if (row.size() != f.labels.size()) fail(errc::internal, "ragged fixture row in " + path);
    f.entries.push_back(std::move(row));
  }
  if (f.entries.size() != f.labels.size()) fail(errc::internal, "fixture " + path + " is not square");
  return f;
}

}  // namespace coxsolomon
