#include "coxsolomon/cache.hpp"
#include "coxsolomon/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace coxsolomon;
using json = nlohmann::json;

namespace {

// Exit codes: 0 ok / report, 1 theorem violation or fixture diff,
// 2 internal cross-check failure, 3 usage or build errors.
constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInternal = 2;
constexpr int kExitError = 3;

struct GlobalOpts {
  std::uint64_t cap = 1'000'000;
  int threads = 1;
  std::string cache_dir;
  std::string format = "text";
  bool timing = false;
};

std::string cache_path_for(const GlobalOpts& g, const CoxeterType& type) {
  if (g.cache_dir.empty()) return {};
  return (std::filesystem::path(g.cache_dir) / cache_file_name(type)).string();
}

/// Build the system, going through the cache directory when one is set.
CoxeterSystem obtain_system(const GlobalOpts& g, const std::string& spec) {
  BuildOptions opt;
  opt.cap = g.cap;
  CoxeterType type = CoxeterType::parse(spec);
  std::string path = cache_path_for(g, type);
  if (!path.empty() && std::filesystem::exists(path)) return load_cache(path, opt);
  return CoxeterSystem::build(type, opt);
}

void emit_tsv(std::ostream& out, const DPrimeMatrix& m) {
  for (const auto& l : m.labels) out << '\t' << l;
  out << '\n';
  for (std::size_t r = 0; r < m.entries.size(); ++r) {
    out << m.labels[r];
    for (auto v : m.entries[r]) out << '\t' << v;
    out << '\n';
  }
}

json matrix_json(const DPrimeMatrix& m) {
  return {{"min_size", m.min_size}, {"labels", m.labels}, {"entries", m.entries}};
}

void print_report_line(const CheckReport& r, const GlobalOpts& g) {
  std::cout << r.type << " " << r.check << ": " << r.verdict;
  if (g.timing) std::cout << " (" << r.timing_ms << " ms)";
  std::cout << '\n';
  for (const auto& w : r.witnesses) std::cout << "  witness: " << w.dump() << '\n';
}

int verdict_exit(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (r.failed()) return kExitViolation;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Coxeter systems, the Solomon descent algebra, and its character-side identities"};
  app.require_subcommand(1);

  GlobalOpts g;
  if (const char* env = std::getenv("COXSOLOMON_CACHE")) g.cache_dir = env;
  app.add_option("--cap", g.cap, "element count cap for group construction");
  app.add_option("--threads", g.threads, "worker threads for the parallel maps");
  app.add_option("--cache-dir", g.cache_dir, "group cache directory (default: $COXSOLOMON_CACHE)");
  app.add_option("--format", g.format, "output format: text/tsv or json")
      ->check(CLI::IsMember({"text", "tsv", "json"}));
  app.add_flag("--timing", g.timing, "include wall-clock timings in reports");

  std::string spec;
  int min_size = 2;
  bool paper_order = false;
  std::string suite = "all";

  auto* cmd_group = app.add_subcommand("group", "summary of one group");
  cmd_group->add_option("spec", spec, "type, e.g. H3, F4, A2xB2, I2(7)")->required();

  auto* cmd_dmatrix = app.add_subcommand("dmatrix", "the D' matrix over Coxeter classes");
  cmd_dmatrix->add_option("spec", spec)->required();
  cmd_dmatrix->add_option("--min-size", min_size, "smallest representative cardinality (default 2)");
  cmd_dmatrix->add_flag("--paper-order", paper_order, "print rows in the published label order");

  auto* cmd_check = app.add_subcommand("check", "run verification suites");
  cmd_check->add_option("spec", spec)->required();
  cmd_check->add_option("--suite", suite,
                        "all|isometry|symmetry|gessel|structure|classes|dcc");

  auto* cmd_fixtures = app.add_subcommand("fixtures", "bundled reference tables");
  auto* fx_compare = cmd_fixtures->add_subcommand("compare", "recompute (or consistency-check) one table");
  fx_compare->add_option("spec", spec)->required();
  auto* fx_show = cmd_fixtures->add_subcommand("show", "print one stored table");
  fx_show->add_option("spec", spec)->required();
  auto* fx_list = cmd_fixtures->add_subcommand("list", "list stored tables");

  auto* cmd_cache = app.add_subcommand("cache", "on-disk group cache");
  auto* cache_write = cmd_cache->add_subcommand("write", "enumerate and store a group");
  cache_write->add_option("spec", spec)->required();
  auto* cache_load = cmd_cache->add_subcommand("load", "load a stored group and print a summary");
  cache_load->add_option("spec", spec)->required();
  auto* cache_verify = cmd_cache->add_subcommand("verify", "re-validate a stored group");
  cache_verify->add_option("spec", spec)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_group) {
      auto sys = obtain_system(g, spec);
      auto ct = conjugacy_classes(sys);
      auto cct = coxeter_class_reps(sys, ct);
      std::uint64_t dim_ker = (std::uint64_t(1) << sys.rank()) - cct.count();
      if (g.format == "json") {
        json j{{"type", sys.spec()},
               {"rank", sys.rank()},
               {"order", sys.order()},
               {"positive_roots", sys.num_positive_roots()},
               {"longest_length", sys.length(sys.longest_element())},
               {"conjugacy_classes", ct.count()},
               {"coxeter_classes", cct.count()},
               {"dim_ker_phi", dim_ker}};
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "type:              " << sys.spec() << '\n'
                  << "rank:              " << sys.rank() << '\n'
                  << "order:             " << sys.order() << '\n'
                  << "positive roots:    " << sys.num_positive_roots() << '\n'
                  << "longest length:    " << sys.length(sys.longest_element()) << '\n'
                  << "conjugacy classes: " << ct.count() << '\n'
                  << "Coxeter classes:   " << cct.count() << '\n'
                  << "dim ker Phi:       " << dim_ker << '\n';
      }
      return kExitOk;
    }

    if (*cmd_dmatrix) {
      auto tables = GroupTables::build(obtain_system(g, spec), g.threads);
      auto m = d_matrix(tables, min_size, g.threads);
      if (paper_order) {
        const Fixture* fx = find_fixture(tables.sys.spec());
        if (!fx) fail(errc::parse_error, "no published label order for " + tables.sys.spec());
        if (min_size != 2)
          fail(errc::parse_error, "--paper-order applies to the min-size 2 submatrix");
        m = reorder_to_labels(tables, m, fx->labels);
      }
      if (g.format == "json") std::cout << matrix_json(m).dump(2) << '\n';
      else emit_tsv(std::cout, m);
      return kExitOk;
    }

    if (*cmd_check) {
      auto tables = GroupTables::build(obtain_system(g, spec), g.threads);
      auto reports = run_suite(tables, suite);
      if (g.format == "json") {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r, g.timing));
        std::cout << arr.dump(2) << '\n';
      } else {
        for (const auto& r : reports) print_report_line(r, g);
      }
      return verdict_exit(reports);
    }

    if (*cmd_fixtures) {
      if (*fx_list) {
        for (const auto& f : all_fixtures())
          std::cout << f.type_label << " (" << f.labels.size() << "x" << f.labels.size()
                    << (f.recomputable ? ", recomputable" : ", stored only") << ")\n";
        return kExitOk;
      }
      if (*fx_show) {
        const Fixture* f = find_fixture(spec);
        if (!f) fail(errc::parse_error, "no fixture for " + spec);
        DPrimeMatrix m;
        m.labels = f->labels;
        m.entries = f->entries;
        if (g.format == "json") {
          json j{{"type", f->type_label},
                 {"provenance", f->provenance},
                 {"labels", f->labels},
                 {"entries", f->entries}};
          std::cout << j.dump(2) << '\n';
        } else {
          std::cout << "# " << f->provenance << '\n';
          emit_tsv(std::cout, m);
        }
        return kExitOk;
      }
      if (*fx_compare) {
        const Fixture* f = find_fixture(spec);
        if (!f) fail(errc::parse_error, "no fixture for " + spec);
        auto rep = compare_with_fixture(spec, g.threads);
        if (g.format == "json") {
          json j = report_to_json(rep, g.timing);
          j["recomputed"] = f->recomputable;
          std::cout << j.dump(2) << '\n';
        } else {
          print_report_line(rep, g);
          if (!f->recomputable)
            std::cout << "  (stored table: consistency checks only, not recomputed)\n";
        }
        return rep.failed() ? kExitViolation : kExitOk;
      }
      std::cerr << "fixtures: expected a subcommand (list|show|compare)\n";
      return kExitError;
    }

    if (*cmd_cache) {
      if (g.cache_dir.empty())
        fail(errc::parse_error, "cache commands need --cache-dir or $COXSOLOMON_CACHE");
      CoxeterType type = CoxeterType::parse(spec);
      std::string path = cache_path_for(g, type);
      BuildOptions opt;
      opt.cap = g.cap;
      if (*cache_write) {
        std::filesystem::create_directories(g.cache_dir);
        auto sys = CoxeterSystem::build(type, opt);
        write_cache(sys, path);
        std::cout << "wrote " << path << " (" << sys.order() << " elements)\n";
        return kExitOk;
      }
      auto sys = load_cache(path, opt);
      if (*cache_verify) {
        std::cout << path << ": structural invariants hold (" << sys.order() << " elements)\n";
        return kExitOk;
      }
      std::cout << "loaded " << path << ": " << sys.spec() << ", order " << sys.order()
                << ", longest length " << sys.length(sys.longest_element()) << '\n';
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == errc::cross_check_mismatch ? kExitInternal : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
