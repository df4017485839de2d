#include "coxsolomon/cache.hpp"
#include "coxsolomon/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

namespace py = pybind11;
using namespace coxsolomon;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

/// One fully enumerated group with its derived tables, shared with Python.
class PySystem {
public:
  PySystem(const std::string& spec, std::uint64_t cap, int threads) : threads_(threads) {
    BuildOptions opt;
    opt.cap = cap;
    tables_ = GroupTables::build(CoxeterSystem::build(spec, opt), threads);
  }

  const CoxeterSystem& sys() const { return tables_.sys; }

  std::vector<int> descents(ElementId w) const {
    check_element(w);
    return sys().descent_set(w).elements();
  }
  std::vector<int> ascents(ElementId w) const {
    check_element(w);
    return sys().ascent_set(w).elements();
  }
  ElementId multiply(ElementId a, ElementId b) const {
    check_element(a);
    check_element(b);
    return sys().multiply(a, b);
  }
  ElementId inverse(ElementId w) const {
    check_element(w);
    return sys().inverse(w);
  }
  int length(ElementId w) const {
    check_element(w);
    return sys().length(w);
  }
  std::vector<int> word(ElementId w) const {
    check_element(w);
    return sys().word(w);
  }
  ElementId from_word(const std::vector<int>& letters) const {
    for (int s : letters)
      if (s < 0 || s >= sys().rank()) throw py::value_error("generator index out of range");
    return sys().from_word(letters);
  }

  std::size_t conjugacy_class_count() const { return tables_.ct.count(); }
  std::size_t coxeter_class_count() const { return tables_.cct.count(); }
  std::uint64_t dim_ker_phi() const {
    return (std::uint64_t(1) << sys().rank()) - tables_.cct.count();
  }
  std::vector<std::string> coxeter_class_representatives() const {
    std::vector<std::string> out;
    for (const auto& c : tables_.cct.classes)
      out.push_back(c.representative.label(sys().rank()));
    return out;
  }

  py::tuple dmatrix(int min_size, bool paper_order) const {
    auto m = d_matrix(tables_, min_size, threads_);
    if (paper_order) {
      const Fixture* fx = find_fixture(sys().spec());
      if (!fx) throw py::value_error("no published label order for " + sys().spec());
      m = reorder_to_labels(tables_, m, fx->labels);
    }
    return py::make_tuple(m.labels, m.entries);
  }

  py::object check(const std::string& suite) const {
    auto reports = run_suite(tables_, suite);
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r, false));
    return json_to_py(arr);
  }

  py::object induced_character(const std::vector<int>& gens) const {
    GenSet I;
    for (int s : gens) {
      if (s < 0 || s >= sys().rank()) throw py::value_error("generator index out of range");
      I = I.with(s);
    }
    nlohmann::json out = nlohmann::json::array();
    const auto& f = tables_.bank.at(I.mask());
    for (const auto& cls : tables_.ct.classes)
      out.push_back({{"class_size", cls.size},
                     {"min_length", sys().length(cls.min_rep)},
                     {"value", to_int64(f.values[cls.id])}});
    return json_to_py(out);
  }

  void write_cache_file(const std::string& path) const { write_cache(sys(), path); }

private:
  void check_element(ElementId w) const {
    if (w >= sys().order()) throw py::index_error("element id out of range");
  }

  GroupTables tables_;
  int threads_;
};

}  // namespace

PYBIND11_MODULE(_coxsolomon, m) {
  m.doc() = "Finite Coxeter systems, the Solomon descent algebra, and exact "
            "verification of its character-side identities";

  py::register_exception<Error>(m, "CoxsolomonError");

  py::class_<PySystem>(m, "System")
      .def(py::init<const std::string&, std::uint64_t, int>(), py::arg("spec"),
           py::arg("cap") = 1'000'000, py::arg("threads") = 1)
      .def_property_readonly("spec", [](const PySystem& s) { return s.sys().spec(); })
      .def_property_readonly("rank", [](const PySystem& s) { return s.sys().rank(); })
      .def_property_readonly("order", [](const PySystem& s) { return s.sys().order(); })
      .def_property_readonly("num_positive_roots",
                             [](const PySystem& s) { return s.sys().num_positive_roots(); })
      .def_property_readonly("identity", [](const PySystem& s) { return s.sys().identity(); })
      .def_property_readonly("longest_element",
                             [](const PySystem& s) { return s.sys().longest_element(); })
      .def("generator", [](const PySystem& s, int i) {
             if (i < 0 || i >= s.sys().rank()) throw py::index_error("generator index");
             return s.sys().generator(i);
           })
      .def("length", &PySystem::length)
      .def("multiply", &PySystem::multiply)
      .def("inverse", &PySystem::inverse)
      .def("descent_set", &PySystem::descents)
      .def("ascent_set", &PySystem::ascents)
      .def("word", &PySystem::word)
      .def("from_word", &PySystem::from_word)
      .def("conjugacy_class_count", &PySystem::conjugacy_class_count)
      .def("coxeter_class_count", &PySystem::coxeter_class_count)
      .def("coxeter_class_representatives", &PySystem::coxeter_class_representatives)
      .def("dim_ker_phi", &PySystem::dim_ker_phi)
      .def("d_matrix", &PySystem::dmatrix, py::arg("min_size") = 2,
           py::arg("paper_order") = false)
      .def("check", &PySystem::check, py::arg("suite") = "all")
      .def("induced_character", &PySystem::induced_character)
      .def("write_cache", &PySystem::write_cache_file);

  m.def("fixture_names", [] {
    std::vector<std::string> out;
    for (const auto& f : all_fixtures()) out.push_back(f.type_label);
    return out;
  });
  m.def("fixture", [](const std::string& name) {
    const Fixture* f = find_fixture(name);
    if (!f) throw py::key_error("no fixture for " + name);
    nlohmann::json j{{"type", f->type_label},
                     {"labels", f->labels},
                     {"entries", f->entries},
                     {"provenance", f->provenance},
                     {"recomputable", f->recomputable}};
    return json_to_py(j);
  });
  m.def("compare_fixture", [](const std::string& name, int threads) {
    return json_to_py(report_to_json(compare_with_fixture(name, threads), false));
  }, py::arg("name"), py::arg("threads") = 1);
}
