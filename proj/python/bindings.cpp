#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sdualkit/abelian_coulomb.hpp"
#include "sdualkit/brane.hpp"
#include "sdualkit/error.hpp"
#include "sdualkit/partitions.hpp"
#include "sdualkit/serialize.hpp"
#include "sdualkit/spaces.hpp"
#include "sdualkit/verify.hpp"

namespace py = pybind11;
using namespace sdualkit;

// Structured values cross the boundary as JSON text; the Python package
// wraps these in dicts.
PYBIND11_MODULE(_core, m) {
  m.doc() = "Coulomb branches, brane diagrams and S-dual Hamiltonian spaces";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error &e) {
      PyErr_SetObject(error.ptr(), py::make_tuple(std::string(to_string(e.code())), e.what()).ptr());
    }
  });

  m.def("coulomb_presentation", [](const std::string &theory) {
    return to_json(present_rank1(theory_from_json(parse_json(theory)))).dump();
  });
  m.def("coulomb_relation", [](const std::string &theory) {
    return present_rank1(theory_from_json(parse_json(theory))).relation_text();
  });
  m.def("structure_constant", [](const std::string &theory, const Cocharacter &lambda, const Cocharacter &mu) {
    return structure_constant(theory_from_json(parse_json(theory)), lambda, mu).to_string();
  });

  m.def("diagram_sdual", [](const std::string &d) { return sdual(parse_diagram(d)).to_string(); });
  m.def("diagram_hw", [](const std::string &d, std::size_t i) { return hw_move(parse_diagram(d), i).to_string(); });
  m.def("diagram_linking", [](const std::string &d) {
    const LinkingData l = linking_numbers(parse_diagram(d));
    return std::make_pair(l.ns5, l.d5);
  });
  m.def("quiver_to_diagram",
        [](const std::vector<int> &v, const std::vector<int> &w) { return quiver_to_diagram({v, w}).to_string(); });

  m.def("chain_to_orbit", [](const std::vector<int> &dims) {
    const OrbitDescriptor o = chain_to_orbit(dims);
    return py::make_tuple(o.jordan_type.parts(), std::string(to_string(o.kind)), o.dim());
  });
  m.def("transpose", [](const std::vector<int> &p) { return transpose(Partition(p)).parts(); });
  m.def("orbit_dim", [](const std::vector<int> &p) { return orbit_dim(Partition(p)); });
  m.def("partitions_of", [](int n) {
    std::vector<std::vector<int>> out;
    for (const auto &p : partitions_of(n)) out.push_back(p.parts());
    return out;
  });

  m.def("sdual_space", [](const std::string &descriptor) {
    return to_json(sdual_pair(space_from_json(parse_json(descriptor)))).dump();
  });

  m.def(
      "verify",
      [](const std::string &filter, std::uint64_t seed) {
        std::ostringstream lines;
        VerifyReport report;
        {
          py::gil_scoped_release release;
          report = run_verify(filter, seed, lines);
        }
        std::vector<std::tuple<std::string, bool, std::string>> checks;
        for (const auto &c : report.checks) checks.emplace_back(c.name, c.pass, c.detail);
        return checks;
      },
      py::arg("filter") = "", py::arg("seed") = kDefaultSeed);
}
