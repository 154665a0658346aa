#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "semikit/cli.hpp"
#include "semikit/corpus.hpp"
#include "semikit/greens.hpp"
#include "semikit/ideals.hpp"
#include "semikit/io.hpp"
#include "semikit/simple.hpp"

namespace py = pybind11;
using namespace semikit;

namespace {

  using Lists = std::vector<std::vector<Element>>;

  Lists rows_of(FiniteSemigroup const& S) {
    Lists out;
    for (Element a = 0; a < S.order(); ++a) {
      auto r = S.row(a);
      out.emplace_back(r.begin(), r.end());
    }
    return out;
  }

  Lists members_of(std::vector<SubsetHandle> const& hs) {
    Lists out;
    for (auto const& h : hs) out.push_back(h.members());
    return out;
  }

  py::dict greens_dict(FiniteSemigroup const& S) {
    GreensStructure G(S);
    py::dict        d;
    d["l_classes"] = G.members(Relation::L);
    d["r_classes"] = G.members(Relation::R);
    d["h_classes"] = G.members(Relation::H);
    d["d_classes"] = G.members(Relation::D);
    d["j_classes"] = G.members(Relation::J);
    return d;
  }

  py::dict kernel_dict(FiniteSemigroup const& S) {
    auto     K = kernel(S);
    py::dict d;
    d["kernel"]              = K.kernel.members();
    d["kernel_idempotents"]  = K.kernel_idempotents;
    d["minimal_left_ideals"] = members_of(K.min_left);
    d["minimal_right_ideals"] = members_of(K.min_right);
    return d;
  }

  py::dict decompose_dict(FiniteSemigroup const& S, std::optional<Element> e) {
    auto     dec = rees_decompose(S, e);
    py::dict d;
    d["e"]           = dec.e;
    d["I"]           = dec.i_elements;
    d["Lambda"]      = dec.lambda_elements;
    d["G"]           = dec.group_elements;
    d["sandwich"]    = dec.rms.sandwich();
    d["group_table"] = rows_of(dec.rms.group());
    d["round_trip"]  = dec.phi.is_isomorphism();
    return d;
  }

  py::tuple run_cli(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int                code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }

}  // namespace

PYBIND11_MODULE(_semikit, m) {
  m.doc() = "Finite semigroup toolkit";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error;
  error.call_once_and_store_result(
      [&] { return py::exception<Error>(m, "SemikitError").cast<py::object>(); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (Error const& e) {
      py::object type = error.get_stored();
      py::object exc  = type(std::string(e.what()));
      exc.attr("kind")    = std::string(to_string(e.kind()));
      exc.attr("witness") = e.witness();
      PyErr_SetObject(type.ptr(), exc.ptr());
    }
  });

  py::class_<FiniteSemigroup>(m, "Semigroup")
      .def(py::init([](Lists const& rows, std::string name) {
             return FiniteSemigroup::from_rows(rows, std::move(name));
           }),
           py::arg("rows"), py::arg("name") = "")
      .def_static("from_descriptor", &from_descriptor, py::arg("descriptor"))
      .def_static("read", [](std::filesystem::path const& p) { return io::read_sg(p); })
      .def_static("parse", [](std::string const& text) { return io::parse_sg(text); })
      .def("format", &io::format_sg)
      .def_property_readonly("order", &FiniteSemigroup::order)
      .def_property_readonly("name", &FiniteSemigroup::name)
      .def_property_readonly("table", &rows_of)
      .def("__call__", &FiniteSemigroup::product)
      .def("__len__", &FiniteSemigroup::order)
      .def("__eq__", [](FiniteSemigroup const& a, FiniteSemigroup const& b) { return a == b; })
      .def("idempotents", [](FiniteSemigroup const& S) { return idempotents(S).members(); })
      .def("identity", [](FiniteSemigroup const& S) { return is_monoid(S); })
      .def("is_commutative", &is_commutative)
      .def("is_group", &is_group)
      .def("is_regular", &is_regular_semigroup)
      .def("is_simple", &is_simple)
      .def("is_completely_simple", &is_completely_simple)
      .def("__repr__", [](FiniteSemigroup const& S) {
        return "<Semigroup order " + std::to_string(S.order()) + ">";
      });

  m.def("greens", &greens_dict, py::arg("semigroup"));
  m.def("eggbox_dot", [](FiniteSemigroup const& S) { return eggbox_dot(GreensStructure(S)); });
  m.def("kernel", &kernel_dict, py::arg("semigroup"));
  m.def("rees_decompose", &decompose_dict, py::arg("semigroup"),
        py::arg("base_idempotent") = py::none());
  m.def("subsemigroups", [](FiniteSemigroup const& S, std::size_t cap) {
    return subsemigroup_sets(S, cap);
  }, py::arg("semigroup"), py::arg("cap") = default_subsemigroup_cap);
  m.def("census", [](std::size_t max_order, bool fold_opposites) {
    auto c = census(max_order, default_census_limit, fold_opposites);
    return py::make_tuple(c.counts, c.semigroups);
  }, py::arg("max_order"), py::arg("fold_opposites") = false);
  m.def("canonical_form", &canonical_form);
  m.def("fingerprint", [](FiniteSemigroup const& S) { return to_hex(fingerprint(S)); });
  m.def("verify", [](std::vector<FiniteSemigroup> const& semigroups) {
    std::vector<CorpusInstance> corpus;
    for (auto const& S : semigroups) corpus.push_back({S, S.name()});
    return to_json(verify_suite(corpus)).dump();
  }, py::arg("semigroups"));
  m.def("verification_checks", &verification_checks);
  m.def("cli", &run_cli, py::arg("args"));
}
