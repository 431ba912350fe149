// Python bindings for the main operations.  Thin wrappers only: structured
// results come back as plain dicts/lists keyed by labels, so the Python side
// never sees vertex ids.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dowker/homology.hpp"
#include "dowker/io.hpp"

namespace py = pybind11;

namespace {

using namespace dowker;

py::dict weight_dict(const WeightFunction& w) {
  py::dict out;
  for (const auto& [s, v] : w.values())
    out[py::str(simplex_key(w.complex(), s))] = v;
  return out;
}

py::list maximal_list(const SimplicialComplex& k) {
  py::list out;
  for (const Simplex& s : k.maximal_simplices()) out.append(k.label_set(s));
  return out;
}

}  // namespace

PYBIND11_MODULE(dowkerpy, m) {
  m.doc() = "Dowker complexes, weights, cosheaves and duality for binary relations";

  py::class_<Relation>(m, "Relation")
      .def(py::init<std::vector<std::string>, std::vector<std::string>,
                    const std::vector<std::vector<int>>&>(),
           py::arg("x_labels"), py::arg("y_labels"), py::arg("matrix"))
      .def_static("parse", [](const std::string& text) { return parse_relation(text); },
                  "Parse the text or JSON relation format.")
      .def_property_readonly("x_labels", &Relation::x_labels)
      .def_property_readonly("y_labels", &Relation::y_labels)
      .def("matrix", &Relation::matrix)
      .def("to_json", [](const Relation& r) { return serialize_relation_json(r); })
      .def("to_text", [](const Relation& r) { return format_relation_text(r); })
      .def("__eq__", [](const Relation& a, const Relation& b) { return a == b; })
      .def("__repr__", [](const Relation& r) {
        return "<Relation " + std::to_string(r.row_count()) + "x" +
               std::to_string(r.col_count()) + ">";
      });

  m.def("transpose", [](const Relation& r) { return transpose(r); });
  m.def("is_positive", &is_positive);
  m.def("empty_rows", &empty_rows);

  m.def(
      "dowker",
      [](const Relation& r) {
        SimplicialComplex k = dowker_complex(r);
        py::dict out;
        std::vector<std::string> verts;
        for (Vertex v : k.vertices()) verts.push_back(k.label(v));
        std::sort(verts.begin(), verts.end());
        out["vertices"] = verts;
        out["maximal_simplices"] = maximal_list(k);
        out["simplex_count"] = k.size();
        out["dimension"] = k.dimension();
        return out;
      },
      "Dowker complex of a relation: vertices, maximal simplices, counts.");

  m.def(
      "y_sigma",
      [](const Relation& r, const std::vector<std::string>& labels) {
        std::vector<Vertex> ids;
        for (const std::string& l : labels) ids.push_back(r.x_id(l));
        std::vector<std::string> out;
        for (int y : y_sigma(r, Simplex(ids))) out.push_back(r.y_label(y));
        return out;
      },
      py::arg("relation"), py::arg("rows"),
      "Common columns of a set of rows, by label ([] gives every column).");

  m.def("total_weight",
        [](const Relation& r) { return weight_dict(total_weight(r)); });
  m.def("differential_weight",
        [](const Relation& r) { return weight_dict(differential_weight(r)); });

  m.def(
      "reconstruct_from_differential",
      [](const Relation& r) {
        return reconstruct_from_differential(dowker_complex(r), differential_weight(r));
      },
      "Round-trip helper: rebuild a relation from its own differential weight.");

  m.def(
      "reconstruct_from_total",
      [](const Relation& r) {
        TotalReconstruction res =
            reconstruct_from_total(dowker_complex(r), total_weight(r));
        if (std::holds_alternative<NotRealizable>(res))
          throw py::value_error("weight function is not realizable");
        return std::get<Relation>(res);
      },
      "Round-trip helper: rebuild a relation from its own total weight.");

  m.def("same_up_to_column_bijection", &same_up_to_column_bijection);

  m.def("betti", [](const Relation& r) { return betti_numbers(dowker_complex(r)); },
        "GF(2) Betti numbers of the Dowker complex.");

  m.def(
      "check_duality",
      [](const Relation& r) {
        DualityCertificate c = check_dowker_duality(r);
        py::dict out;
        out["ok"] = c.ok;
        out["detail"] = c.detail;
        return out;
      },
      "Compare dual(rep cosheaf) with the rep cosheaf of the transpose.");

  m.def(
      "cosection_count",
      [](const Relation& r) { return global_cosections(coshv_rep0(r)).count(); },
      "Number of global cosections of the set-valued representation cosheaf.");

  m.def(
      "redundant_rows",
      [](const Relation& r) {
        RedundancyReport rep = redundant_rows(r);
        py::dict out;
        py::dict red;
        for (const auto& e : rep.redundant) red[py::str(e.row)] = e.witness;
        out["redundant"] = red;
        out["duplicates"] = rep.duplicates;
        return out;
      },
      "Rows dominated by another row (with a witness), plus duplicate groups.");

  m.def("drop_rows", &drop_rows, py::arg("relation"), py::arg("rows"));

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<MorphismError>(m, "MorphismError", PyExc_ValueError);
}
