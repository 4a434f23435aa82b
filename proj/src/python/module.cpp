#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "quotcount/boxcounting.hpp"
#include "quotcount/invariants.hpp"
#include "quotcount/partitions.hpp"
#include "quotcount/power_series.hpp"

namespace py = pybind11;
using namespace quotcount;

namespace {

// Exact big integers cross the boundary as decimal strings.
py::int_ to_py(const mpz_class& z) {
  PyObject* value = PyLong_FromString(z.get_str().c_str(), nullptr, 10);
  if (!value) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(value);
}

py::list to_py(const std::vector<mpz_class>& values) {
  py::list out;
  for (const mpz_class& z : values) out.append(to_py(z));
  return out;
}

py::list series_to_py(const PowerSeries& s) { return to_py(s.coefficients()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact enumerative series of punctual Quot schemes";

  py::class_<HeightConfig>(m, "HeightConfig")
      .def(py::init([](bool leg, const std::vector<std::tuple<int, int, int>>& cells) {
             std::vector<Cell> converted;
             for (const auto& [a, b, h] : cells) converted.push_back({a, b, h});
             return HeightConfig(leg, std::move(converted));
           }),
           py::arg("leg"), py::arg("cells"))
      .def_property_readonly("leg", &HeightConfig::leg)
      .def_property_readonly("volume", &HeightConfig::volume)
      .def_property_readonly("cells",
                             [](const HeightConfig& c) {
                               std::vector<std::tuple<int, int, int>> out;
                               for (const Cell& cell : c.cells())
                                 out.emplace_back(cell.a, cell.b, cell.h);
                               return out;
                             })
      .def("height_at", &HeightConfig::height_at, py::arg("a"), py::arg("b"))
      .def("to_text", &HeightConfig::to_text)
      .def("__eq__",
           [](const HeightConfig& x, const HeightConfig& y) { return x == y; })
      .def("__repr__", [](const HeightConfig& c) {
        return "<HeightConfig n=" + std::to_string(c.volume()) +
               (c.leg() ? " leg" : " plain") + ">";
      });

  m.def(
      "macmahon", [](int order) { return series_to_py(macmahon(order)); },
      py::arg("order"), "Coefficients 0..order of the MacMahon function M(q).");

  m.def(
      "partitions_of",
      [](int j) {
        std::vector<std::vector<int>> out;
        for (const Partition& p : partitions_of(j)) out.push_back(p.parts());
        return out;
      },
      py::arg("j"), "All partitions of j in reverse-lexicographic order.");

  m.def(
      "aut_order",
      [](const std::vector<int>& parts) {
        return to_py(Partition(parts).aut_order());
      },
      py::arg("parts"),
      "Order of the symmetry group of a partition: the product of the "
      "factorials of its multiplicities.");

  m.def("count_one_leg", &count_one_leg, py::arg("n"));
  m.def("count_plane_partitions", &count_plane_partitions, py::arg("n"));
  m.def("local_model_dt", &local_model_dt, py::arg("n"));
  m.def("enumerate_one_leg", &enumerate_one_leg, py::arg("n"));
  m.def("enumerate_plane_partitions", &enumerate_plane_partitions, py::arg("n"));

  m.def(
      "hilb_series",
      [](long long chi, int order) { return series_to_py(hilb_series(chi, order)); },
      py::arg("chi"), py::arg("order"),
      "Coefficients of M(q)^chi, the Hilbert-scheme Euler characteristic "
      "series of a space with Euler characteristic chi.");

  m.def(
      "chi_F", [](int j) { return to_py(chi_F(j)); }, py::arg("j"),
      "Fixed-point count of the j-th punctual piece of the local model.");

  m.def(
      "config_space_euler",
      [](long long e, int r) { return to_py(config_space_euler(e, r)); },
      py::arg("e"), py::arg("r"),
      "Euler characteristic of r distinct ordered points on a space with "
      "Euler characteristic e.");

  m.def(
      "chi_quot_stratified",
      [](long long chi_y, int genus, int n) {
        return to_py(chi_quot_stratified(CurveSetup(chi_y, genus, n), n));
      },
      py::arg("chi_y"), py::arg("genus"), py::arg("n"),
      "chi of the n-th punctual Quot scheme by the stratified sum.");

  m.def(
      "chi_quot_series",
      [](long long chi_y, int genus, int order) {
        return series_to_py(chi_quot_series(CurveSetup(chi_y, genus, order)));
      },
      py::arg("chi_y"), py::arg("genus"), py::arg("order"),
      "Coefficients of M(q)^chi_y (1-q)^(2g-2).");

  m.def(
      "weighted_chi_quot_series",
      [](long long chi_y, int genus, int order) {
        return series_to_py(
            weighted_chi_quot_series(CurveSetup(chi_y, genus, order)));
      },
      py::arg("chi_y"), py::arg("genus"), py::arg("order"),
      "Coefficients of M(-q)^chi_y (1+q)^(2g-2).");

  m.def(
      "pt_series",
      [](int genus, long long bps, int order) {
        return series_to_py(pt_series(CurveSetup(0, genus, order, bps)));
      },
      py::arg("genus"), py::arg("bps"), py::arg("order"),
      "Coefficients of bps * (1+q)^(2g-2).");

  m.def(
      "sym_series",
      [](int genus, int order) {
        return series_to_py(sym_series(CurveSetup(0, genus, order)));
      },
      py::arg("genus"), py::arg("order"),
      "Coefficients of (1-q)^(2g-2), the symmetric-product series.");

  m.def(
      "dt_series",
      [](long long chi_y, int genus, long long bps, int order) {
        return series_to_py(
            dt_series_conjectural(CurveSetup(chi_y, genus, order, bps)));
      },
      py::arg("chi_y"), py::arg("genus"), py::arg("bps"), py::arg("order"),
      "Coefficients of M(-q)^chi_y * bps * (1+q)^(2g-2).");

  m.def(
      "local_model_series",
      [](int order) { return series_to_py(local_model_series(order)); },
      py::arg("order"), "Coefficients of q M(-q)/(1+q).");

  m.def(
      "check_wallcross",
      [](long long chi_y, int genus, long long bps, int order) {
        const InvariantReport report =
            check_wallcross(CurveSetup(chi_y, genus, order, bps));
        py::dict out;
        out["dt"] = to_py(report.coefficients);
        out["bps_weighted"] = to_py(report.cross_check->coefficients);
        out["verdict"] = report.cross_check->verdict;
        return out;
      },
      py::arg("chi_y"), py::arg("genus"), py::arg("bps"), py::arg("order"),
      "Both routes of the wall-crossing identity and their agreement.");
}
