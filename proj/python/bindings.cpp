#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dsheaf/report.hpp"
#include "dsheaf/shimura.hpp"

namespace py = pybind11;
using namespace dsheaf;

namespace {

Discriminant make_disc(const Field& f, const std::vector<int>& degrees,
                       const std::vector<std::string>& polys,
                       const std::optional<Place>& avoid) {
  if (!degrees.empty() && !polys.empty()) {
    throw domain_error("give degrees or polynomials, not both");
  }
  if (!degrees.empty()) {
    return Discriminant::from_degrees(f, degrees, avoid);
  }
  PlaceSet places;
  for (const std::string& text : polys) {
    places.push_back(Place::finite(f, parse_poly(f, text)));
  }
  return Discriminant::make(f, std::move(places));
}

std::optional<Place> maybe_place(const Field& f,
                                 const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  return parse_place(f, *text);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact invariants of modular curves of D-elliptic sheaves";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const domain_error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const resource_error& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    }
  });

  // Counts and values cross the boundary as decimal strings so they stay
  // exact; the python wrapper turns them back into int/Fraction.
  m.def(
      "count_places_of_degree",
      [](int q, int degree) {
        Field f = Field::from_order(q);
        return count_places_of_degree(f, degree).str();
      },
      py::arg("q"), py::arg("degree"));

  m.def(
      "places",
      [](int q, int max_degree, bool include_infinity) {
        Field f = Field::from_order(q);
        std::vector<std::pair<std::string, int>> out;
        for (const Place& x : enumerate_places(f, max_degree, include_infinity)) {
          out.emplace_back(place_str(f, x), x.degree());
        }
        return out;
      },
      py::arg("q"), py::arg("max_degree"), py::arg("include_infinity") = true);

  m.def(
      "genus",
      [](int q, const std::vector<int>& degrees,
         const std::vector<std::string>& polys) {
        Field f = Field::from_order(q);
        return genus(f, make_disc(f, degrees, polys, std::nullopt)).str();
      },
      py::arg("q"), py::arg("degrees") = std::vector<int>{},
      py::arg("polys") = std::vector<std::string>{});

  m.def(
      "chi",
      [](int q, const std::vector<int>& degrees,
         const std::vector<std::string>& polys,
         const std::optional<std::string>& level, int level_exp) {
        Field f = Field::from_order(q);
        Discriminant r = make_disc(f, degrees, polys, std::nullopt);
        if (!level) return chi_bare(f, r).str();
        Place x = Place::finite(f, parse_poly(f, *level));
        return chi_level(f, r, LevelIdeal::make(f, {{x, level_exp}})).str();
      },
      py::arg("q"), py::arg("degrees") = std::vector<int>{},
      py::arg("polys") = std::vector<std::string>{},
      py::arg("level") = std::nullopt, py::arg("level_exp") = 1);

  m.def(
      "classify",
      [](int q, const std::vector<int>& degrees,
         const std::vector<std::string>& polys) {
        Field f = Field::from_order(q);
        Classification c = classify(f, make_disc(f, degrees, polys, std::nullopt));
        py::dict out;
        out["genus_zero"] = c.genus_zero;
        out["hyperelliptic"] = to_string(c.hyperelliptic);
        return out;
      },
      py::arg("q"), py::arg("degrees") = std::vector<int>{},
      py::arg("polys") = std::vector<std::string>{});

  m.def(
      "invariants_json",
      [](int q, const std::vector<int>& degrees,
         const std::vector<std::string>& polys,
         const std::optional<std::string>& o) {
        Field f = Field::from_order(q);
        std::optional<Place> place = maybe_place(f, o);
        Discriminant r = make_disc(f, degrees, polys, place);
        return report_to_json(compute_report(f, r, place));
      },
      py::arg("q"), py::arg("degrees") = std::vector<int>{},
      py::arg("polys") = std::vector<std::string>{},
      py::arg("o") = std::nullopt);

  m.def(
      "scan_json",
      [](int q, const std::string& o, int max_disc_degree,
         const std::optional<int>& cardinality) {
        Field f = Field::from_order(q);
        return reports_to_json(
            optimality_scan(f, parse_place(f, o), max_disc_degree, cardinality));
      },
      py::arg("q"), py::arg("o"), py::arg("max_disc_degree"),
      py::arg("cardinality") = std::nullopt);

  m.def(
      "table_json",
      [](int q, const std::string& o, int max_genus,
         const std::optional<std::string>& reference_path) {
        Field f = Field::from_order(q);
        std::optional<std::vector<ReferenceRow>> reference;
        if (reference_path) reference = load_reference(*reference_path);
        return emit_comparison_table(f, parse_place(f, o), max_genus, reference,
                                     Format::json);
      },
      py::arg("q"), py::arg("o"), py::arg("max_genus") = 50,
      py::arg("reference_path") = std::nullopt);

  m.def(
      "shimura_genus",
      [](std::int64_t d) { return shimura_genus(d).str(); }, py::arg("d"));

  m.def(
      "zeta_constants",
      [](int q) {
        auto [zeta_z, zeta_a] = zeta_constants(q);
        return std::make_pair(rat_str(zeta_z), rat_str(zeta_a));
      },
      py::arg("q"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
