#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "degenlift/census.hpp"
#include "degenlift/commands.hpp"
#include "degenlift/errors.hpp"
#include "degenlift/familyfile.hpp"
#include "degenlift/kuranishi.hpp"
#include "degenlift/lifter.hpp"
#include "degenlift/sheaf.hpp"

namespace py = pybind11;
using namespace degenlift;

namespace {

py::dict report_dict(const Report& r)
{
    py::dict out;
    for (const auto& sec : r.sections()) {
        py::dict d;
        for (const auto& [k, v] : sec.entries) {
            d[py::str(k)] = v;
        }
        out[py::str(sec.name)] = d;
    }
    return out;
}

py::dict census_dict(const CensusReport& r)
{
    py::dict d;
    for (const auto& [k, v] : r.entries) {
        d[py::str(k)] = v;
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact liftability checks for lines in toric degenerations";

    static py::exception<Error> base(m, "DegenliftError");
    static py::exception<ParseError> parse(m, "ParseError", base.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const ParseError& e) {
            py::set_error(parse, e.what());
        } catch (const Error& e) {
            py::set_error(base, e.what());
        }
    });

    py::class_<FamilySpec>(m, "Family")
        .def_property_readonly("degree", [](const FamilySpec& s) { return s.degree; })
        .def_property_readonly("coordinates", [](const FamilySpec& s) { return s.coordinates; })
        .def_property_readonly("params", [](const FamilySpec& s) { return s.params; })
        .def_property_readonly("f", [](const FamilySpec& s) { return s.f.str(); })
        .def("specialized",
             [](const FamilySpec& s, const std::map<std::string, std::string>& values) {
                 std::map<std::string, Rat> v;
                 for (const auto& [k, x] : values) {
                     v.emplace(k, Rat::parse(x));
                 }
                 return s.specialized(v);
             })
        .def("serialize", [](const FamilySpec& s) { return serialize_family(s); })
        .def("__eq__", [](const FamilySpec& a, const FamilySpec& b) { return a == b; });

    m.def("parse_family", [](const std::string& text) { return parse_family(text); });
    m.def("load_family", &load_family, py::arg("path"));

    m.def(
        "kuranishi",
        [](const FamilySpec& s, const std::string& line, const std::string& chart) {
            const KuranishiValue kv = kuranishi_first_order(
                s, parse_line_option(line, s.coordinates.size()), Decomposition::EdgeFirst, chart);
            py::list residues;
            for (const auto& rd : kv.residues) {
                py::dict d;
                d["point"] = point_str(rd.frame.point.point);
                d["b"] = rd.b.str();
                d["weight"] = rd.frame.weight().str();
                residues.append(d);
            }
            py::dict out;
            out["value"] = kv.value.str();
            out["vanishing_condition"] = kv.value.is_zero() ? "0" : kv.vanishing_condition.str();
            out["residues"] = residues;
            return out;
        },
        py::arg("family"), py::arg("line"), py::arg("chart") = "");

    m.def(
        "lift",
        [](const FamilySpec& s, const std::string& line, int order) {
            const LiftResult r = lift_solve(s, parse_line_option(line, s.coordinates.size()), order);
            py::dict coeffs;
            for (const auto& [k, v] : r.coefficients) {
                coeffs[py::str(k)] = v.str();
            }
            std::vector<std::string> ideal;
            for (const auto& p : r.obstruction_ideal) {
                ideal.push_back(p.str());
            }
            py::dict out;
            out["solved"] = r.status == LiftStatus::Solved;
            out["order"] = r.order;
            out["coefficients"] = coeffs;
            out["obstruction_ideal"] = ideal;
            return out;
        },
        py::arg("family"), py::arg("line"), py::arg("order"));

    m.def("quintic_census", [] { return census_dict(quintic_census()); });
    m.def("cubic_census", [](bool plane_quadric) {
        return census_dict(cubic_census(plane_quadric ? CubicMode::PlaneQuadric : CubicMode::ToricPlanes));
    }, py::arg("plane_quadric") = false);
    m.def("disk_profile", [](int n) {
        const DiskProfile d = disk_profile(n);
        py::dict out;
        out["profile"] = d.profile.str();
        out["family_dimension"] = d.family_dimension;
        out["h1"] = d.h1;
        return out;
    }, py::arg("n"));
    m.def("log_tangent_membership",
          [](const std::string& field) { return log_tangent_membership(parse_vector_field(field)); });

    // Same dispatch as the command-line tool; returns (report sections, exit code).
    m.def(
        "run",
        [](const std::string& command, std::optional<FamilySpec> family, int order,
           const std::string& line, bool partial, const std::string& census, int n) {
            CommandOptions o;
            o.order = order;
            o.line = line;
            o.partial = partial;
            o.census = census;
            o.n = n;
            const CommandOutcome out = run_command(command, family, o);
            return py::make_tuple(report_dict(out.report), out.exit_code);
        },
        py::arg("command"), py::arg("family") = std::nullopt, py::arg("order") = 1,
        py::arg("line") = "", py::arg("partial") = false, py::arg("census") = "",
        py::arg("n") = 3);
}
