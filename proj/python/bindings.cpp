#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "frobstrat/degrees.hpp"
#include "frobstrat/local_frobenius.hpp"
#include "frobstrat/polygons.hpp"
#include "frobstrat/serialize.hpp"
#include "frobstrat/strata.hpp"

namespace py = pybind11;
using namespace frobstrat;

namespace {

py::object to_python(const nlohmann::json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null: return py::none();
        case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
        case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
        case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
        case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& x : j) out.append(to_python(x));
            return out;
        }
        case nlohmann::json::value_t::object: {
            py::dict out;
            for (const auto& [k, v] : j.items()) out[py::str(k)] = to_python(v);
            return out;
        }
        default: return py::none();
    }
}

py::object fraction(const Rational& q) {
    return py::module_::import("fractions").attr("Fraction")(q.numerator(), q.denominator());
}

LatticePolygon polygon_from(const std::vector<std::pair<std::int64_t, std::int64_t>>& pts) {
    std::vector<Vertex> v;
    for (auto [r, d] : pts) v.push_back({r, d});
    return make_polygon(v);
}

std::vector<std::pair<std::int64_t, std::int64_t>> vertex_pairs(const LatticePolygon& pg) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (const auto& v : pg.vertices()) out.emplace_back(v.rank, v.degree);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Frobenius stratification bookkeeping";

    // messages start with the error code name, e.g. "NotConvex: ..."
    py::register_exception<Error>(m, "FrobstratError", PyExc_ValueError);

    py::class_<LatticePolygon>(m, "LatticePolygon")
        .def(py::init(&polygon_from), py::arg("points"))
        .def_property_readonly("vertices", &vertex_pairs)
        .def_property_readonly("rank", &LatticePolygon::rank)
        .def_property_readonly("degree", &LatticePolygon::degree)
        .def("slopes", [](const LatticePolygon& pg) {
            py::list out;
            for (const auto& s : slopes(pg)) out.append(fraction(s));
            return out;
        })
        .def("__eq__", [](const LatticePolygon& a, const LatticePolygon& b) { return a == b; })
        .def("__hash__", [](const LatticePolygon& pg) { return py::hash(py::tuple(py::cast(vertex_pairs(pg)))); })
        .def("__repr__", [](const LatticePolygon& pg) {
            std::ostringstream os;
            os << "LatticePolygon(" << pg << ")";
            return os.str();
        });

    m.def("enumerate_frobenius_polygons", [](std::int64_t p, std::int64_t g, std::int64_t r, std::int64_t d) {
        const auto set = enumerate_frobenius_polygons(p, g, r, d);
        py::list out;
        for (const auto& pg : set.polygons) out.append(py::make_tuple(polygon_label(set, pg), pg));
        return out;
    }, py::arg("p"), py::arg("g"), py::arg("r"), py::arg("d"),
          "Admissible HN polygons as (label, polygon) pairs, in domination-compatible order.");
    m.def("dominates", &dominates, py::arg("a"), py::arg("b"));
    m.def("dual_polygon", &dual_polygon, py::arg("polygon"));
    m.def("canonical_polygon", &canonical_polygon, py::arg("p"), py::arg("g"), py::arg("r"), py::arg("d"));
    m.def("is_canonical", &is_canonical, py::arg("polygon"), py::arg("p"), py::arg("g"));

    m.def("pushforward_type", [](std::int64_t r, std::int64_t d, std::int64_t p, std::int64_t g) {
        const auto t = pushforward_type(r, d, p, g);
        return py::make_tuple(t.rank, t.degree);
    }, py::arg("r"), py::arg("d"), py::arg("p"), py::arg("g"));
    m.def("filtration_degrees", [](std::int64_t p, std::int64_t g, std::int64_t degL) {
        std::vector<std::int64_t> out;
        for (const auto& piece : filtration_degrees(p, g, degL)) out.push_back(piece.degree);
        return out;
    }, py::arg("p"), py::arg("g"), py::arg("degL"));
    m.def("sun_slope_bound", [](std::int64_t p, std::int64_t g, std::int64_t degL, std::int64_t rk) {
        return fraction(sun_slope_bound(p, g, degL, rk));
    }, py::arg("p"), py::arg("g"), py::arg("degL"), py::arg("rank"));
    m.def("canonical_stratum_dim", &canonical_stratum_dim, py::arg("r"), py::arg("g"));
    m.def("b1_splits", &b1_splits, py::arg("p"), py::arg("g"));

    m.def("colength", [](std::int64_t p, const std::vector<std::int64_t>& lambda, std::int64_t level,
                         std::optional<std::size_t> precision) {
        const LocalContext ctx(p, precision);
        return colength(ctx, FiberPoint(ctx.modulus(), lambda), level);
    }, py::arg("p"), py::arg("lam"), py::arg("level"), py::arg("precision") = py::none());
    m.def("classify", [](const std::vector<std::int64_t>& lambda, std::int64_t p, std::int64_t g,
                         std::int64_t degL, std::optional<std::size_t> precision) {
        const LocalContext ctx(p, precision);
        const auto res = fiber_polygon(ctx, FiberPoint(ctx.modulus(), lambda), g, degL);
        py::dict out;
        out["polygon"] = res.polygon;
        out["colengths"] = res.profile.colengths;
        out["d_sub"] = res.profile.d_sub;
        out["extrapolated"] = res.extrapolated;
        return out;
    }, py::arg("lam"), py::arg("p") = 3, py::arg("g") = 2, py::arg("degL") = -1,
          py::arg("precision") = py::none(),
          "HN polygon of F^*E for the Quot fiber point (lambda_0 : ... : lambda_{p-1}).");
    m.def("fiber_census", [](std::int64_t p, std::int64_t g, std::int64_t degL, bool parallel) {
        return to_python(to_json(fiber_census(p, g, degL, std::nullopt, parallel)));
    }, py::arg("p") = 3, py::arg("g") = 2, py::arg("degL") = -1, py::arg("parallel") = false);
    m.def("stratum_table", [](std::int64_t p, std::int64_t g, std::int64_t r, std::int64_t d, std::int64_t degL) {
        py::list out;
        for (const auto& row : stratum_table(CurveContext{p, g, r, d, degL})) out.append(to_python(to_json(row)));
        return out;
    }, py::arg("p") = 3, py::arg("g") = 2, py::arg("r") = 3, py::arg("d") = 0, py::arg("degL") = -1);
    m.def("verify_claims", [](std::int64_t p) {
        py::list out;
        for (const auto& c : verify_membership_claims(LocalContext(p)))
            out.append(py::make_tuple(c.label, c.agreeing, c.total));
        return out;
    }, py::arg("p") = 3);
}
