#include "frobstrat/serialize.hpp"

namespace frobstrat {

nlohmann::json to_json(const LatticePolygon& pg) {
    auto out = nlohmann::json::array();
    for (const auto& v : pg.vertices()) out.push_back({v.rank, v.degree});
    return out;
}

nlohmann::json colengths_json(const ColengthProfile& profile) {
    auto out = nlohmann::json::object();
    for (const auto& [level, c] : profile.colengths) out["E" + std::to_string(level)] = c;
    return out;
}

nlohmann::json to_json(const StratumReport& row) {
    nlohmann::json out;
    out["polygon_id"] = row.polygon_id;
    out["vertices"] = to_json(row.polygon);
    out["fiber_dim"] = row.fiber_dim ? nlohmann::json(*row.fiber_dim) : nlohmann::json(nullptr);
    out["quot_dim"] = row.quot_dim ? nlohmann::json(*row.quot_dim) : nlohmann::json(nullptr);
    out["moduli_dim"] = row.moduli_dim;
    out["closure"] = row.closure_note;
    out["counts"] = {{"q=" + std::to_string(row.field_size), row.count_at_q},
                     {"closed_form", to_string(row.closed_form)}};
    return out;
}

nlohmann::json to_json(const FiberCensus& census) {
    nlohmann::json out;
    out["p"] = census.p;
    out["g"] = census.g;
    out["degL"] = census.degL;
    out["total"] = census.total;
    if (census.extrapolated) out["extrapolated"] = true;
    auto strict = nlohmann::json::object();
    auto closed = nlohmann::json::object();
    auto classes = nlohmann::json::array();
    for (const auto& c : census.classes) {
        strict[c.polygon_id] = c.count;
        closed[c.polygon_id + "+"] = c.closure_count;
        classes.push_back({{"polygon_id", c.polygon_id},
                           {"vertices", to_json(c.polygon)},
                           {"count", c.count},
                           {"closed_form", to_string(c.closed_form)},
                           {"closure_count", c.closure_count},
                           {"closure_closed_form", to_string(c.closure_closed_form)},
                           {"fiber_dim", c.closed_form.degree()}});
    }
    out["strict"] = strict;
    out["closed"] = closed;
    out["classes"] = classes;
    return out;
}

std::string vertices_tsv(const LatticePolygon& pg) {
    std::string out;
    for (const auto& v : pg.vertices()) {
        if (!out.empty()) out += ";";
        out += std::to_string(v.rank) + "," + std::to_string(v.degree);
    }
    return out;
}

std::string to_string(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace frobstrat
