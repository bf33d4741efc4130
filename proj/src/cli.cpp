#include "frobstrat/cli.hpp"

#include <charconv>
#include <cstdint>
#include <vector>

#include "CLI11.hpp"

#include "frobstrat/degrees.hpp"
#include "frobstrat/local_frobenius.hpp"
#include "frobstrat/polygons.hpp"
#include "frobstrat/serialize.hpp"
#include "frobstrat/strata.hpp"

namespace frobstrat {

namespace {

enum class Format { json, tsv };

struct CliConfig {
    std::int64_t p = 3;
    std::int64_t g = 2;
    std::int64_t r = 3;
    std::int64_t d = 0;
    std::int64_t degL = -1;
    std::vector<std::int64_t> lambda;
    Format format = Format::json;
    std::optional<std::size_t> precision;
    bool parallel = false;
};

void emit_json(std::ostream& out, const nlohmann::json& j) { out << j.dump() << "\n"; }

std::string polygon_id_in(std::int64_t p, std::int64_t g, const LatticePolygon& pg) {
    if (pg.segment_count() >= 2 && pg.rank() >= 2 && pg.degree() % p == 0) {
        const auto set = enumerate_frobenius_polygons(p, g, pg.rank(), pg.degree() / p);
        if (std::ranges::find(set.polygons, pg) != set.polygons.end()) return polygon_label(set, pg);
    }
    return "general";
}

int cmd_polygons(const CliConfig& cfg, std::ostream& out) {
    const auto set = enumerate_frobenius_polygons(cfg.p, cfg.g, cfg.r, cfg.d);
    if (cfg.format == Format::tsv) {
        out << "polygon_id\tvertices\n";
        for (const auto& pg : set.polygons) out << polygon_label(set, pg) << "\t" << vertices_tsv(pg) << "\n";
        return 0;
    }
    auto arr = nlohmann::json::array();
    for (const auto& pg : set.polygons) arr.push_back({{"polygon_id", polygon_label(set, pg)}, {"vertices", to_json(pg)}});
    emit_json(out, arr);
    return 0;
}

int cmd_classify(const CliConfig& cfg, std::ostream& out) {
    if (cfg.lambda.empty()) throw Error(ErrorCode::InvalidParameters, "classify needs --lambda");
    const LocalContext ctx(cfg.p, cfg.precision);
    const FiberPoint v(ctx.modulus(), cfg.lambda);
    const auto res = fiber_polygon(ctx, v, cfg.g, cfg.degL);
    const auto id = polygon_id_in(cfg.p, cfg.g, res.polygon);
    if (cfg.format == Format::tsv) {
        out << "polygon_id\tvertices";
        for (const auto& [level, c] : res.profile.colengths) out << "\tE" << level;
        out << "\n" << id << "\t" << vertices_tsv(res.polygon);
        for (const auto& [level, c] : res.profile.colengths) out << "\t" << c;
        out << "\n";
        return 0;
    }
    nlohmann::json j{{"polygon_id", id}, {"vertices", to_json(res.polygon)}, {"colengths", colengths_json(res.profile)}};
    if (res.extrapolated) j["extrapolated"] = true;
    emit_json(out, j);
    return 0;
}

int cmd_fiber_census(const CliConfig& cfg, std::ostream& out) {
    const auto census = fiber_census(cfg.p, cfg.g, cfg.degL, cfg.precision, cfg.parallel);
    if (cfg.format == Format::tsv) {
        out << "polygon_id\tvertices\tcount\tclosed_form\tclosure_count\tclosure_closed_form\n";
        for (const auto& c : census.classes)
            out << c.polygon_id << "\t" << vertices_tsv(c.polygon) << "\t" << c.count << "\t"
                << to_string(c.closed_form) << "\t" << c.closure_count << "\t" << to_string(c.closure_closed_form)
                << "\n";
        return 0;
    }
    emit_json(out, to_json(census));
    return 0;
}

int cmd_strata_table(const CliConfig& cfg, std::ostream& out) {
    const auto rows = stratum_table(CurveContext{cfg.p, cfg.g, cfg.r, cfg.d, cfg.degL});
    auto opt = [](const std::optional<std::int64_t>& x) { return x ? std::to_string(*x) : std::string("-"); };
    if (cfg.format == Format::tsv) {
        out << "polygon_id\tvertices\tfiber_dim\tquot_dim\tmoduli_dim\tcount\tclosed_form\n";
        for (const auto& row : rows)
            out << row.polygon_id << "\t" << vertices_tsv(row.polygon) << "\t" << opt(row.fiber_dim) << "\t"
                << opt(row.quot_dim) << "\t" << row.moduli_dim << "\t" << row.count_at_q << "\t"
                << to_string(row.closed_form) << "\n";
        return 0;
    }
    auto arr = nlohmann::json::array();
    for (const auto& row : rows) arr.push_back(to_json(row));
    emit_json(out, arr);
    return 0;
}

int cmd_canonical_polygon(const CliConfig& cfg, std::ostream& out) {
    const auto pg = canonical_polygon(cfg.p, cfg.g, cfg.r, cfg.d);
    const auto dim = canonical_stratum_dim(cfg.r, cfg.g);
    std::vector<std::string> slope_text;
    for (const auto& s : slopes(pg)) slope_text.push_back(to_string(s));
    if (cfg.format == Format::tsv) {
        out << "vertices\tslopes\tstratum_dim\n" << vertices_tsv(pg) << "\t";
        for (std::size_t i = 0; i < slope_text.size(); ++i) out << (i ? "," : "") << slope_text[i];
        out << "\t" << dim << "\n";
        return 0;
    }
    emit_json(out, {{"vertices", to_json(pg)}, {"slopes", slope_text}, {"stratum_dim", dim}});
    return 0;
}

int cmd_verify_claims(const CliConfig& cfg, std::ostream& out) {
    const auto results = verify_membership_claims(LocalContext(cfg.p, cfg.precision));
    bool all = true;
    auto verdict = [](const ClaimResult& c) {
        return std::string(c.passed() ? "pass" : "FAIL") + " (" + std::to_string(c.agreeing) + "/" +
               std::to_string(c.total) + " points)";
    };
    if (cfg.format == Format::tsv) out << "claim\tresult\n";
    auto arr = nlohmann::json::array();
    for (const auto& c : results) {
        all = all && c.passed();
        if (cfg.format == Format::tsv)
            out << c.label << "\t" << verdict(c) << "\n";
        else
            arr.push_back({{"claim", c.label}, {"result", verdict(c)}});
    }
    if (cfg.format == Format::json) emit_json(out, arr);
    return all ? 0 : 2;
}

std::optional<std::size_t> parse_precision(const std::string& text) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw Error(ErrorCode::InvalidParameters, "FROBSTRAT_PRECISION is not a non-negative integer: " + text);
    return value;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
            std::optional<std::string> precision_env) {
    CliConfig cfg;
    CLI::App app{"Frobenius stratification toolkit: HN polygons of Frobenius pull-backs and Quot fiber strata",
                 "frobstrat"};
    app.require_subcommand(1);

    std::string format = "json";
    std::optional<std::size_t> precision_flag;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-p", cfg.p, "characteristic (prime)")->capture_default_str();
        sub->add_option("-g", cfg.g, "genus")->capture_default_str();
        sub->add_option("-r", cfg.r, "rank")->capture_default_str();
        sub->add_option("-d", cfg.d, "degree")->capture_default_str();
        sub->add_option("--degL", cfg.degL, "degree of the pushed-forward line bundle")->capture_default_str();
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "tsv"}))->capture_default_str();
        sub->add_option("--precision", precision_flag, "series precision N (>= 2p)");
    };

    struct Command {
        const char* name;
        const char* help;
        int (*fn)(const CliConfig&, std::ostream&);
    };
    const Command commands[] = {
        {"polygons", "enumerate admissible HN polygons of Frobenius pull-backs", cmd_polygons},
        {"classify", "classify the Quot fiber point named by --lambda", cmd_classify},
        {"fiber-census", "count Quot fiber points per HN polygon", cmd_fiber_census},
        {"strata-table", "Quot and moduli stratum dimensions", cmd_strata_table},
        {"canonical-polygon", "canonical polygon and its stratum dimension", cmd_canonical_polygon},
        {"verify-claims", "check the tau-power membership statements over the whole fiber", cmd_verify_claims},
    };
    std::vector<std::pair<CLI::App*, const Command*>> subs;
    for (const auto& c : commands) {
        auto* sub = app.add_subcommand(c.name, c.help);
        add_common(sub);
        subs.emplace_back(sub, &c);
    }
    subs[1].first->add_option("--lambda", cfg.lambda, "projective coordinates a,b,c,...")->delimiter(',');
    subs[2].first->add_flag("--parallel", cfg.parallel, "classify fiber points on several threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 1;
    }

    try {
        cfg.format = format == "tsv" ? Format::tsv : Format::json;
        if (precision_flag)
            cfg.precision = precision_flag;
        else if (precision_env && !precision_env->empty())
            cfg.precision = parse_precision(*precision_env);
        for (const auto& [sub, cmd] : subs)
            if (sub->parsed()) return cmd->fn(cfg, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::InvariantViolation ? 2 : 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    err << app.help();
    return 1;
}

}  // namespace frobstrat
