/**
 * @file cliffsemi.cpp
 * @brief Command-line front end: analyze, scroll, survey, oracle.
 *
 * Exit codes: 0 ok, 1 parse or usage error, 2 undefined Clifford index or
 * smooth input, 3 internal assertion.
 */

#include "cliffsemi.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace cs = cliffsemi;

namespace {

struct InputSpec {
    std::string positional;
    std::string gens;
    std::string gaps;
    std::optional<int> plane;
    std::optional<int> nonplanar;
};

struct RunConfig {
    InputSpec input;
    std::string format = "text";
    std::optional<int> max_genus;
    int jobs = 1;
    bool with_oracle = false;
    std::string sheaf;
    std::string pencil;
};

int exit_code_for(cs::errc e) {
    switch (e) {
        case cs::errc::clifford_undefined:
        case cs::errc::smooth_curve: return 2;
        case cs::errc::internal_assertion:
        case cs::errc::chain_consistency: return 3;
        default: return 1;
    }
}

/// --max-genus, else CLIFFSEMI_MAX_GENUS, else the built-in default.
int genus_cap(const RunConfig& cfg) {
    if (cfg.max_genus) return *cfg.max_genus;
    if (const char* env = std::getenv("CLIFFSEMI_MAX_GENUS")) {
        const auto v = cs::parse_int_list(env);
        if (v.size() != 1 || v[0] < 0) throw cs::error(cs::errc::invalid_input, "CLIFFSEMI_MAX_GENUS must be one integer");
        return v[0];
    }
    return cs::default_genus_cap;
}

cs::NumericalSemigroup resolve_input(const RunConfig& cfg) {
    const auto& in = cfg.input;
    const int given = !in.positional.empty() + !in.gens.empty() + !in.gaps.empty() + in.plane.has_value() +
                      in.nonplanar.has_value();
    if (given == 0) throw cs::error(cs::errc::empty_input, "no semigroup given");
    if (given > 1) throw cs::error(cs::errc::invalid_input, "give exactly one semigroup input");

    std::optional<cs::NumericalSemigroup> s;
    if (!in.positional.empty()) s = cs::parse_semigroup(in.positional);
    else if (!in.gens.empty()) s = cs::NumericalSemigroup::from_generators(cs::parse_int_list(in.gens));
    else if (!in.gaps.empty()) s = cs::NumericalSemigroup::from_gaps(cs::parse_int_list(in.gaps));
    else if (in.plane) s = cs::plane_closed_form(*in.plane).semigroup;
    else s = cs::nonplanar_semigroup(*in.nonplanar);

    const int cap = genus_cap(cfg);
    if (s->genus() > cap)
        throw cs::error(cs::errc::genus_too_large,
                        "genus " + std::to_string(s->genus()) + " exceeds the cap " + std::to_string(cap));
    return *s;
}

int cmd_analyze(const RunConfig& cfg) {
    const auto s = resolve_input(cfg);
    const auto report = cs::analyze_curve(s, cs::AnalyzeOptions{cfg.jobs, cfg.with_oracle});
    std::string out;
    if (cfg.format == "json") {
        out = cs::to_json(report).dump(2) + "\n";
    } else if (cfg.format == "csv") {
        out = cs::survey_csv_header() + cs::survey_csv_line(cs::survey_row(s));
    } else {
        out = cs::render_text(report);
    }
    std::cout << out;
    if (report.oracle_agrees && !*report.oracle_agrees) return 3;
    for (const auto& c : report.relation_checks)
        if (!c.holds) return 3;
    return report.clifford ? 0 : 2;
}

int cmd_scroll(const RunConfig& cfg) {
    const auto s = resolve_input(cfg);
    const auto f = cs::MonomialSheaf::make(s, cs::parse_int_list(cfg.sheaf));
    const auto uv = cs::parse_int_list(cfg.pencil);
    if (uv.size() != 2) throw cs::error(cs::errc::invalid_pencil, "--pencil takes exactly two exponents u,v");
    const cs::Pencil p(f, uv[0], uv[1]);
    const auto m = cs::pencil_matrix(p);
    const auto t = cs::scroll_type(p);

    std::string out;
    if (cfg.format == "json") {
        nlohmann::json j = {{"schema_version", cs::report_schema_version},
                            {"sheaf", f.exponents()},
                            {"pencil", {p.u(), p.v()}},
                            {"hom_exponents", m.column_exponents},
                            {"matrix", cs::to_string(m)},
                            {"scroll", cs::to_string(t)},
                            {"invariants", t.invariants},
                            {"dim", t.dim},
                            {"degree", t.degree_e},
                            {"ambient", t.ambient},
                            {"nonstandard_pencil", !p.standard()}};
        out = j.dump(2) + "\n";
    } else {
        out = "sheaf   " + f.to_string() + "\n" + "pencil  (" + std::to_string(p.u()) + "," + std::to_string(p.v()) +
              ")" + (p.standard() ? "" : "  nonstandard_pencil") + "\n" + "matrix  " + cs::to_string(m) + "\n" +
              "scroll  " + cs::to_string(t) + "\n";
    }
    std::cout << out;
    return 0;
}

int cmd_survey(const RunConfig& cfg) {
    const int cap = genus_cap(cfg);
    if (cap > cs::default_genus_cap)
        throw cs::error(cs::errc::genus_too_large, "survey is limited to genus " + std::to_string(cs::default_genus_cap));
    const auto rows = cs::survey(cap, cfg.jobs);
    std::string out;
    if (cfg.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) arr.push_back(cs::to_json(r));
        out = nlohmann::json{{"schema_version", cs::report_schema_version}, {"rows", arr}}.dump(2) + "\n";
    } else {
        out = cs::survey_csv_header();
        for (const auto& r : rows) out += cs::survey_csv_line(r);
    }
    std::cout << out;
    for (const auto& r : rows)
        if (!r.relations_hold) return 3;
    return 0;
}

/// Main solver against the naive oracle, plus formula checks on every visited sheaf.
int cmd_oracle(const RunConfig& cfg) {
    constexpr int oracle_cap = 8;
    const int cap = genus_cap(cfg);
    if (cap > oracle_cap)
        throw cs::error(cs::errc::genus_too_large, "oracle is limited to genus " + std::to_string(oracle_cap));
    long long checked = 0;
    long long mismatches = 0;
    long long sheaves = 0;
    std::string log;
    cs::for_each_semigroup(cap, [&](const cs::NumericalSemigroup& s) {
        if (s.is_smooth()) return;
        ++checked;
        std::optional<cs::CliffordResult> fast, brute;
        cs::CliffordOptions opt;
        opt.on_visit = [&](const cs::SheafCandidate& c) {
            ++sheaves;
            (void)cs::clifford_index(cs::MonomialSheaf::from_key(s, cs::sheaf_key{c.mask, c.a_max}));
        };
        try {
            fast = cs::clifford_of_curve(s, opt);
        } catch (const cs::error& e) {
            if (e.code() != cs::errc::clifford_undefined) throw;
        }
        try {
            brute = cs::clifford_brute_oracle(s, s.genus());
        } catch (const cs::error& e) {
            if (e.code() != cs::errc::clifford_undefined) throw;
        }
        const bool ok = fast.has_value() == brute.has_value() && (!fast || cs::same_clifford(*fast, *brute));
        if (!ok) {
            ++mismatches;
            log += "mismatch <" + cs::detail::join(s.min_generators()) + ">\n";
        }
    });
    std::cout << log << "semigroups " << checked << "  sheaves " << sheaves << "  mismatches " << mismatches << "\n"
              << (mismatches == 0 ? "PASS" : "FAIL") << "\n";
    return mismatches == 0 ? 0 : 3;
}

void add_input_options(CLI::App* sub, RunConfig& cfg, bool families) {
    sub->add_option("semigroup", cfg.input.positional, "generators \"5,9,13\" or \"gaps:1,2\"");
    sub->add_option("--gens", cfg.input.gens, "minimal or redundant generators a,b,c");
    sub->add_option("--gaps", cfg.input.gaps, "gap set g1,g2,...");
    if (families) {
        sub->add_option("--plane-family", cfg.input.plane, "plane curve <alpha, alpha+1>");
        sub->add_option("--nonplanar-family", cfg.input.nonplanar, "<alpha, 2alpha-1, ..., alpha^2-alpha+1>");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clifford index, gonality and scrolls of unicuspidal monomial curves"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* analyze = app.add_subcommand("analyze", "full invariant report for one curve");
    add_input_options(analyze, cfg, true);
    analyze->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json", "csv"}));
    analyze->add_option("--max-genus", cfg.max_genus, "genus safety cap")->check(CLI::NonNegativeNumber);
    analyze->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    analyze->add_flag("--with-oracle", cfg.with_oracle, "cross-check with the naive oracle");

    auto* scroll = app.add_subcommand("scroll", "pencil matrix and scroll type of a pencil in a sheaf");
    add_input_options(scroll, cfg, true);
    scroll->add_option("--sheaf", cfg.sheaf, "sheaf exponents a1,...,an of O<1,t^a1,...>")->required();
    scroll->add_option("--pencil", cfg.pencil, "global sections u,v")->required();
    scroll->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));
    scroll->add_option("--max-genus", cfg.max_genus)->check(CLI::NonNegativeNumber);

    auto* survey = app.add_subcommand("survey", "one row per semigroup up to the genus cap");
    survey->add_option("--max-genus", cfg.max_genus)->check(CLI::NonNegativeNumber);
    survey->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json", "csv"}));
    survey->add_option("--jobs", cfg.jobs)->check(CLI::PositiveNumber);

    auto* oracle = app.add_subcommand("oracle", "main solver against the naive oracle");
    oracle->add_option("--max-genus", cfg.max_genus)->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*analyze) return cmd_analyze(cfg);
        if (*scroll) return cmd_scroll(cfg);
        if (*survey) return cmd_survey(cfg);
        return cmd_oracle(cfg);
    } catch (const cs::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
