#pragma once

/**
 * @file report.hpp
 * @brief Curve reports and survey rows, with JSON, text and CSV renderings.
 *
 * Reports are plain data so that JSON output round-trips field for field.
 */

#include "cliffsemi/scroll.hpp"
#include "cliffsemi/semigroup.hpp"
#include "cliffsemi/sheaf.hpp"
#include "cliffsemi/solvers.hpp"

#include <json.hpp>

#include <atomic>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace cliffsemi {

inline constexpr int report_schema_version = 1;
inline constexpr int survey_csv_version = 1;

struct SemigroupSummary {
    std::vector<int> min_generators;
    std::vector<int> gaps;
    int frobenius = -1;
    int multiplicity = 1;
    int conductor = 0;
    int genus = 0;
    bool gorenstein = false;
    bool nearly_normal = false;

    friend bool operator==(const SemigroupSummary&, const SemigroupSummary&) = default;
};

struct SheafSummary {
    std::vector<int> exponents;
    int h0 = 0;
    int h1 = 0;
    int deg = 0;
    int cliff = 0;
    std::optional<int> scd;
    bool invertible = false;
    bool bpf = false;

    friend bool operator==(const SheafSummary&, const SheafSummary&) = default;
};

struct CurveReport {
    SemigroupSummary semigroup;
    int gonality = 0;
    std::vector<int> gonality_witnesses;
    /// Empty when the Clifford index is undefined (genus <= 3, gonality > 2).
    std::optional<int> clifford;
    std::optional<int> clifford_dimension;
    std::vector<SheafSummary> computing_sheaves;
    std::vector<SheafSummary> dimension_witnesses;
    TrigonalClass trigonal;
    std::vector<RelationCheck> relation_checks;
    std::vector<int> canonical_exponents;
    std::vector<int> realizing_exponents;
    /// Set when the naive oracle was run alongside the main solver.
    std::optional<bool> oracle_agrees;

    friend bool operator==(const CurveReport&, const CurveReport&) = default;
};

inline SemigroupSummary summarize(const NumericalSemigroup& s) {
    return SemigroupSummary{s.min_generators(), s.gaps(), s.frobenius(), s.multiplicity(),
                            s.conductor(),      s.genus(), is_gorenstein(s), is_nearly_normal(s)};
}

inline SheafSummary summarize(const MonomialSheaf& f) {
    const auto& inv = f.invariants();
    return SheafSummary{f.exponents(), inv.h0, inv.h1, inv.degree, inv.clifford, inv.scrollar_dim,
                        inv.invertible, inv.base_point_free};
}

/// True when both results agree on value, dimension and the set of computing sheaves.
inline bool same_clifford(const CliffordResult& a, const CliffordResult& b) {
    if (a.clifford != b.clifford || a.clifford_dimension != b.clifford_dimension) return false;
    if (a.computing_sheaves.size() != b.computing_sheaves.size()) return false;
    for (std::size_t i = 0; i < a.computing_sheaves.size(); ++i)
        if (!(a.computing_sheaves[i].key() == b.computing_sheaves[i].key())) return false;
    return true;
}

struct AnalyzeOptions {
    int jobs = 1;
    bool with_oracle = false;
};

/**
 * Full analysis of one curve. An undefined Clifford index leaves the Clifford
 * fields empty; the rest of the report is still filled in.
 */
inline CurveReport analyze_curve(const NumericalSemigroup& s, const AnalyzeOptions& opt = {}) {
    if (s.is_smooth()) throw error(errc::smooth_curve, "genus 0 has no singular point");
    CurveReport r;
    r.semigroup = summarize(s);
    const auto gon = gonality(s);
    r.gonality = gon.gonality;
    r.gonality_witnesses = gon.witnesses;
    r.trigonal = classify_trigonal(s);
    r.canonical_exponents = canonical_exponents(s);
    r.realizing_exponents = realizing_curve_exponents(s);

    std::optional<CliffordResult> cl;
    try {
        cl = clifford_of_curve(s, CliffordOptions{opt.jobs, {}});
    } catch (const error& e) {
        if (e.code() != errc::clifford_undefined) throw;
    }
    if (cl) {
        r.clifford = cl->clifford;
        r.clifford_dimension = cl->clifford_dimension;
        for (const auto& f : cl->computing_sheaves) r.computing_sheaves.push_back(summarize(f));
        for (const auto& f : cl->dimension_witnesses) r.dimension_witnesses.push_back(summarize(f));
        r.relation_checks = relations_report(s, gon, *cl);
    }
    if (opt.with_oracle) {
        std::optional<CliffordResult> brute;
        try {
            brute = clifford_brute_oracle(s, s.genus());
        } catch (const error& e) {
            if (e.code() != errc::clifford_undefined) throw;
        }
        r.oracle_agrees = cl.has_value() == brute.has_value() && (!cl || same_clifford(*cl, *brute));
    }
    return r;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

namespace detail {

template <class T>
nlohmann::json optional_json(const std::optional<T>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <class T>
std::optional<T> optional_from(const nlohmann::json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<T>();
}

inline nlohmann::json to_json(const SheafSummary& f) {
    return {{"exponents", f.exponents}, {"h0", f.h0},    {"h1", f.h1},
            {"deg", f.deg},             {"cliff", f.cliff}, {"scd", optional_json(f.scd)},
            {"invertible", f.invertible}, {"bpf", f.bpf}};
}

inline SheafSummary sheaf_from_json(const nlohmann::json& j) {
    return SheafSummary{j.at("exponents").get<std::vector<int>>(),
                        j.at("h0").get<int>(),
                        j.at("h1").get<int>(),
                        j.at("deg").get<int>(),
                        j.at("cliff").get<int>(),
                        optional_from<int>(j.at("scd")),
                        j.at("invertible").get<bool>(),
                        j.at("bpf").get<bool>()};
}

} // namespace detail

inline nlohmann::json to_json(const CurveReport& r) {
    nlohmann::json sheaves = nlohmann::json::array();
    for (const auto& f : r.computing_sheaves) sheaves.push_back(detail::to_json(f));
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& f : r.dimension_witnesses) witnesses.push_back(detail::to_json(f));
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.relation_checks) checks.push_back({{"name", c.name}, {"holds", c.holds}});
    const auto& s = r.semigroup;
    return {
        {"schema_version", report_schema_version},
        {"semigroup",
         {{"min_generators", s.min_generators},
          {"gaps", s.gaps},
          {"frobenius", s.frobenius},
          {"multiplicity", s.multiplicity},
          {"conductor", s.conductor},
          {"genus", s.genus},
          {"gorenstein", s.gorenstein},
          {"nearly_normal", s.nearly_normal}}},
        {"gonality", r.gonality},
        {"gonality_witnesses", r.gonality_witnesses},
        {"clifford", r.clifford ? nlohmann::json(*r.clifford) : nlohmann::json("undefined")},
        {"clifford_dimension", detail::optional_json(r.clifford_dimension)},
        {"computing_sheaves", sheaves},
        {"dimension_witnesses", witnesses},
        {"trigonal_class",
         {{"kind", to_string(r.trigonal.kind)}, {"alpha", r.trigonal.alpha}, {"k", r.trigonal.k}, {"l", r.trigonal.l}}},
        {"relation_checks", checks},
        {"canonical_exponents", r.canonical_exponents},
        {"realizing_exponents", r.realizing_exponents},
        {"oracle_agrees", detail::optional_json(r.oracle_agrees)},
    };
}

inline CurveReport report_from_json(const nlohmann::json& j) {
    if (j.at("schema_version").get<int>() != report_schema_version)
        throw error(errc::invalid_input, "unsupported schema_version");
    CurveReport r;
    const auto& s = j.at("semigroup");
    r.semigroup = SemigroupSummary{s.at("min_generators").get<std::vector<int>>(),
                                   s.at("gaps").get<std::vector<int>>(),
                                   s.at("frobenius").get<int>(),
                                   s.at("multiplicity").get<int>(),
                                   s.at("conductor").get<int>(),
                                   s.at("genus").get<int>(),
                                   s.at("gorenstein").get<bool>(),
                                   s.at("nearly_normal").get<bool>()};
    r.gonality = j.at("gonality").get<int>();
    r.gonality_witnesses = j.at("gonality_witnesses").get<std::vector<int>>();
    if (const auto& c = j.at("clifford"); c.is_number_integer()) r.clifford = c.get<int>();
    r.clifford_dimension = detail::optional_from<int>(j.at("clifford_dimension"));
    for (const auto& f : j.at("computing_sheaves")) r.computing_sheaves.push_back(detail::sheaf_from_json(f));
    for (const auto& f : j.at("dimension_witnesses")) r.dimension_witnesses.push_back(detail::sheaf_from_json(f));
    const auto& t = j.at("trigonal_class");
    auto kind = trigonal_kind_from_string(t.at("kind").get<std::string>());
    if (!kind) throw error(errc::invalid_input, "unknown trigonal class");
    r.trigonal = TrigonalClass{*kind, t.at("alpha").get<int>(), t.at("k").get<int>(), t.at("l").get<int>()};
    for (const auto& c : j.at("relation_checks"))
        r.relation_checks.push_back({c.at("name").get<std::string>(), c.at("holds").get<bool>()});
    r.canonical_exponents = j.at("canonical_exponents").get<std::vector<int>>();
    r.realizing_exponents = j.at("realizing_exponents").get<std::vector<int>>();
    r.oracle_agrees = detail::optional_from<bool>(j.at("oracle_agrees"));
    return r;
}

// ---------------------------------------------------------------------------
// Text
// ---------------------------------------------------------------------------

namespace detail {

inline std::string join(const std::vector<int>& v, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

inline std::string sheaf_label(const std::vector<int>& exps) {
    std::string out = "O<1";
    for (int e : exps) out += ",t^" + std::to_string(e);
    return out + ">";
}

inline std::string describe(const TrigonalClass& t) {
    using K = TrigonalClass::Kind;
    std::string out = to_string(t.kind);
    if (t.kind == K::pattern_i)
        out += "(alpha=" + std::to_string(t.alpha) + ",k=" + std::to_string(t.k) + ",l=" + std::to_string(t.l) + ")";
    else if (t.kind == K::pattern_ii)
        out += "(alpha=" + std::to_string(t.alpha) + ",k=" + std::to_string(t.k) + ")";
    return out;
}

} // namespace detail

inline std::string render_text(const CurveReport& r) {
    std::ostringstream o;
    const auto& s = r.semigroup;
    o << "semigroup     <" << detail::join(s.min_generators) << ">\n"
      << "gaps          {" << detail::join(s.gaps) << "}\n"
      << "genus         " << s.genus << "\n"
      << "frobenius     " << s.frobenius << "\n"
      << "conductor     " << s.conductor << "\n"
      << "multiplicity  " << s.multiplicity << "\n"
      << "gorenstein    " << (s.gorenstein ? "true" : "false") << "\n"
      << "nearly normal " << (s.nearly_normal ? "true" : "false") << "\n"
      << "gonality      " << r.gonality << "  via";
    for (int a : r.gonality_witnesses) o << " O<1,t^" << a << ">";
    o << "\n";
    if (r.clifford) {
        o << "clifford      " << *r.clifford << "\n"
          << "cliffd        " << *r.clifford_dimension << "\n"
          << "computing sheaves (" << r.computing_sheaves.size() << ")\n";
        for (const auto& f : r.computing_sheaves)
            o << "  " << detail::sheaf_label(f.exponents) << "  deg " << f.deg << "  h0 " << f.h0 << "  h1 " << f.h1
              << (f.invertible ? "  invertible" : "  non-invertible") << "\n";
        o << "dimension witnesses\n";
        for (const auto& f : r.dimension_witnesses) o << "  " << detail::sheaf_label(f.exponents) << "\n";
    } else {
        o << "clifford      undefined\n"
          << "cliffd        undefined\n";
    }
    o << "trigonal      " << detail::describe(r.trigonal) << "\n";
    if (!r.relation_checks.empty()) {
        o << "relations\n";
        for (const auto& c : r.relation_checks) o << "  " << (c.holds ? "ok   " : "FAIL ") << c.name << "\n";
    }
    o << "canonical     (";
    for (std::size_t i = 0; i < r.canonical_exponents.size(); ++i)
        o << (i ? ":" : "") << (r.canonical_exponents[i] == 0 ? "1" : "t^" + std::to_string(r.canonical_exponents[i]));
    o << ")\n"
      << "model         (1";
    for (int e : r.realizing_exponents) o << ":t^" << e;
    o << ")\n";
    if (r.oracle_agrees) o << "oracle        " << (*r.oracle_agrees ? "agrees" : "DISAGREES") << "\n";
    return o.str();
}

// ---------------------------------------------------------------------------
// Survey rows
// ---------------------------------------------------------------------------

struct SurveyRow {
    SemigroupSummary semigroup;
    bool smooth = false;
    std::optional<int> gonality;
    std::optional<int> clifford;
    std::optional<int> clifford_dimension;
    std::optional<TrigonalClass> trigonal;
    /// False when some relation check failed.
    bool relations_hold = true;

    std::optional<bool> cliff_eq_gon_minus_3() const {
        if (!clifford || !gonality) return std::nullopt;
        return *clifford == *gonality - 3;
    }
};

inline SurveyRow survey_row(const NumericalSemigroup& s) {
    SurveyRow row;
    row.semigroup = summarize(s);
    if (s.is_smooth()) {
        row.smooth = true;
        return row;
    }
    const auto gon = gonality(s);
    row.gonality = gon.gonality;
    row.trigonal = classify_trigonal(s);
    try {
        const auto cl = clifford_of_curve(s);
        row.clifford = cl.clifford;
        row.clifford_dimension = cl.clifford_dimension;
        for (const auto& c : relations_report(s, gon, cl)) row.relations_hold = row.relations_hold && c.holds;
    } catch (const error& e) {
        if (e.code() != errc::clifford_undefined) throw;
    }
    return row;
}

/// One row per semigroup of genus <= max_genus, in tree order, computed on `jobs` threads.
inline std::vector<SurveyRow> survey(int max_genus, int jobs = 1) {
    const auto semigroups = enumerate_semigroups(max_genus);
    std::vector<SurveyRow> rows(semigroups.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < semigroups.size(); i = next++) rows[i] = survey_row(semigroups[i]);
    };
    {
        std::vector<std::jthread> pool;
        for (int j = 0; j < std::max(1, jobs); ++j) pool.emplace_back(worker);
    }
    return rows;
}

namespace detail {

/// RFC 4180 field quoting.
inline std::string csv_field(const std::string& f) {
    if (f.find_first_of(",\"\r\n") == std::string::npos) return f;
    std::string out = "\"";
    for (char c : f) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string cell(const std::optional<int>& v, const SurveyRow& row) {
    if (row.smooth) return "smooth";
    return v ? std::to_string(*v) : "undefined";
}

} // namespace detail

inline std::string survey_csv_header() {
    return "# cliffsemi survey v" + std::to_string(survey_csv_version) + "\r\n" +
           "genus,generators,gaps,gorenstein,gon,cliff,cliffd,trigonal_class,cliff_eq_gon_minus_3\r\n";
}

inline std::string survey_csv_line(const SurveyRow& row) {
    const auto& s = row.semigroup;
    std::string eq;
    if (row.smooth) eq = "smooth";
    else if (auto v = row.cliff_eq_gon_minus_3()) eq = *v ? "true" : "false";
    else eq = "undefined";
    std::vector<std::string> f{std::to_string(s.genus),
                               detail::join(s.min_generators),
                               detail::join(s.gaps),
                               s.gorenstein ? "true" : "false",
                               detail::cell(row.gonality, row),
                               detail::cell(row.clifford, row),
                               detail::cell(row.clifford_dimension, row),
                               row.smooth ? "smooth" : to_string(row.trigonal->kind),
                               eq};
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + detail::csv_field(f[i]);
    return out + "\r\n";
}

inline nlohmann::json to_json(const SurveyRow& row) {
    auto cell = [&](const std::optional<int>& v) {
        if (row.smooth) return nlohmann::json("smooth");
        return v ? nlohmann::json(*v) : nlohmann::json("undefined");
    };
    const auto eq = row.cliff_eq_gon_minus_3();
    return {{"genus", row.semigroup.genus},
            {"generators", row.semigroup.min_generators},
            {"gaps", row.semigroup.gaps},
            {"gorenstein", row.semigroup.gorenstein},
            {"gon", cell(row.gonality)},
            {"cliff", cell(row.clifford)},
            {"cliffd", cell(row.clifford_dimension)},
            {"trigonal_class", row.smooth ? "smooth" : to_string(row.trigonal->kind)},
            {"cliff_eq_gon_minus_3", eq ? nlohmann::json(*eq) : nlohmann::json(nullptr)},
            {"relations_hold", row.relations_hold}};
}

} // namespace cliffsemi
