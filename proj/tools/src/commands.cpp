#include "seifert/cli/commands.hpp"

#include <ostream>

#include "seifert/plumbing.hpp"
#include "seifert/torsion.hpp"

namespace seifert::cli {

using nlohmann::json;

Format parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "table") return Format::Table;
    if (name == "csv") return Format::Csv;
    throw invalid_input("unknown format '" + name + "' (expected json, table or csv)");
}

int run_normalize(const SeifertData& s, Format format, std::ostream& out) {
    if (format == Format::Table) {
        out << "b = " << s.b.get_str() << "\n";
        for (const auto& arm : s.arms)
            out << "(" << arm.alpha.get_str() << ", " << arm.omega.get_str() << ")\n";
        out << "e = " << rat_str(s.e) << ", |H| = " << s.h_order.get_str() << "\n";
        return 0;
    }
    out << seifert_json(s).dump(2) << "\n";
    return 0;
}

int run_invariants(const SeifertData& s, Format format, std::ostream& out) {
    InvariantReport r = compute_report(s);
    if (format == Format::Table)
        out << report_table(r);
    else
        out << report_json(r).dump(2) << "\n";
    return r.identity_holds && r.k2_paths_agree && r.torsion_paths_agree && r.det_matches_h ? 0
                                                                                            : 1;
}

int run_torsion(const SeifertData& s, const std::optional<std::vector<Int>>& spinc_word,
                bool all, Format format, std::ostream& out) {
    AbelianGroup g = homology_group(s);
    if (all) {
        std::vector<Rat> table = torsion_table(s, g);
        Rat sum(0);
        for (const Rat& value : table) sum += value;
        if (sum != 0) throw internal_error("torsion table does not sum to zero");
        if (format == Format::Table) {
            for (long idx = 0; idx < static_cast<long>(table.size()); ++idx) {
                GroupElement h = g.element_at(idx);
                out << "[";
                for (std::size_t j = 0; j < h.coords.size(); ++j)
                    out << (j ? "," : "") << h.coords[j].get_str();
                out << "]  " << rat_str(table[idx]) << "\n";
            }
            out << "sum  " << rat_str(sum) << "\n";
            return 0;
        }
        json rows = json::array();
        for (long idx = 0; idx < static_cast<long>(table.size()); ++idx) {
            GroupElement h = g.element_at(idx);
            json coords = json::array();
            for (const Int& c : h.coords) coords.push_back(c.get_si());
            rows.push_back({{"element", coords}, {"torsion", rat_str(table[idx])}});
        }
        out << json{{"rows", rows}, {"sum", rat_str(sum)}}.dump(2) << "\n";
        return 0;
    }

    SpincStructure sigma = spinc_word ? make_spinc(s, g, *spinc_word) : canonical_spinc(s, g);
    Rat value = torsion_at_identity(s, g, sigma);
    if (format == Format::Table) {
        out << rat_str(value) << "\n";
        return 0;
    }
    json word = json::array();
    for (const Int& a : sigma.word) word.push_back(a.get_str());
    out << json{{"word", word}, {"torsion", rat_str(value)}}.dump(2) << "\n";
    return 0;
}

int run_plumbing(const SeifertData& s, std::ostream& out) {
    out << to_dot(plumbing_graph(s));
    return 0;
}

int run_poincare(const SeifertData& s, long terms, Format format, std::ostream& out) {
    std::vector<Int> coeffs = poincare_coefficients(s, terms);
    if (format == Format::Table) {
        for (long l = 0; l <= terms; ++l)
            out << l << "  " << coeffs[l].get_str() << "\n";
        return 0;
    }
    json arr = json::array();
    for (const Int& c : coeffs) arr.push_back(c.get_str());
    out << json{{"coefficients", arr}}.dump(2) << "\n";
    return 0;
}

int run_verify(const SeifertData& s, Format format, std::ostream& out) {
    IdentityCheck check = verify_identity(s);
    if (format == Format::Table) {
        out << "lhs = " << rat_str(check.lhs) << "\nrhs = " << rat_str(check.rhs) << "\n"
            << (check.equal ? "equal" : "NOT EQUAL") << "\n";
    } else {
        out << json{{"lhs", rat_str(check.lhs)},
                    {"rhs", rat_str(check.rhs)},
                    {"verdict", check.equal ? "equal" : "not equal"}}
                   .dump(2)
            << "\n";
    }
    return check.equal ? 0 : 1;
}

int run_conjecture(const SeifertData& s, const Rat& pg, Format format, std::ostream& out) {
    AbelianGroup g = homology_group(s);
    Rat gap = genus_bound_gap(s, g, pg);
    if (format == Format::Table)
        out << "gap = " << rat_str(gap) << "\n";
    else
        out << json{{"pg", rat_str(pg)}, {"gap", rat_str(gap)}}.dump(2) << "\n";
    return 0;
}

int run_batch_verify(const BatchParams& params, Format format, std::ostream& out) {
    BatchResult result = run_batch(params);
    if (format == Format::Json) {
        json rows = json::array();
        for (const InvariantReport& r : result.reports) rows.push_back(report_json(r));
        out << json{{"rows", rows},
                    {"count", result.reports.size()},
                    {"failures", result.failures}}
                   .dump(2)
            << "\n";
    } else {
        out << batch_csv(result);
    }
    return result.failures == 0 ? 0 : 1;
}

}  // namespace seifert::cli
