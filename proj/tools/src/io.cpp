#include "seifert/cli/io.hpp"

#include <sstream>

namespace seifert::cli {

using nlohmann::json;

namespace {

Int int_field(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw invalid_input(path + ": not a decimal integer string");
        }
    }
    throw invalid_input(path + ": expected an integer (number or decimal string)");
}

std::vector<std::pair<Int, Int>> pair_list(const json& j, const std::string& path) {
    if (!j.is_array()) throw invalid_input(path + ": expected an array of pairs");
    std::vector<std::pair<Int, Int>> pairs;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string at = path + "[" + std::to_string(i) + "]";
        if (!j[i].is_array() || j[i].size() != 2)
            throw invalid_input(at + ": expected a pair [a, b]");
        pairs.emplace_back(int_field(j[i][0], at + "[0]"), int_field(j[i][1], at + "[1]"));
    }
    return pairs;
}

}  // namespace

InputDocument parse_input(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& err) {
        throw invalid_input(std::string("JSON syntax error: ") + err.what());
    }
    if (!j.is_object()) throw invalid_input("top level: expected an object");

    int shapes = static_cast<int>(j.contains("unnormalized")) +
                 static_cast<int>(j.contains("normalized")) +
                 static_cast<int>(j.contains("brieskorn"));
    if (shapes != 1)
        throw invalid_input(
            "top level: exactly one of 'unnormalized', 'normalized', 'brieskorn' is required");

    InputDocument doc;
    if (j.contains("unnormalized")) {
        doc.kind = InputDocument::Kind::Unnormalized;
        for (auto& [alpha, beta] : pair_list(j["unnormalized"], "unnormalized"))
            doc.unnormalized.pairs.push_back({alpha, beta});
        return doc;
    }
    if (j.contains("normalized")) {
        doc.kind = InputDocument::Kind::Normalized;
        const json& n = j["normalized"];
        if (!n.is_object()) throw invalid_input("normalized: expected an object");
        if (!n.contains("b")) throw invalid_input("normalized.b: missing");
        if (!n.contains("pairs")) throw invalid_input("normalized.pairs: missing");
        doc.b = int_field(n["b"], "normalized.b");
        for (auto& [alpha, omega] : pair_list(n["pairs"], "normalized.pairs"))
            doc.arms.push_back({alpha, omega});
        return doc;
    }
    doc.kind = InputDocument::Kind::Brieskorn;
    const json& b = j["brieskorn"];
    if (!b.is_array() || b.size() != 3)
        throw invalid_input("brieskorn: expected exactly three exponents");
    for (int i = 0; i < 3; ++i)
        doc.brieskorn[i] = int_field(b[i], "brieskorn[" + std::to_string(i) + "]");
    return doc;
}

SeifertData to_seifert(const InputDocument& doc) {
    switch (doc.kind) {
        case InputDocument::Kind::Unnormalized:
            return normalize(doc.unnormalized);
        case InputDocument::Kind::Normalized:
            return make_seifert(doc.b, doc.arms);
        case InputDocument::Kind::Brieskorn:
            return normalize(brieskorn_sphere(doc.brieskorn[0], doc.brieskorn[1], doc.brieskorn[2]));
    }
    throw internal_error("unhandled input kind");
}

namespace {

json int_json(const Int& value) {
    if (value.fits_slong_p()) return json(value.get_si());
    return json(value.get_str());
}

}  // namespace

json seifert_json(const SeifertData& s) {
    json pairs = json::array();
    for (const auto& arm : s.arms) pairs.push_back({int_json(arm.alpha), int_json(arm.omega)});
    return json{{"b", int_json(s.b)},
                {"pairs", pairs},
                {"e", rat_str(s.e)},
                {"chi", rat_str(s.chi)},
                {"alpha_lcm", int_json(s.alpha_lcm)},
                {"o", int_json(s.o)},
                {"h_order", int_json(s.h_order)}};
}

json report_json(const InvariantReport& r) {
    return json{{"seifert", seifert_json(r.seifert)},
                {"casson_walker", rat_str(r.lambda)},
                {"k2_plus_v", rat_str(r.k2_plus_v_formula)},
                {"k2_plus_v_graph", rat_str(r.k2_plus_v_graph)},
                {"intersection_det_abs", int_json(r.intersection_det_abs)},
                {"dp", int_json(r.dp)},
                {"torsion_canonical", rat_str(r.torsion_canonical)},
                {"torsion_closed_form", rat_str(r.torsion_closed)},
                {"sw0_canonical", rat_str(r.sw0_canonical)},
                {"gompf_theta", rat_str(r.theta)},
                {"identity",
                 {{"lhs", rat_str(r.identity_lhs)},
                  {"rhs", rat_str(r.identity_rhs)},
                  {"equal", r.identity_holds}}},
                {"cross_checks",
                 {{"k2_paths_agree", r.k2_paths_agree},
                  {"torsion_paths_agree", r.torsion_paths_agree},
                  {"det_matches_h", r.det_matches_h}}}};
}

std::string report_table(const InvariantReport& r) {
    std::ostringstream out;
    const SeifertData& s = r.seifert;
    out << "Seifert invariants   b = " << s.b.get_str() << ",";
    for (const auto& arm : s.arms)
        out << " (" << arm.alpha.get_str() << "," << arm.omega.get_str() << ")";
    out << "\n";
    out << "e                    " << rat_str(s.e) << "\n";
    out << "|H|                  " << s.h_order.get_str() << "   (o = " << s.o.get_str() << ")\n";
    out << "lambda               " << rat_str(r.lambda) << "\n";
    out << "K^2 + #V             " << rat_str(r.k2_plus_v_formula) << "   (graph: "
        << rat_str(r.k2_plus_v_graph) << ")\n";
    out << "DP                   " << r.dp.get_str() << "\n";
    out << "torsion (canonical)  " << rat_str(r.torsion_canonical) << "   (closed form: "
        << rat_str(r.torsion_closed) << ")\n";
    out << "sw0 (canonical)      " << rat_str(r.sw0_canonical) << "\n";
    out << "Gompf theta          " << rat_str(r.theta) << "\n";
    out << "identity             " << rat_str(r.identity_lhs) << " = " << rat_str(r.identity_rhs)
        << "  ->  " << (r.identity_holds ? "equal" : "NOT EQUAL") << "\n";
    return out.str();
}

}  // namespace seifert::cli
