#include "seifert/invariants.hpp"

#include "seifert/dedekind.hpp"
#include "seifert/plumbing.hpp"

namespace seifert {

namespace {

Rat dedekind_part(const SeifertData& s) {
    Rat sum(0);
    for (const auto& arm : s.arms) sum += dedekind_sum(-arm.omega, arm.alpha);
    return sum;
}

// -1 + lb - sum_i floor(-l omega_i / alpha_i), the l-th lattice defect.
Int dp_term(const SeifertData& s, const Int& l) {
    Int value = -1 + l * s.b;
    for (const auto& arm : s.arms) {
        Int q;
        Int num = -l * arm.omega;
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), arm.alpha.get_mpz_t());
        value -= q;
    }
    return value;
}

}  // namespace

Rat casson_walker(const SeifertData& s) {
    Rat inv_sq(0);
    for (const auto& arm : s.arms) inv_sq += make_rat(Int(1), arm.alpha * arm.alpha);
    Rat nu(static_cast<long>(s.nu()));
    Rat total = (Rat(2) - nu + inv_sq) / s.e + s.e + 3 + 12 * dedekind_part(s);
    return total * Rat(s.h_order) / 24;
}

Rat k_squared_plus_vertex_count(const SeifertData& s) {
    Rat inv(0);
    for (const auto& arm : s.arms) inv += make_rat(Int(1), arm.alpha);
    Rat nu(static_cast<long>(s.nu()));
    Rat base = Rat(2) - nu + inv;
    return base * base / s.e + s.e + 5 + 12 * dedekind_part(s);
}

Int dolgachev_pinkham(const SeifertData& s) {
    Int bound = rat_floor(Rat(static_cast<long>(s.nu()) - 2) / (-s.e));
    Int total(0);
    for (Int l(0); l <= bound; ++l) {
        Int value = dp_term(s, l);
        if (value > 0) total += value;
    }
    for (Int l = bound + 1; l <= bound + 10; ++l)
        if (dp_term(s, l) > 0)
            throw internal_error("lattice defect positive past the truncation bound");
    return total;
}

std::vector<Int> poincare_coefficients(const SeifertData& s, long terms) {
    if (terms < 0) throw invalid_input("term count must be non-negative");
    std::vector<Int> coeffs;
    coeffs.reserve(terms + 1);
    for (Int l(0); l <= terms; ++l) {
        Int value = -dp_term(s, l);  // 1 - lb + sum floor(-l omega/alpha)
        coeffs.push_back(value > 0 ? value : Int(0));
    }
    return coeffs;
}

Rat seiberg_witten(const SeifertData& s, const AbelianGroup& g, const SpincStructure& sigma,
                   FourierStrategy strategy) {
    return casson_walker(s) / Rat(s.h_order) + torsion_at_identity(s, g, sigma, strategy);
}

Rat gompf_theta(const SeifertData& s) { return k_squared_plus_vertex_count(s) - 2; }

IdentityCheck verify_identity(const SeifertData& s, const AbelianGroup& g,
                              FourierStrategy strategy) {
    IdentityCheck check;
    Rat torsion = torsion_at_identity(s, g, canonical_spinc(s, g), strategy);
    check.lhs = torsion + casson_walker(s) / Rat(s.h_order);
    check.rhs = k_squared_plus_vertex_count(s) / 8 + Rat(dolgachev_pinkham(s));
    check.equal = check.lhs == check.rhs;
    return check;
}

IdentityCheck verify_identity(const SeifertData& s) {
    AbelianGroup g = homology_group(s);
    return verify_identity(s, g);
}

Rat genus_bound_gap(const SeifertData& s, const AbelianGroup& g, const Rat& pg) {
    SpincStructure sigma = canonical_spinc(s, g);
    return seiberg_witten(s, g, sigma) - k_squared_plus_vertex_count(s) / 8 - pg;
}

InvariantReport compute_report(const SeifertData& s, FourierStrategy strategy) {
    InvariantReport r{.seifert = s,
                      .lambda = casson_walker(s),
                      .k2_plus_v_formula = k_squared_plus_vertex_count(s),
                      .k2_plus_v_graph = Rat(0),
                      .intersection_det_abs = Int(0),
                      .dp = dolgachev_pinkham(s),
                      .torsion_canonical = Rat(0),
                      .torsion_closed = torsion_closed_form(s),
                      .sw0_canonical = Rat(0),
                      .theta = gompf_theta(s),
                      .identity_lhs = Rat(0),
                      .identity_rhs = Rat(0),
                      .identity_holds = false,
                      .k2_paths_agree = false,
                      .torsion_paths_agree = false,
                      .det_matches_h = false};

    PlumbingGraph graph = plumbing_graph(s);
    r.k2_plus_v_graph = k_squared_plus_vertex_count(graph);
    r.intersection_det_abs = abs(determinant(intersection_matrix(graph)));

    AbelianGroup g = homology_group(s);
    r.torsion_canonical = torsion_at_identity(s, g, canonical_spinc(s, g), strategy);
    r.sw0_canonical = r.lambda / Rat(s.h_order) + r.torsion_canonical;

    r.identity_lhs = r.torsion_canonical + r.lambda / Rat(s.h_order);
    r.identity_rhs = r.k2_plus_v_formula / 8 + Rat(r.dp);
    r.identity_holds = r.identity_lhs == r.identity_rhs;
    r.k2_paths_agree = r.k2_plus_v_formula == r.k2_plus_v_graph;
    r.torsion_paths_agree = r.torsion_canonical == r.torsion_closed;
    r.det_matches_h = r.intersection_det_abs == s.h_order;
    return r;
}

}  // namespace seifert
