#pragma once

#include <vector>

#include "seifert/abelian_group.hpp"
#include "seifert/rational.hpp"
#include "seifert/seifert_data.hpp"
#include "seifert/torsion.hpp"

namespace seifert {

// Casson-Walker invariant lambda(M) with Lescop's normalization:
//   24 lambda / |H| = (1/e)(2 - nu + sum 1/alpha_i^2) + e + 3
//                     + 12 sum_i s(-omega_i, alpha_i).
Rat casson_walker(const SeifertData& s);

// K^2 + #vertices directly from the Seifert invariants:
//   (1/e)(2 - nu + sum 1/alpha_i)^2 + e + 5 + 12 sum_i s(-omega_i, alpha_i).
// The plumbing-graph adjunction solve is the independent oracle for this.
Rat k_squared_plus_vertex_count(const SeifertData& s);

// Lattice point count sum_{l >= 0} max(0, -1 + lb - sum_i floor(-l omega_i/alpha_i));
// equals the geometric genus for singularities with good C*-action.  Terms
// vanish for l > (nu-2)/|e|; a ten-term tail past the bound is audited.
Int dolgachev_pinkham(const SeifertData& s);

// Coefficients max(0, 1 - lb + sum_i floor(-l omega_i/alpha_i)) of the graded
// ring's Poincare series, for l = 0..terms.
std::vector<Int> poincare_coefficients(const SeifertData& s, long terms);

// Modified Seiberg-Witten invariant sw0(sigma) = lambda/|H| + T_{M,sigma}(1).
Rat seiberg_witten(const SeifertData& s, const AbelianGroup& g, const SpincStructure& sigma,
                   FourierStrategy strategy = FourierStrategy::Auto);

// Gompf invariant of the canonical contact structure: K^2 + #V - 2.
Rat gompf_theta(const SeifertData& s);

struct IdentityCheck {
    Rat lhs;  // T_{M,sigma_can}(1) + lambda/|H|
    Rat rhs;  // (K^2 + #V)/8 + DP
    bool equal;
};

IdentityCheck verify_identity(const SeifertData& s, const AbelianGroup& g,
                              FourierStrategy strategy = FourierStrategy::Auto);
IdentityCheck verify_identity(const SeifertData& s);

// sw0(sigma_can) - (K^2 + #V)/8 - pg; zero whenever pg is the geometric genus
// of a singularity with good C*-action bounding M.
Rat genus_bound_gap(const SeifertData& s, const AbelianGroup& g, const Rat& pg);

// Everything about one manifold, plus the cross-checks between the
// independent computation paths.
struct InvariantReport {
    SeifertData seifert;
    Rat lambda;
    Rat k2_plus_v_formula;
    Rat k2_plus_v_graph;
    Int intersection_det_abs;
    Int dp;
    Rat torsion_canonical;
    Rat torsion_closed;
    Rat sw0_canonical;
    Rat theta;
    Rat identity_lhs;
    Rat identity_rhs;
    bool identity_holds;
    bool k2_paths_agree;
    bool torsion_paths_agree;
    bool det_matches_h;
};

InvariantReport compute_report(const SeifertData& s,
                               FourierStrategy strategy = FourierStrategy::Auto);

}  // namespace seifert
