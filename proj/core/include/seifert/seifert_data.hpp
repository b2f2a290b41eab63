#pragma once

#include <cstddef>
#include <vector>

#include "seifert/rational.hpp"

namespace seifert {

// Unnormalized Seifert invariants ((alpha_i, beta_i)) of a Seifert fibered
// rational homology sphere over S^2.  Only negative orbifold Euler number
// (e < 0, singularity links) and at least three exceptional fibers are
// accepted.
struct UnnormalizedSeifert {
    struct Pair {
        Int alpha;
        Int beta;
    };
    std::vector<Pair> pairs;

    Rat euler_number() const;  // e = -sum beta_i / alpha_i
};

// Normalized Seifert invariants (b; (alpha_i, omega_i)) with
//   e = b + sum omega_i / alpha_i,   0 <= omega_i < alpha_i,
// plus the derived scalars used throughout:
//   chi      = 2 - sum (alpha_i - 1)/alpha_i      (orbifold Euler characteristic)
//   alpha    = lcm(alpha_1, ..., alpha_nu)
//   o        = alpha * |e|   (order of the class of the generic fiber in H)
//   h_order  = alpha_1 ... alpha_nu * |e| = |H_1(M, Z)|
struct SeifertData {
    struct Arm {
        Int alpha;
        Int omega;
    };
    Int b;
    std::vector<Arm> arms;

    Rat e;
    Rat chi;
    Int alpha_lcm;
    Int o;
    Int h_order;

    std::size_t nu() const { return arms.size(); }
};

// Validates and normalizes: omega_i = -beta_i mod alpha_i, b = e - sum omega/alpha.
// Rejects nu < 3, non-coprime pairs, and e >= 0, each with its own diagnostic.
SeifertData normalize(const UnnormalizedSeifert& u);

// Builds SeifertData directly from (b, (alpha_i, omega_i)); same validation.
SeifertData make_seifert(Int b, std::vector<SeifertData::Arm> arms);

// Seifert invariants of the Brieskorn sphere Sigma(a1, a2, a3): e = -1/(a1 a2 a3)
// and trivial first homology.  The exponents must be >= 2 and pairwise coprime.
UnnormalizedSeifert brieskorn_sphere(const Int& a1, const Int& a2, const Int& a3);

}  // namespace seifert
