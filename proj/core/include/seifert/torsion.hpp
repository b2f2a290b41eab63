#pragma once

#include <vector>

#include "seifert/abelian_group.hpp"
#include "seifert/cyclotomic.hpp"
#include "seifert/rational.hpp"
#include "seifert/seifert_data.hpp"

namespace seifert {

// A spin^c structure on M, recorded as h_sigma * sigma_can for the group
// element h_sigma = g_0^{a_0} g_1^{a_1} ... g_nu^{a_nu}.  The exponent word
// is kept (the equivariant series depends on it); every torsion value
// depends only on the reduced element.
struct SpincStructure {
    std::vector<Int> word;  // a_0, ..., a_nu
    GroupElement h;
    Rat a_tilde;  // alpha * (a_0 + sum a_i / alpha_i)
};

SpincStructure make_spinc(const SeifertData& s, const AbelianGroup& g,
                          std::vector<Int> word);
SpincStructure canonical_spinc(const SeifertData& s, const AbelianGroup& g);

// Fourier coefficient of the torsion at a nontrivial character: the limit
// as t -> 1 of
//   (t^alpha chi(g_0) - 1)^{nu-2} / prod_i (t^{alpha/alpha_i} chi(g_i) - 1).
// The limit is finite and is evaluated by case analysis on which factors
// vanish at t = 1 (see the implementation notes).
Cyclotomic torsion_fourier_coefficient(const SeifertData& s, const AbelianGroup& g,
                                       const Character& chi);

enum class FourierStrategy {
    Auto,          // per-character for small H, folded otherwise
    PerCharacter,  // literal character sum in Q(zeta_m)
    Folded,        // same sum collapsed through orthogonality (rational arithmetic)
};

// Torsion evaluated at the identity of the group ring:
//   T_{M,sigma}(1) = (1/|H|) sum_{chi != 1} conj(chi)(h_sigma) * (Fourier coefficient).
Rat torsion_at_identity(const SeifertData& s, const AbelianGroup& g,
                        const SpincStructure& sigma,
                        FourierStrategy strategy = FourierStrategy::Auto);

// T_{M, h.sigma_can}(1) for every h in H, indexed by AbelianGroup::element_index.
std::vector<Rat> torsion_table(const SeifertData& s, const AbelianGroup& g,
                               FourierStrategy strategy = FourierStrategy::Auto);

// Dedekind-sum route to T_{M,sigma_can}(1): the two Laurent expansions at
// t = 1 share their pole parts, so the limit collapses to
//   DP + (2 - chi)/4 + sum_i s(-omega_i, alpha_i) - E.
// Entirely independent of the character-sum route.
Rat torsion_closed_form(const SeifertData& s);

// Laurent data of a series at t = 1, written against powers of (t^o - 1).
struct LaurentData {
    Rat pole2;     // coefficient of (t^o - 1)^{-2}
    Rat pole1;     // coefficient of (t^o - 1)^{-1}
    Rat constant;  // constant term
};

// Expansion of sum_{l >= 0} (1 - lb + sum_i floor(-l omega_i / alpha_i)) t^{ol}:
//   (-e, -e - chi/2, (2 - chi)/4 + sum_i s(-omega_i, alpha_i)).
LaurentData poincare_series_laurent(const SeifertData& s);

// Constant term E of the expansion of the universal-abelian-cover series
// P_1(t)/|H| at t = 1 (its pole parts agree with poincare_series_laurent).
Rat abelian_cover_series_constant(const SeifertData& s);

// Coefficients max(0, 1 + a_0 - lb + sum_i floor((-l omega_i + a_i)/alpha_i))
// of the equivariant series for l in [lo, hi].  For the canonical structure
// these are the Poincare series coefficients (and vanish for l < 0).
std::vector<std::pair<Int, Int>> equivariant_coefficients(const SeifertData& s,
                                                          const SpincStructure& sigma,
                                                          const Int& lo, const Int& hi);

namespace detail {

// sum_{r=1}^{o-1} zeta_o^{rj} (zeta_o^r - 1)^{-2}, in closed form.  The
// building block of the folded evaluation; exposed for its tests.
Rat cotangent_sum(const Int& o, const Int& j);

// 1/(zeta_m^k - 1) via the telescoping expansion (1/d) sum (a+1) zeta^{ka}.
Cyclotomic root_minus_one_inverse(long m, const Int& k);

}  // namespace detail

}  // namespace seifert
