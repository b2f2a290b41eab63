#include "seifert/seifert_data.hpp"

#include <utility>

namespace seifert {

Rat UnnormalizedSeifert::euler_number() const {
    Rat e(0);
    for (const auto& p : pairs) e -= make_rat(p.beta, p.alpha);
    return e;
}

namespace {

void check_arm_count(std::size_t nu) {
    if (nu < 3)
        throw invalid_input("at least three exceptional fibers are required (nu >= 3)");
}

// Fills the derived scalars of a structurally valid (b, arms) tuple.
void finish(SeifertData& s) {
    s.e = Rat(s.b);
    s.chi = Rat(2);
    s.alpha_lcm = 1;
    Int alpha_product(1);
    for (const auto& a : s.arms) {
        s.e += make_rat(a.omega, a.alpha);
        s.chi -= make_rat(a.alpha - 1, a.alpha);
        s.alpha_lcm = lcm(s.alpha_lcm, a.alpha);
        alpha_product *= a.alpha;
    }
    if (s.e >= 0) throw invalid_input("orbifold Euler number e >= 0; not a singularity link");
    if (Rat(s.b) > s.e) throw internal_error("normalization broke b <= e");

    Rat o = Rat(s.alpha_lcm) * (-s.e);
    Rat h = Rat(alpha_product) * (-s.e);
    if (!is_integer(o) || !is_integer(h))
        throw internal_error("derived orders alpha|e| and alpha_1...alpha_nu|e| must be integers");
    s.o = o.get_num();
    s.h_order = h.get_num();
    if (s.o <= 0 || s.h_order <= 0) throw internal_error("derived orders must be positive");
}

}  // namespace

SeifertData normalize(const UnnormalizedSeifert& u) {
    check_arm_count(u.pairs.size());
    SeifertData s;
    Rat omega_sum(0);
    for (const auto& p : u.pairs) {
        if (p.alpha < 2) throw invalid_input("every alpha_i must be >= 2");
        if (gcd(p.alpha, p.beta) != 1)
            throw invalid_input("gcd(alpha_i, beta_i) = 1 is required");
        Int omega = mod_euclid(-p.beta, p.alpha);
        omega_sum += make_rat(omega, p.alpha);
        s.arms.push_back({p.alpha, omega});
    }
    Rat e = u.euler_number();
    if (e >= 0) throw invalid_input("orbifold Euler number e >= 0; not a singularity link");
    Rat b = e - omega_sum;
    if (!is_integer(b)) throw internal_error("e - sum omega_i/alpha_i is not an integer");
    s.b = b.get_num();
    finish(s);
    return s;
}

SeifertData make_seifert(Int b, std::vector<SeifertData::Arm> arms) {
    check_arm_count(arms.size());
    for (const auto& a : arms) {
        if (a.alpha < 2) throw invalid_input("every alpha_i must be >= 2");
        if (a.omega < 0 || a.omega >= a.alpha)
            throw invalid_input("normalized omega_i must satisfy 0 <= omega_i < alpha_i");
        if (gcd(a.alpha, a.omega) != 1)
            throw invalid_input("gcd(alpha_i, omega_i) = 1 is required");
    }
    SeifertData s;
    s.b = std::move(b);
    s.arms = std::move(arms);
    finish(s);
    return s;
}

UnnormalizedSeifert brieskorn_sphere(const Int& a1, const Int& a2, const Int& a3) {
    const Int a[3] = {a1, a2, a3};
    for (const auto& ai : a)
        if (ai < 2) throw invalid_input("Brieskorn exponents must be >= 2");
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (gcd(a[i], a[j]) != 1) throw invalid_input("not pairwise coprime");

    // beta_i = (product/a_i)^{-1} mod a_i makes sum (product/a_i) beta_i = 1 (mod product);
    // shifting beta_1 by a multiple of a_1 then makes the sum exactly 1, so e = -1/product.
    Int product = a1 * a2 * a3;
    Int beta[3];
    Int weighted_sum(0);
    for (int i = 0; i < 3; ++i) {
        Int cofactor = product / a[i];
        if (mpz_invert(beta[i].get_mpz_t(), cofactor.get_mpz_t(), a[i].get_mpz_t()) == 0)
            throw internal_error("cofactor not invertible despite coprimality");
        weighted_sum += cofactor * beta[i];
    }
    Int excess = weighted_sum - 1;
    if (mod_euclid(excess, product) != 0)
        throw internal_error("Brieskorn weighted sum not congruent to 1");
    beta[0] -= (excess / product) * a[0];

    UnnormalizedSeifert u;
    for (int i = 0; i < 3; ++i) u.pairs.push_back({a[i], beta[i]});
    return u;
}

}  // namespace seifert
