#include "seifert/torsion.hpp"

#include <optional>

#include "seifert/dedekind.hpp"
#include "seifert/invariants.hpp"

namespace seifert {

namespace {

// Groups above this order are rejected by the torsion evaluators; the fold
// keeps per-element tables.
constexpr long kMaxFoldOrder = 1'000'000;
// Largest rank-two quotient the fold will enumerate characters for.
constexpr long kMaxPairQuotient = 20'000;
// Auto strategy: literal character sum up to here, folded sum beyond.
constexpr long kPerCharacterLimit = 64;

long checked_order(const AbelianGroup& g) {
    if (!g.order().fits_slong_p() || g.order().get_si() > kMaxFoldOrder)
        throw invalid_input("group too large for torsion computation");
    return g.order().get_si();
}

bool is_trivial(const Character& chi) {
    for (const Int& e : chi.exponents)
        if (e != 0) return false;
    return true;
}

std::vector<Int> character_values(const SeifertData& s, const AbelianGroup& g,
                                  const Character& chi) {
    std::vector<Int> exps;
    exps.reserve(s.nu() + 1);
    for (std::size_t i = 0; i <= s.nu(); ++i)
        exps.push_back(g.character_exponent(chi, g.generator(i)));
    return exps;
}

// ---------------------------------------------------------------------------
// Literal character sum.

Rat torsion_per_character(const SeifertData& s, const AbelianGroup& g,
                          const GroupElement& h) {
    long m = g.exponent().get_si();
    Cyclotomic acc(m);
    for (const Character& chi : g.all_characters()) {
        if (is_trivial(chi)) continue;
        Cyclotomic coeff = torsion_fourier_coefficient(s, g, chi);
        coeff.rotate(-g.character_exponent(chi, h));  // conj(chi)(h)
        acc += coeff;
    }
    return acc.to_rational() / Rat(g.order());
}

// ---------------------------------------------------------------------------
// Folded evaluation.
//
// Writing c_i = chi(g_i), the relations c_i^{alpha_i} = c_0 give, whenever
// c_0 != 1,
//   (c_0-1)^{nu-2} / prod_i (c_i-1) = prod_i (1 + c_i + ... + c_i^{alpha_i-1})
//                                     * (c_0-1)^{-2},
// so the sum over characters with chi(g_0) != 1 of conj(chi)(h) times the
// Fourier coefficient unfolds over the box 0 <= s_i < alpha_i:
//   sum_{s} W(g_1^{s_1}...g_nu^{s_nu} h^{-1}),
//   W(u) = sum_{chi(g_0) != 1} chi(u) (chi(g_0)-1)^{-2}.
// Splitting Ĥ along the restriction to the cyclic subgroup C = <g_0> of
// order o collapses W by orthogonality:
//   W(u) = (|H|/o) * [u in C] * V(j)   where u = g_0^j and
//   V(j) = sum_{r=1}^{o-1} zeta_o^{rj} (zeta_o^r - 1)^{-2}.
// Expanding (zeta^r - 1)^{-1} = (1/o) sum_a (a+1) zeta^{ra} turns V(j) into
// the convolution count
//   V(j) = C(-j mod o)/o - (o+1)^2/4,
//   C(x) = sum_{a+b = x mod o} (a+1)(b+1),
// which has the closed form used below.  Characters with chi(g_0) = 1 are
// characters of H/<g_0>; among those, nonzero coefficients only come from
// characters trivial on all arms except exactly two (a nontrivial character
// trivial on all but one arm would be trivial outright, since
// gcd(omega_j, alpha_j) = 1), and they are summed directly over the
// corresponding rank-two quotients.

// Multiset {s_i g_i : 0 <= s_i < alpha_i} folded into the group: pairs of
// (element, multiplicity).  The support has at most ord(g_i) entries no
// matter how large alpha_i is.
std::vector<std::pair<GroupElement, Int>> arm_measure(const AbelianGroup& g,
                                                      const GroupElement& gen,
                                                      const Int& alpha) {
    Int d = g.order_of(gen);
    std::vector<std::pair<GroupElement, Int>> measure;
    GroupElement step = g.identity();
    for (Int k(0); k < d; ++k) {
        if (k < alpha) {
            Int count = (alpha - 1 - k) / d + 1;
            measure.emplace_back(step, count);
        }
        step = g.add(step, gen);
    }
    return measure;
}

// Multiplicities of g_1^{s_1} ... g_nu^{s_nu} over the whole box
// 0 <= s_i < alpha_i, as a vector over element indices.
std::vector<Int> box_counts(const SeifertData& s, const AbelianGroup& g) {
    long n = checked_order(g);
    std::vector<Int> counts(n, Int(0));
    counts[g.element_index(g.identity())] = 1;
    for (std::size_t i = 0; i < s.nu(); ++i) {
        auto measure = arm_measure(g, g.generator(i + 1), s.arms[i].alpha);
        std::vector<Int> next(n, Int(0));
        for (long idx = 0; idx < n; ++idx) {
            if (counts[idx] == 0) continue;
            GroupElement u = g.element_at(idx);
            for (const auto& [w, mult] : measure)
                next[g.element_index(g.add(u, w))] += counts[idx] * mult;
        }
        counts = std::move(next);
    }
    return counts;
}

// sum over characters with chi(g_0) != 1 of conj(chi)(h) * coefficient.
Rat folded_fiber_part(const SeifertData& s, const AbelianGroup& g,
                      const std::vector<Int>& counts,
                      const std::vector<long>& fiber_power_of,
                      std::vector<std::optional<Rat>>& v_cache,
                      const GroupElement& h) {
    long n = checked_order(g);
    const Int& o = s.o;
    if (o == 1) return Rat(0);

    GroupElement minus_h = g.negate(h);
    Rat total(0);
    for (long idx = 0; idx < n; ++idx) {
        if (counts[idx] == 0) continue;
        long shifted = g.element_index(g.add(g.element_at(idx), minus_h));
        long j = fiber_power_of[shifted];
        if (j < 0) continue;
        if (!v_cache[j]) v_cache[j] = detail::cotangent_sum(o, Int(j));
        total += Rat(counts[idx]) * *v_cache[j];
    }
    return total * Rat(g.order() / o);
}

// index -> j for elements g_0^j of the fiber subgroup, -1 elsewhere.
std::vector<long> fiber_power_table(const SeifertData& s, const AbelianGroup& g) {
    long n = checked_order(g);
    std::vector<long> table(n, -1);
    if (!s.o.fits_slong_p()) throw invalid_input("fiber order too large");
    long o = s.o.get_si();
    GroupElement e = g.identity();
    GroupElement g0 = g.generator(0);
    for (long j = 0; j < o; ++j) {
        table[g.element_index(e)] = j;
        e = g.add(e, g0);
    }
    if (!(e == g.identity())) throw internal_error("fiber subgroup order mismatch");
    return table;
}

struct PairQuotient {
    std::size_t arm_a, arm_b;
    AbelianGroup group;
    Int coefficient;                 // product of the alpha_k of the other arms
    std::vector<Rat> inverse_table;  // per element u: sum_{psi != 1} conj(psi)(u) value(psi)
};

// Quotient of H by g_0 and all arm generators except arms {a, b}.  All of
// its nontrivial characters lift to characters of H that are trivial on
// exactly the killed generators.
std::vector<PairQuotient> build_pair_quotients(const SeifertData& s) {
    std::vector<PairQuotient> quotients;
    std::size_t nu = s.nu();
    for (std::size_t a = 0; a < nu; ++a) {
        for (std::size_t b = a + 1; b < nu; ++b) {
            IntMatrix rel = homology_relations(s);
            std::vector<Int> kill(nu + 1, Int(0));
            kill[0] = 1;
            rel.push_back(kill);
            for (std::size_t k = 0; k < nu; ++k) {
                if (k == a || k == b) continue;
                std::vector<Int> row(nu + 1, Int(0));
                row[k + 1] = 1;
                rel.push_back(row);
            }
            AbelianGroup q(rel, nu + 1);
            if (q.order() == 1) continue;
            if (!q.order().fits_slong_p() || q.order().get_si() > kMaxPairQuotient)
                throw invalid_input("pair quotient too large for torsion computation");

            Int coefficient(1);
            for (std::size_t k = 0; k < nu; ++k)
                if (k != a && k != b) coefficient *= s.arms[k].alpha;

            long qn = q.order().get_si();
            long qm = q.exponent().get_si();
            GroupElement ga = q.generator(a + 1);
            GroupElement gb = q.generator(b + 1);

            std::vector<Cyclotomic> acc(qn, Cyclotomic(qm));
            for (const Character& psi : q.all_characters()) {
                if (is_trivial(psi)) continue;
                Int ka = q.character_exponent(psi, ga);
                Int kb = q.character_exponent(psi, gb);
                if (ka == 0 || kb == 0)
                    throw internal_error("character trivial on all arms but one");
                Cyclotomic value = detail::root_minus_one_inverse(qm, ka) *
                                   detail::root_minus_one_inverse(qm, kb);
                for (long u = 0; u < qn; ++u) {
                    Cyclotomic term = value;
                    term.rotate(-q.character_exponent(psi, q.element_at(u)));
                    acc[u] += term;
                }
            }
            PairQuotient pq{a, b, std::move(q), coefficient, {}};
            pq.inverse_table.reserve(qn);
            for (long u = 0; u < qn; ++u) pq.inverse_table.push_back(acc[u].to_rational());
            quotients.push_back(std::move(pq));
        }
    }
    return quotients;
}

Rat folded_base_part(const std::vector<PairQuotient>& quotients,
                     const std::vector<Int>& word) {
    Rat total(0);
    for (const PairQuotient& pq : quotients) {
        GroupElement hq = pq.group.element_from_word(word);
        total += Rat(pq.coefficient) * pq.inverse_table[pq.group.element_index(hq)];
    }
    return total;
}

Rat torsion_folded(const SeifertData& s, const AbelianGroup& g, const GroupElement& h,
                   const std::vector<Int>& word) {
    if (!s.o.fits_slong_p()) throw invalid_input("fiber order too large");
    std::vector<long> fiber = fiber_power_table(s, g);
    std::vector<std::optional<Rat>> v_cache(s.o.get_si());
    Rat t1 = s.o == 1 ? Rat(0)
                      : folded_fiber_part(s, g, box_counts(s, g), fiber, v_cache, h);
    Rat t2 = folded_base_part(build_pair_quotients(s), word);
    return (t1 + t2) / Rat(g.order());
}

}  // namespace

// ---------------------------------------------------------------------------

SpincStructure make_spinc(const SeifertData& s, const AbelianGroup& g,
                          std::vector<Int> word) {
    if (word.size() != s.nu() + 1)
        throw invalid_input("spin^c word needs nu + 1 exponents");
    SpincStructure sigma;
    sigma.h = g.element_from_word(word);
    Rat shift(word[0]);
    for (std::size_t i = 0; i < s.nu(); ++i) shift += make_rat(word[i + 1], s.arms[i].alpha);
    sigma.a_tilde = Rat(s.alpha_lcm) * shift;
    sigma.word = std::move(word);
    return sigma;
}

SpincStructure canonical_spinc(const SeifertData& s, const AbelianGroup& g) {
    return make_spinc(s, g, std::vector<Int>(s.nu() + 1, Int(0)));
}

Cyclotomic torsion_fourier_coefficient(const SeifertData& s, const AbelianGroup& g,
                                       const Character& chi) {
    if (!g.exponent().fits_slong_p())
        throw invalid_input("group exponent too large for cyclotomic arithmetic");
    long m = g.exponent().get_si();
    std::vector<Int> exps = character_values(s, g, chi);
    std::size_t nu = s.nu();

    bool trivial = true;
    for (const Int& e : exps)
        if (e != 0) trivial = false;
    if (trivial) throw invalid_input("the trivial character has no torsion coefficient");

    Cyclotomic one = Cyclotomic::rational(Rat(1), m);
    if (exps[0] != 0) {
        // chi(g_0) != 1 forces chi(g_i) != 1, all factors are finite at t=1.
        Cyclotomic numerator = one;
        Cyclotomic c0_minus_1 = Cyclotomic::root(m, exps[0]) - one;
        for (std::size_t k = 0; k + 2 < nu; ++k) numerator = numerator * c0_minus_1;
        Cyclotomic denominator = one;
        for (std::size_t i = 0; i < nu; ++i) {
            if (exps[i + 1] == 0) throw internal_error("chi(g_i) = 1 while chi(g_0) != 1");
            denominator = denominator * (Cyclotomic::root(m, exps[i + 1]) - one);
        }
        return numerator * denominator.inverse();
    }

    // chi(g_0) = 1: the numerator vanishes to order nu - 2 at t = 1 and each
    // trivial arm value contributes one vanishing denominator factor, with
    //   lim (t^alpha - 1)/(t^{alpha/alpha_i} - 1) = alpha_i.
    std::vector<std::size_t> trivial_arms, active_arms;
    for (std::size_t i = 0; i < nu; ++i)
        (exps[i + 1] == 0 ? trivial_arms : active_arms).push_back(i);
    if (trivial_arms.size() > nu - 2)
        throw internal_error("nontrivial character trivial on more than nu - 2 arms");
    if (trivial_arms.size() < nu - 2) return Cyclotomic(m);

    Int scale(1);
    for (std::size_t i : trivial_arms) scale *= s.arms[i].alpha;
    Cyclotomic denominator = one;
    for (std::size_t i : active_arms)
        denominator = denominator * (Cyclotomic::root(m, exps[i + 1]) - one);
    return Cyclotomic::rational(Rat(scale), m) * denominator.inverse();
}

Rat torsion_at_identity(const SeifertData& s, const AbelianGroup& g,
                        const SpincStructure& sigma, FourierStrategy strategy) {
    if (g.order() == 1) return Rat(0);
    long n = checked_order(g);
    if (strategy == FourierStrategy::Auto)
        strategy = n <= kPerCharacterLimit ? FourierStrategy::PerCharacter
                                           : FourierStrategy::Folded;
    if (strategy == FourierStrategy::PerCharacter)
        return torsion_per_character(s, g, sigma.h);
    return torsion_folded(s, g, sigma.h, sigma.word);
}

std::vector<Rat> torsion_table(const SeifertData& s, const AbelianGroup& g,
                               FourierStrategy strategy) {
    long n = checked_order(g);
    if (strategy == FourierStrategy::Auto)
        strategy = n <= kPerCharacterLimit ? FourierStrategy::PerCharacter
                                           : FourierStrategy::Folded;

    std::vector<Rat> table(n, Rat(0));
    if (n == 1) return table;

    if (strategy == FourierStrategy::PerCharacter) {
        // One pass over characters; conj(chi)(h) only rotates the coefficient.
        long m = g.exponent().get_si();
        std::vector<Cyclotomic> acc(n, Cyclotomic(m));
        for (const Character& chi : g.all_characters()) {
            if (is_trivial(chi)) continue;
            Cyclotomic coeff = torsion_fourier_coefficient(s, g, chi);
            for (long idx = 0; idx < n; ++idx) {
                Cyclotomic term = coeff;
                term.rotate(-g.character_exponent(chi, g.element_at(idx)));
                acc[idx] += term;
            }
        }
        for (long idx = 0; idx < n; ++idx) table[idx] = acc[idx].to_rational() / Rat(g.order());
        return table;
    }

    if (!s.o.fits_slong_p()) throw invalid_input("fiber order too large");
    std::vector<long> fiber = fiber_power_table(s, g);
    std::vector<std::optional<Rat>> v_cache(s.o.get_si());
    std::vector<Int> counts = s.o == 1 ? std::vector<Int>() : box_counts(s, g);
    std::vector<PairQuotient> quotients = build_pair_quotients(s);
    for (long idx = 0; idx < n; ++idx) {
        GroupElement h = g.element_at(idx);
        Rat t1 = s.o == 1 ? Rat(0) : folded_fiber_part(s, g, counts, fiber, v_cache, h);
        Rat t2 = folded_base_part(quotients, g.word_for(h));
        table[idx] = (t1 + t2) / Rat(g.order());
    }
    return table;
}

Rat torsion_closed_form(const SeifertData& s) {
    LaurentData lhs = poincare_series_laurent(s);
    Rat e_const = abelian_cover_series_constant(s);
    return Rat(dolgachev_pinkham(s)) + lhs.constant - e_const;
}

LaurentData poincare_series_laurent(const SeifertData& s) {
    LaurentData data;
    data.pole2 = -s.e;
    data.pole1 = -s.e - s.chi / 2;
    data.constant = (Rat(2) - s.chi) / 4;
    for (const auto& arm : s.arms) data.constant += dedekind_sum(-arm.omega, arm.alpha);
    return data;
}

Rat abelian_cover_series_constant(const SeifertData& s) {
    const Rat& e = s.e;
    Rat result = -(e + 1) * (e + 5) / (12 * e);
    Rat linear(0), quadratic(0), cross(0);
    std::vector<Rat> defect;  // 1 - 1/alpha_i
    for (const auto& arm : s.arms) defect.push_back(Rat(1) - make_rat(Int(1), arm.alpha));
    for (std::size_t i = 0; i < defect.size(); ++i) {
        linear += defect[i];
        quadratic += defect[i] * (Rat(4) + make_rat(Int(1), s.arms[i].alpha));
        for (std::size_t j = i + 1; j < defect.size(); ++j) cross += defect[i] * defect[j];
    }
    result += linear / 4 + quadratic / (12 * e) - cross / (4 * e);
    return result;
}

std::vector<std::pair<Int, Int>> equivariant_coefficients(const SeifertData& s,
                                                          const SpincStructure& sigma,
                                                          const Int& lo, const Int& hi) {
    std::vector<std::pair<Int, Int>> out;
    for (Int l = lo; l <= hi; ++l) {
        Int value = 1 + sigma.word[0] - l * s.b;
        for (std::size_t i = 0; i < s.nu(); ++i) {
            Int q;
            Int num = -l * s.arms[i].omega + sigma.word[i + 1];
            mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), s.arms[i].alpha.get_mpz_t());
            value += q;
        }
        if (value < 0) value = 0;
        out.emplace_back(l, value);
    }
    return out;
}

namespace detail {

Rat cotangent_sum(const Int& o, const Int& j) {
    // Expanding both inverse factors by (zeta^r - 1)^{-1} = (1/o) sum_a (a+1) zeta^{ra}
    // and summing the geometric series over r leaves the convolution count
    //   C(x) = sum_{a+b = x mod o} (a+1)(b+1),   x = -j mod o,
    // so the sum equals C(x)/o - (o+1)^2/4.  Splitting the convolution at the
    // wrap-around gives the closed form below.
    Int x = mod_euclid(-j, o);
    Rat first = make_rat((x + 1) * (x + 2) * (x + 3), Int(6));
    Int sum_k = (o * (o + 1) - (x + 1) * (x + 2)) / 2;
    Rat sum_k2 = make_rat(o * (o + 1) * (2 * o + 1) - (x + 1) * (x + 2) * (2 * x + 3), Int(6));
    Rat count = first + Rat(o + x + 2) * Rat(sum_k) - sum_k2;
    return count / Rat(o) - make_rat((o + 1) * (o + 1), Int(4));
}

Cyclotomic root_minus_one_inverse(long m, const Int& k) {
    Int kk = mod_euclid(k, Int(m));
    if (kk == 0) throw internal_error("inverting zeta^0 - 1");
    Int order = Int(m) / gcd(kk, Int(m));
    long d = order.get_si();
    std::vector<Rat> coeffs(m, Rat(0));
    for (long a = 0; a < d; ++a)
        coeffs[mod_euclid(kk * a, Int(m)).get_si()] += make_rat(a + 1, d);
    return Cyclotomic::from_coefficients(m, std::move(coeffs));
}

}  // namespace detail

}  // namespace seifert
