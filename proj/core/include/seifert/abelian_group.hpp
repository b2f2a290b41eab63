#pragma once

#include <vector>

#include "seifert/plumbing.hpp"
#include "seifert/rational.hpp"
#include "seifert/seifert_data.hpp"

namespace seifert {

// Element of a finite abelian group in Smith normal form coordinates:
// coords[j] is a canonical residue mod the j-th nontrivial divisor.
struct GroupElement {
    std::vector<Int> coords;
    bool operator==(const GroupElement&) const = default;
};

// Character of the group, stored as an exponent tuple against the same
// decomposition: the character sends the j-th summand generator to
// zeta_m^{exponents[j] * m / d_j}.  Values are never materialized as
// floating point; evaluation returns exponents mod m.
struct Character {
    std::vector<Int> exponents;
    bool operator==(const Character&) const = default;
};

// Finite abelian group presented by integer relation rows, reduced to
// Smith normal form.  Keeps the left transform so that words in the
// original generators reduce to canonical coordinates.
class AbelianGroup {
  public:
    // relations: one row per relation over `generators` unknowns.
    AbelianGroup(IntMatrix relations, std::size_t generators);

    std::size_t generator_count() const { return generators_; }
    const std::vector<Int>& divisors() const { return divisors_; }
    const Int& order() const { return order_; }
    const Int& exponent() const { return exponent_; }
    std::size_t rank() const { return divisors_.size(); }

    GroupElement identity() const;
    GroupElement generator(std::size_t i) const;
    // Reduces a word g_0^{w_0} ... g_{n-1}^{w_{n-1}}.
    GroupElement element_from_word(const std::vector<Int>& word) const;
    // Some word reducing to the given element (left inverse of the above).
    std::vector<Int> word_for(const GroupElement& a) const;

    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement negate(const GroupElement& a) const;
    Int order_of(const GroupElement& a) const;

    // Mixed-radix position of an element in [0, |H|); inverse of element_at.
    // Only valid when |H| fits in a machine word (checked).
    long element_index(const GroupElement& a) const;
    GroupElement element_at(long index) const;

    // All |H| characters in lexicographic exponent order.
    std::vector<Character> all_characters() const;
    Character trivial_character() const;
    // Exponent k in [0, m) such that chi(a) = zeta_m^k, m = exponent().
    Int character_exponent(const Character& chi, const GroupElement& a) const;

  private:
    std::size_t generators_;
    std::vector<Int> divisors_;        // nontrivial, d_1 | d_2 | ...
    std::vector<std::vector<Int>> coordinate_rows_;  // divisors x generators
    std::vector<std::vector<Int>> word_columns_;     // generators x divisors
    Int order_;
    Int exponent_;
};

// H_1(M, Z) from the Seifert presentation: generators g_0 (generic fiber
// class), g_1..g_nu (arm end classes), relations
//   -b g_0 = sum omega_i g_i   and   g_0 = alpha_i g_i.
// Checks |H| and the order of g_0 against the closed formulas.
AbelianGroup homology_group(const SeifertData& s);

// The relation matrix used by homology_group (rows = relations).
IntMatrix homology_relations(const SeifertData& s);

}  // namespace seifert
