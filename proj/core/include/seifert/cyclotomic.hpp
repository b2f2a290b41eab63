#pragma once

#include <vector>

#include "seifert/rational.hpp"

namespace seifert {

// Exact element of Q(zeta_m), stored as sum c_k zeta_m^k with rational
// coefficients indexed 0..m-1, i.e. in the group ring Q[x]/(x^m - 1).
// The representation is redundant; equality, zero tests, rationality and
// inversion go through the canonical remainder mod the m-th cyclotomic
// polynomial, under which x -> zeta_m is an isomorphism onto Q(zeta_m).
class Cyclotomic {
  public:
    explicit Cyclotomic(long conductor = 1);

    static Cyclotomic root(long conductor, const Int& power);
    static Cyclotomic rational(const Rat& value, long conductor = 1);
    static Cyclotomic from_coefficients(long conductor, std::vector<Rat> coefficients);

    long conductor() const { return m_; }
    const std::vector<Rat>& coefficients() const { return c_; }

    // Same number in Q(zeta_M); requires m | M.
    Cyclotomic promoted(long big_conductor) const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& rhs);
    Cyclotomic& operator-=(const Cyclotomic& rhs);
    friend Cyclotomic operator+(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs += rhs; }
    friend Cyclotomic operator-(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs -= rhs; }
    friend Cyclotomic operator*(const Cyclotomic& lhs, const Cyclotomic& rhs);

    Cyclotomic& scale(const Rat& factor);
    // Multiplication by zeta_m^k is an index rotation.
    Cyclotomic& rotate(const Int& power);

    // Remainder mod Phi_m: unique representative of degree < phi(m).
    Cyclotomic canonical() const;

    bool is_zero() const;
    bool operator==(const Cyclotomic& rhs) const;
    bool is_rational() const;
    Rat to_rational() const;
    Cyclotomic inverse() const;

    // Galois action zeta_m -> zeta_m^s for gcd(s, m) = 1.
    Cyclotomic galois(const Int& s) const;

  private:
    long m_;
    std::vector<Rat> c_;
};

// Coefficients of the m-th cyclotomic polynomial Phi_m (low degree first).
const std::vector<Int>& cyclotomic_polynomial(long m);

}  // namespace seifert
