#pragma once

#include <gmpxx.h>

#include <string>

#include "seifert/errors.hpp"

namespace seifert {

// All arithmetic in this library is exact.  Integers are GMP arbitrary
// precision, rationals are GMP rationals kept in lowest terms with a
// positive denominator (mpq canonical form).
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw invalid_input("rational with zero denominator");
    Rat q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den = 1) {
    return make_rat(Int(num), Int(den));
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Floor of a rational, as an integer (rounds toward -infinity).
inline Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Int rat_ceil(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

// Fractional part {q} = q - floor(q), always in [0, 1).
inline Rat rat_frac(const Rat& q) { return q - Rat(rat_floor(q)); }

// Canonical residue a mod n in [0, n), n > 0.
inline Int mod_euclid(const Int& a, const Int& n) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    return r;
}

// Serializes as "p" for integers and "p/q" otherwise; parse_rat accepts both.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Rat parse_rat(const std::string& text) {
    Rat q;
    if (text.empty() || mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw invalid_input("cannot parse rational '" + text + "'");
    if (q.get_den() == 0) throw invalid_input("rational with zero denominator");
    q.canonicalize();
    return q;
}

}  // namespace seifert
