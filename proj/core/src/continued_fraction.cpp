#include "seifert/continued_fraction.hpp"

namespace seifert {

ContinuedFraction negative_continued_fraction(const Int& alpha, const Int& omega) {
    if (!(omega > 0 && omega < alpha))
        throw invalid_input("negative_continued_fraction requires 0 < omega < alpha");
    if (gcd(alpha, omega) != 1)
        throw invalid_input("negative_continued_fraction requires gcd(alpha, omega) = 1");
    ContinuedFraction cf;
    Int a = alpha, w = omega;
    while (w != 0) {
        Int b = rat_ceil(make_rat(a, w));  // smallest b with b*w >= a
        cf.entries.push_back(b);
        Int next = b * w - a;  // a/w = b - next/w, 0 <= next < w
        a = w;
        w = next;
    }
    return cf;
}

Rat evaluate(const ContinuedFraction& cf) {
    if (cf.entries.empty()) throw invalid_input("empty continued fraction");
    Rat value(cf.entries.back());
    for (auto it = cf.entries.rbegin() + 1; it != cf.entries.rend(); ++it) {
        if (value == 0) throw internal_error("continued fraction hit a zero tail");
        value = Rat(*it) - 1 / value;
    }
    return value;
}

}  // namespace seifert
