#pragma once

#include <vector>

#include "seifert/rational.hpp"

namespace seifert {

// Negative (Hirzebruch-Jung) continued fraction expansion
//   alpha/omega = b1 - 1/(b2 - 1/(... - 1/bk)),   all bi >= 2,
// defined for coprime 0 < omega < alpha.
struct ContinuedFraction {
    std::vector<Int> entries;
};

ContinuedFraction negative_continued_fraction(const Int& alpha, const Int& omega);

// Evaluates the expansion back to a rational; inverse of the above.
Rat evaluate(const ContinuedFraction& cf);

}  // namespace seifert
