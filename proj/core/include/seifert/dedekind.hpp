#pragma once

#include "seifert/rational.hpp"

namespace seifert {

// Dedekind symbol ((x)): {x} - 1/2 for non-integral x, 0 for integers.
Rat dedekind_symbol(const Rat& x);

// Classical Dedekind sum s(h,k) = sum_{mu=0}^{k-1} ((mu/k)) ((h mu/k)),
// evaluated by the defining sum.  Requires k >= 1.
Rat dedekind_sum(const Int& h, const Int& k);

}  // namespace seifert
