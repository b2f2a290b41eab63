#include "seifert/dedekind.hpp"

namespace seifert {

Rat dedekind_symbol(const Rat& x) {
    if (is_integer(x)) return Rat(0);
    return rat_frac(x) - make_rat(1, 2);
}

Rat dedekind_sum(const Int& h, const Int& k) {
    if (k < 1) throw invalid_input("dedekind_sum requires k >= 1");
    Rat total(0);
    for (Int mu(0); mu < k; ++mu) {
        Rat a = make_rat(mu, k);
        Rat b = make_rat(h * mu, k);
        total += dedekind_symbol(a) * dedekind_symbol(b);
    }
    return total;
}

}  // namespace seifert
