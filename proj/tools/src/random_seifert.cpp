#include "seifert/cli/random_seifert.hpp"

namespace seifert::cli {

namespace {

long draw(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

}  // namespace

SeifertData random_seifert(std::mt19937_64& rng, const GeneratorParams& params) {
    if (params.max_arms < 3) throw invalid_input("max_arms must be at least 3");
    if (params.max_alpha < 2) throw invalid_input("max_alpha must be at least 2");
    if (params.h_cap < 1) throw invalid_input("h_cap must be positive");

    while (true) {
        long nu = draw(rng, 3, params.max_arms);
        std::vector<SeifertData::Arm> arms;
        Rat omega_sum(0);
        for (long i = 0; i < nu; ++i) {
            long alpha = draw(rng, 2, params.max_alpha);
            long omega = 1;
            do {
                omega = draw(rng, 1, alpha - 1);
            } while (std::gcd(omega, alpha) != 1);
            arms.push_back({Int(alpha), Int(omega)});
            omega_sum += make_rat(omega, alpha);
        }
        Int b = -1 - rat_floor(omega_sum);
        SeifertData s = make_seifert(b, std::move(arms));
        if (s.h_order <= params.h_cap) return s;
    }
}

}  // namespace seifert::cli
