#pragma once

#include <random>

#include "seifert/seifert_data.hpp"

namespace seifert::cli {

struct GeneratorParams {
    long max_alpha = 10;
    long max_arms = 5;
    Int h_cap = 5000;
};

// Uniformly random valid Seifert data: nu in [3, max_arms], alpha_i in
// [2, max_alpha], omega_i uniform among units mod alpha_i, and
// b = -1 - floor(sum omega_i/alpha_i), the largest b with e < 0.  Tuples
// with |H| above the cap are redrawn.  Draws use raw mt19937_64 outputs
// reduced by modulus, so a fixed seed reproduces bit-identical data on any
// platform.
SeifertData random_seifert(std::mt19937_64& rng, const GeneratorParams& params);

}  // namespace seifert::cli
