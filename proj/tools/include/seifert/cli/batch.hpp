#pragma once

#include <string>
#include <vector>

#include "seifert/cli/random_seifert.hpp"
#include "seifert/invariants.hpp"

namespace seifert::cli {

struct BatchParams {
    long count = 0;
    unsigned long long seed = 0;
    GeneratorParams gen;
    int jobs = 1;
};

struct BatchResult {
    std::vector<SeifertData> manifolds;    // in generation order
    std::vector<InvariantReport> reports;  // same order
    long failures = 0;                     // identity or cross-check failures
};

// Generates `count` manifolds from the seed, evaluates the full report for
// each (fanned out over `jobs` workers), and merges in generation order.
// Exact arithmetic makes the result independent of the worker count.
BatchResult run_batch(const BatchParams& params);

std::string batch_csv(const BatchResult& result);

}  // namespace seifert::cli
