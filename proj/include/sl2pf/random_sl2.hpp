#pragma once

#include "sl2pf/rng.hpp"
#include "sl2pf/words.hpp"

namespace sl2pf {

// Seeded random SL2(A) elements drawn as products of elementary matrices.
struct RandomSl2Options {
    int max_factors = 8;      // number of elementary factors k <= max_factors
    int max_param_degree = 3; // per-parameter degree bound
    int degree_budget = -1;   // bound on the sum of parameter degrees; -1 = none
};

struct RandomSl2 {
    Mat2 matrix;
    Word word;  // the elementary product it was built from
};

RandomSl2 random_sl2(FieldPtr f, Rng& rng, const RandomSl2Options& opts = {});

}  // namespace sl2pf
