#include "sl2pf/random_sl2.hpp"

#include <algorithm>

namespace sl2pf {

RandomSl2 random_sl2(FieldPtr f, Rng& rng, const RandomSl2Options& opts) {
    const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(opts.max_factors) + 1));
    int budget = opts.degree_budget;
    std::vector<WordFactor> factors;
    factors.reserve(static_cast<std::size_t>(k));
    Side side = rng.coin() ? Side::Upper : Side::Lower;
    for (int i = 0; i < k; ++i) {
        int cap = opts.max_param_degree;
        if (budget >= 0) cap = std::min(cap, budget);
        int deg = static_cast<int>(rng.below(static_cast<std::uint64_t>(cap) + 2)) - 1;  // -1 = zero
        Poly param = deg < 0 ? Poly::zero(f) : Poly::random_exact_degree(f, deg, rng);
        if (budget >= 0 && deg > 0) budget -= deg;
        factors.push_back({side, std::move(param)});
        side = flipped(side);
    }
    Word w = Word::raw(f, std::move(factors));
    return RandomSl2{word_eval(w), w};
}

}  // namespace sl2pf
