#pragma once

#include <random>

#include "ncwick/linsys.hpp"
#include "ncwick/series.hpp"

namespace ncwick {

// The generator behind every randomized check (CLI audits, property tests,
// the acceptance suite). Distributions are fixed and hand-rolled on top of
// the mt19937_64 stream, so a seed pins the exact output:
//   term count   ~ uniform{min_terms..max_terms}
//   word length  ~ uniform{0..max_len}, letters ~ uniform{1..max_letter}
//   coefficient  ~ standard complex Gaussian (re, im independent N(0, 1/2))
// Repeated words merge by coefficient addition.
struct RandomSeriesParams {
    std::size_t max_len = 4;
    Word::Letter max_letter = 4;
    int min_terms = 1;
    int max_terms = 12;
};

NcSeries random_series(std::mt19937_64& rng, const RandomSeriesParams& params);

// A matrix with independent random_series entries (row-major draw order),
// all under the policy {max_len, max_letter}.
AlgebraMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                            const RandomSeriesParams& params);

// Uniform integer in [0, n); unbiased rejection sampling.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

// Standard normal via Box-Muller on 53-bit uniforms.
double standard_normal(std::mt19937_64& rng);

} // namespace ncwick
