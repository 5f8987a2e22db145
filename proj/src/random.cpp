#include "ncwick/random.hpp"

#include <cmath>
#include <numbers>

namespace ncwick {

namespace {

double unit_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53; // [0, 1)
}

} // namespace

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0) throw domain_error("uniform_below requires n >= 1");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - (n - 1);
    std::uint64_t x, r;
    do {
        x = rng();
        r = x % n;
    } while (x - r > limit);
    return r;
}

double standard_normal(std::mt19937_64& rng) {
    const double u1 = std::max(unit_uniform(rng), 0x1.0p-53);
    const double u2 = unit_uniform(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

NcSeries random_series(std::mt19937_64& rng, const RandomSeriesParams& params) {
    if (params.min_terms < 0 || params.max_terms < params.min_terms) {
        throw domain_error("random series: bad term count range");
    }
    if (params.max_letter == 0) throw domain_error("random series: max_letter must be >= 1");
    const TruncationPolicy trunc{params.max_len, params.max_letter, 0.0};
    const auto n_terms = static_cast<std::size_t>(
        params.min_terms +
        static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(params.max_terms - params.min_terms) + 1)));
    std::vector<std::pair<Word, Complex>> terms;
    terms.reserve(n_terms);
    constexpr double inv_sqrt2 = 0.70710678118654752;
    for (std::size_t t = 0; t < n_terms; ++t) {
        const std::size_t len = static_cast<std::size_t>(uniform_below(rng, params.max_len + 1));
        std::vector<Word::Letter> letters(len);
        for (auto& l : letters) {
            l = static_cast<Word::Letter>(1 + uniform_below(rng, params.max_letter));
        }
        const Complex c{standard_normal(rng) * inv_sqrt2, standard_normal(rng) * inv_sqrt2};
        terms.emplace_back(Word(std::move(letters)), c);
    }
    return NcSeries::from_terms(terms, trunc);
}

AlgebraMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                            const RandomSeriesParams& params) {
    std::vector<NcSeries> entries;
    entries.reserve(rows * cols);
    for (std::size_t k = 0; k < rows * cols; ++k) entries.push_back(random_series(rng, params));
    return AlgebraMatrix::from_entries(rows, cols, entries);
}

} // namespace ncwick
