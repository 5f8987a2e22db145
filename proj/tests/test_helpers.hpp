#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "ncwick/calculus.hpp"
#include "ncwick/series.hpp"

namespace testutil {

using ncwick::Complex;
using ncwick::NcSeries;
using ncwick::Word;

// Mixed-tolerance comparison used across the suites:
// |x - y| <= atol + rtol * max(|x|, |y|).
inline bool close(double x, double y, double atol = 1e-12, double rtol = 1e-9) {
    return std::abs(x - y) <= atol + rtol * std::max(std::abs(x), std::abs(y));
}

inline bool close(Complex x, Complex y, double atol = 1e-12, double rtol = 1e-9) {
    return std::abs(x - y) <= atol + rtol * std::max(std::abs(x), std::abs(y));
}

// Largest |f_w - g_w| over the union of supports.
inline double max_coeff_diff(const NcSeries& f, const NcSeries& g) {
    double m = 0.0;
    for (const auto& [w, c] : f.terms()) m = std::max(m, std::abs(c - g.coeff(w)));
    for (const auto& [w, c] : g.terms()) m = std::max(m, std::abs(f.coeff(w) - c));
    return m;
}

inline double max_coeff_mag(const NcSeries& f) {
    double m = 0.0;
    for (const auto& [w, c] : f.terms()) m = std::max(m, std::abs(c));
    return m;
}

inline bool series_close(const NcSeries& f, const NcSeries& g, double atol = 1e-12,
                         double rtol = 1e-9) {
    const double scale = std::max(max_coeff_mag(f), max_coeff_mag(g));
    return max_coeff_diff(f, g) <= atol + rtol * scale;
}

// Independent convolution oracle: enumerates candidate output words and sums
// over their prefix factorizations (the basis-formula reading of the
// product), instead of iterating input term pairs like the implementation.
inline NcSeries wick_mul_oracle(const NcSeries& f, const NcSeries& g) {
    const ncwick::TruncationPolicy t = coarser(f.trunc(), g.trunc());
    std::set<Word> candidates;
    for (const auto& [beta, fc] : f.terms()) {
        for (const auto& [delta, gc] : g.terms()) {
            Word w = concat(beta, delta);
            if (t.admits(w)) candidates.insert(std::move(w));
        }
    }
    std::vector<std::pair<Word, Complex>> out;
    for (const Word& gamma : candidates) {
        Complex c{};
        for (const auto& [beta, delta] : factorizations(gamma)) {
            auto itf = f.terms().find(beta);
            if (itf == f.terms().end()) continue;
            auto itg = g.terms().find(delta);
            if (itg == g.terms().end()) continue;
            c += itf->second * itg->second;
        }
        out.emplace_back(gamma, c);
    }
    return NcSeries::from_terms(out, t);
}

// The run-length reading of the derivation: each maximal run of k equal
// letters m contributes one deletion with multiplier k.
inline NcSeries derivation_runlength_oracle(Word::Letter m, const NcSeries& f) {
    std::vector<std::pair<Word, Complex>> terms;
    for (const auto& [w, c] : f.terms()) {
        const auto& ls = w.letters();
        std::size_t i = 0;
        while (i < ls.size()) {
            std::size_t j = i;
            while (j < ls.size() && ls[j] == ls[i]) ++j;
            if (ls[i] == m) {
                std::vector<Word::Letter> shortened;
                shortened.reserve(ls.size() - 1);
                shortened.insert(shortened.end(), ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(j) - 1);
                shortened.insert(shortened.end(), ls.begin() + static_cast<std::ptrdiff_t>(j), ls.end());
                terms.emplace_back(Word(std::move(shortened)),
                                   static_cast<double>(j - i) * c);
            }
            i = j;
        }
    }
    return NcSeries::from_terms(terms, f.trunc());
}

// Replaces the empty-word coefficient, leaving every other term untouched.
inline NcSeries with_expectation(const NcSeries& f, Complex e0) {
    std::vector<std::pair<Word, Complex>> terms;
    terms.emplace_back(Word{}, e0);
    for (const auto& [w, c] : f.terms()) {
        if (!w.empty()) terms.emplace_back(w, c);
    }
    return NcSeries::from_terms(terms, f.trunc());
}

} // namespace testutil
