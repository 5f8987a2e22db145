#pragma once

#include <utility>
#include <vector>

#include "ncwick/series.hpp"

namespace ncwick {

// A power series sum phi_n z^n given by its first K+1 coefficients and a
// declared radius of absolute convergence (infinity when entire).
struct PowerSeriesSpec {
    std::vector<Complex> coeffs;
    double radius = std::numeric_limits<double>::infinity();
};

// n-fold Wick product of f with itself; f^{(x)0} is the unit. Satisfies
// |f^{(x)n}|_{p+2} <= B_2^n |f|_p^n.
NcSeries wick_pow(const NcSeries& f, unsigned n);

// Evaluates sum_n phi.coeffs[n] * f^{(x)n} (Horner over the commutative
// subalgebra generated by f). The convergence hypothesis |E[f]| < radius/B_2
// is enforced up front (B_2 taken in the default space); pass force = true
// to evaluate anyway -- the truncated sum is always finite. Callers reading
// the result as a truncation of an infinite series own the scalar tail bound
// sum_{n>K} |phi_n| |E[f]|^n.
NcSeries apply_series(const PowerSeriesSpec& phi, const NcSeries& f, bool force = false);

// The Wick inverse: g with f (x) g = g (x) f = unit exactly on every word
// the policy retains. Computed as E[f]^{-1} sum_{n<=max_len} u^{(x)n} with
// u = 1 - f/E[f]; u has zero expectation, so u^{(x)n} is supported on words
// of length >= n and the Neumann sum terminates at the truncation length.
// Throws not_invertible when |E[f]| < 1e-14: the dichotomy E[f] != 0 is
// exact, the threshold covers floating input.
NcSeries wick_inverse(const NcSeries& f);

// The spectrum of f is the singleton {E[f]}: f - lambda * unit is invertible
// exactly for lambda != E[f].
Complex spectrum(const NcSeries& f);

// The derivation D_m: deletes one occurrence of the letter m in every
// possible position, extended linearly. Equivalent to the run-length form
// (a run of k equal letters contributes k identical deletions) and satisfies
// the Leibniz rule D_m(f (x) g) = D_m(f) (x) g + f (x) D_m(g).
NcSeries derivation(Word::Letter m, const NcSeries& f);

// Returns (|D_m f|_q^2, a_m^p * |f|_p^2); the first is bounded by the
// second for every q >= p + 3 (enforced).
std::pair<double, double> derivation_bound_check(Word::Letter m, const NcSeries& f, int p, int q,
                                                 const WeightSequence& a = WeightSequence::kondratiev());

} // namespace ncwick
