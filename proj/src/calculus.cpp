#include "ncwick/calculus.hpp"

#include <cmath>

#include "ncwick/quantization.hpp"

namespace ncwick {

namespace {

double default_b2() {
    static const double b2 = vage_constant(WeightSequence::kondratiev(), 2);
    return b2;
}

// f with the empty-word coefficient removed and everything divided by e0,
// negated: u = 1 - f/e0 built term by term so that E[u] is exactly zero.
NcSeries centered_ratio(const NcSeries& f, Complex e0) {
    std::vector<std::pair<Word, Complex>> terms;
    terms.reserve(f.term_count());
    for (const auto& [w, c] : f.terms()) {
        if (w.empty()) continue;
        terms.emplace_back(w, -c / e0);
    }
    return NcSeries::from_terms(terms, f.trunc());
}

} // namespace

NcSeries wick_pow(const NcSeries& f, unsigned n) {
    NcSeries out = NcSeries::unit(f.trunc());
    for (unsigned i = 0; i < n; ++i) out = wick_mul(out, f);
    return out;
}

NcSeries apply_series(const PowerSeriesSpec& phi, const NcSeries& f, bool force) {
    if (!(phi.radius > 0.0)) throw domain_error("power series radius must be > 0");
    if (std::isfinite(phi.radius) && !force) {
        const double bound = phi.radius / default_b2();
        if (!(std::abs(expectation(f)) < bound)) {
            throw radius_violation("|E[f]| is not below radius/B_2; no convergence guarantee");
        }
    }
    NcSeries out(f.trunc());
    if (phi.coeffs.empty()) return out;
    out = add(out, scale(phi.coeffs.back(), NcSeries::unit(f.trunc())));
    for (std::size_t i = phi.coeffs.size() - 1; i-- > 0;) {
        out = wick_mul(out, f);
        out = add(out, scale(phi.coeffs[i], NcSeries::unit(f.trunc())));
    }
    return out;
}

NcSeries wick_inverse(const NcSeries& f) {
    const Complex e0 = expectation(f);
    if (std::abs(e0) < 1e-14) {
        throw not_invertible("E[f] is zero; the element has no Wick inverse");
    }
    const NcSeries u = centered_ratio(f, e0);
    NcSeries sum = NcSeries::unit(f.trunc());
    NcSeries power = NcSeries::unit(f.trunc());
    for (std::size_t n = 1; n <= f.trunc().max_len; ++n) {
        power = wick_mul(power, u);
        if (power.is_zero()) break;
        sum = add(sum, power);
    }
    return scale(Complex{1.0, 0.0} / e0, sum);
}

Complex spectrum(const NcSeries& f) {
    return expectation(f);
}

NcSeries derivation(Word::Letter m, const NcSeries& f) {
    if (m == 0) throw domain_error("derivation index must be >= 1");
    std::vector<std::pair<Word, Complex>> terms;
    for (const auto& [w, c] : f.terms()) {
        const auto& ls = w.letters();
        for (std::size_t k = 0; k < ls.size(); ++k) {
            if (ls[k] != m) continue;
            std::vector<Word::Letter> deleted;
            deleted.reserve(ls.size() - 1);
            deleted.insert(deleted.end(), ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(k));
            deleted.insert(deleted.end(), ls.begin() + static_cast<std::ptrdiff_t>(k) + 1, ls.end());
            terms.emplace_back(Word(std::move(deleted)), c);
        }
    }
    return NcSeries::from_terms(terms, f.trunc());
}

std::pair<double, double> derivation_bound_check(Word::Letter m, const NcSeries& f, int p, int q,
                                                 const WeightSequence& a) {
    if (q < p + 3) throw domain_error("the derivation bound requires q >= p + 3");
    const double lhs = norm_p(derivation(m, f), q, a);
    const double rhs = norm_p(f, p, a);
    return {lhs * lhs, std::pow(a.letter_weight(m), static_cast<double>(p)) * rhs * rhs};
}

} // namespace ncwick
