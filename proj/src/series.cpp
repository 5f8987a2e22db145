#include "ncwick/series.hpp"

#include <algorithm>
#include <cmath>

namespace ncwick {

TruncationPolicy coarser(const TruncationPolicy& a, const TruncationPolicy& b) {
    return TruncationPolicy{std::min(a.max_len, b.max_len),
                            std::min(a.max_letter, b.max_letter),
                            std::max(a.drop_tol, b.drop_tol)};
}

NcSeries NcSeries::unit(TruncationPolicy trunc) {
    NcSeries s(trunc);
    s.terms_.emplace(Word{}, Complex{1.0, 0.0});
    return s;
}

NcSeries NcSeries::basis(const Word& w, TruncationPolicy trunc, Complex c) {
    return from_terms({{w, c}}, trunc, OnViolation::raise);
}

NcSeries NcSeries::from_terms(const std::vector<std::pair<Word, Complex>>& pairs,
                              TruncationPolicy trunc, OnViolation mode) {
    NcSeries s(trunc);
    for (const auto& [w, c] : pairs) {
        if (!trunc.admits(w)) {
            if (mode == OnViolation::raise) {
                throw truncation_violation("word " + to_string(w) + " violates the truncation policy");
            }
            continue;
        }
        s.terms_[w] += c;
    }
    s.prune();
    return s;
}

Complex NcSeries::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Complex{} : it->second;
}

void NcSeries::accumulate(const Word& w, Complex c) {
    if (!trunc_.admits(w)) return;
    terms_[w] += c;
}

void NcSeries::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) < trunc_.drop_tol || it->second == Complex{}) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
}

NcSeries add(const NcSeries& f, const NcSeries& g) {
    NcSeries out(coarser(f.trunc(), g.trunc()));
    for (const auto& [w, c] : f.terms()) out.accumulate(w, c);
    for (const auto& [w, c] : g.terms()) out.accumulate(w, c);
    out.prune();
    return out;
}

NcSeries sub(const NcSeries& f, const NcSeries& g) {
    return add(f, scale(Complex{-1.0, 0.0}, g));
}

NcSeries scale(Complex c, const NcSeries& f) {
    NcSeries out(f.trunc());
    if (c == Complex{}) return out;
    for (const auto& [w, coeff] : f.terms()) out.terms_[w] = c * coeff;
    out.prune();
    return out;
}

NcSeries wick_mul(const NcSeries& f, const NcSeries& g) {
    NcSeries out(coarser(f.trunc(), g.trunc()));
    const std::size_t max_len = out.trunc().max_len;
    for (const auto& [beta, fc] : f.terms()) {
        if (beta.length() > max_len) continue;
        for (const auto& [delta, gc] : g.terms()) {
            if (beta.length() + delta.length() > max_len) continue;
            out.accumulate(concat(beta, delta), fc * gc);
        }
    }
    out.prune();
    return out;
}

double norm_p(const NcSeries& f, int p, const WeightSequence& a) {
    double sum = 0.0;
    for (const auto& [w, c] : f.terms()) {
        const double term = std::norm(c) * std::exp(-static_cast<double>(p) * log_weight(w, a));
        sum += term;
    }
    if (!std::isfinite(sum)) {
        throw weight_overflow("norm overflows the double range at this level");
    }
    return std::sqrt(sum);
}

Complex expectation(const NcSeries& f) {
    return f.coeff(Word{});
}

std::vector<double> convolution_blowup_norms(int n) {
    if (n < 1) throw domain_error("blowup norms require n >= 1");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int N = 1; N <= n; ++N) {
        const TruncationPolicy trunc{static_cast<std::size_t>(2 * N), 1, 0.0};
        std::vector<std::pair<Word, Complex>> terms;
        for (int k = 1; k <= N; ++k) {
            const Word w(std::vector<Word::Letter>(static_cast<std::size_t>(k), 1u));
            const double v = 1.0 / (std::sqrt(static_cast<double>(k)) * std::log(static_cast<double>(k) + 1.0));
            terms.emplace_back(w, Complex{v, 0.0});
        }
        const NcSeries fN = NcSeries::from_terms(terms, trunc);
        out.push_back(norm_p(wick_mul(fN, fN), 0));
    }
    return out;
}

} // namespace ncwick
