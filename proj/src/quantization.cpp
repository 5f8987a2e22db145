#include "ncwick/quantization.hpp"

#include <algorithm>
#include <cmath>

namespace ncwick {

namespace {

// Euler-Maclaurin expansion of sum_{i >= n0} i^{-s} with two Bernoulli
// correction terms. The first omitted term bounds the error:
// s(s+1)(s+2)(s+3)(s+4) n0^{-s-5} / 30240, which is < 1e-15 for n0 >= 100
// and s >= 1.5, and far smaller for larger s.
double em_tail_from(double n0, double s) {
    const double integral = std::pow(n0, 1.0 - s) / (s - 1.0);
    const double half = 0.5 * std::pow(n0, -s);
    const double b2 = s * std::pow(n0, -s - 1.0) / 12.0;
    const double b4 = s * (s + 1.0) * (s + 2.0) * std::pow(n0, -s - 3.0) / 720.0;
    return integral + half + b2 - b4;
}

} // namespace

double riemann_zeta_tail(Word::Letter n, double s) {
    if (s < 1.0 + 1e-6) throw domain_error("zeta tail requires s >= 1 + 1e-6");
    const Word::Letter n0 = std::max<Word::Letter>(n + 1, 100);
    double sum = 0.0;
    for (Word::Letter i = n + 1; i < n0; ++i) {
        sum += std::pow(static_cast<double>(i), -s);
    }
    return sum + em_tail_from(static_cast<double>(n0), s);
}

double riemann_zeta(double s) {
    return riemann_zeta_tail(0, s);
}

double hs_norm_embedding(const EmbeddingSpec& spec) {
    return std::sqrt(spec.weights.letter_sum(static_cast<double>(spec.diff())));
}

double vage_constant(const WeightSequence& a, int q_minus_p) {
    if (q_minus_p < 1) throw domain_error("vage constant requires q > p");
    double t;
    try {
        t = a.letter_sum(static_cast<double>(q_minus_p));
    } catch (const divergent_sum&) {
        throw not_contractive("embedding HS norm diverges at this q - p");
    }
    if (!(t < 1.0)) throw not_contractive("embedding HS norm is >= 1 at this q - p");
    return 1.0 / std::sqrt(1.0 - t);
}

double vage_constant(const EmbeddingSpec& spec) {
    return vage_constant(spec.weights, spec.diff());
}

double monoid_weight_sum(const WeightSequence& a, int s, std::size_t max_len) {
    const double t = a.letter_sum(static_cast<double>(s));
    if (!(t < 1.0)) throw divergent_sum("letter sum is >= 1; the monoid sum diverges");
    double sum = 1.0;
    double term = 1.0;
    for (std::size_t n = 1; n <= max_len; ++n) {
        term *= t;
        sum += term;
    }
    return sum;
}

double second_quantization_image(const std::function<double(Word::Letter)>& lambda, const Word& w) {
    double prod = 1.0;
    for (Word::Letter l : w.letters()) {
        const double v = lambda(l);
        if (!(v >= 0.0 && v <= 1.0)) {
            throw domain_error("second quantization requires lambda values in [0, 1]");
        }
        prod *= v;
    }
    return prod;
}

} // namespace ncwick
