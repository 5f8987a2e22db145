#pragma once

#include <cstddef>
#include <functional>

#include "ncwick/word.hpp"

namespace ncwick {

// Riemann zeta for real s, to absolute accuracy better than 1e-13: direct sum
// plus an Euler-Maclaurin tail through the x^{-s-3} term. Throws domain_error
// for s < 1 + 1e-6.
double riemann_zeta(double s);

// sum_{i > n} i^{-s} with the same accuracy and domain as riemann_zeta.
double riemann_zeta_tail(Word::Letter n, double s);

// The diagonal embedding of the level-q weighted space into the level-p one,
// with singular values a_i^{-(q-p)/2}. Only the difference q - p enters any
// derived quantity.
struct EmbeddingSpec {
    WeightSequence weights;
    int q;
    int p;

    EmbeddingSpec(WeightSequence a, int q_, int p_) : weights(std::move(a)), q(q_), p(p_) {
        if (q <= p) throw domain_error("embedding spec requires q > p");
    }
    int diff() const noexcept { return q - p; }
};

// Hilbert-Schmidt norm of the embedding: sqrt(sum_i a_i^{-(q-p)}).
// Throws divergent_sum when the exponent is below the summability threshold.
double hs_norm_embedding(const EmbeddingSpec& spec);

// The constant B_{q-p} = (1 - sum_i a_i^{-(q-p)})^{-1/2}: the Hilbert-Schmidt
// norm of the second quantization of the embedding, and the bound in
//   |f (x) g|_q <= B_{q-p} |f|_p |g|_q.
// Throws not_contractive when the embedding HS norm is >= 1 (for the default
// weights this is every q - p < 2).
double vage_constant(const EmbeddingSpec& spec);
double vage_constant(const WeightSequence& a, int q_minus_p);

// Partial monoid sum sum_{|w| <= max_len} weight(w)^{-s}, evaluated by
// grading as sum_{n <= max_len} t^n with t = sum_i a_i^{-s}. Monotone in
// max_len with limit vage_constant^2; the distance to the limit is bounded
// by t^{max_len+1}/(1-t). Throws divergent_sum when t >= 1.
double monoid_weight_sum(const WeightSequence& a, int s, std::size_t max_len);

// Diagonal coefficient by which the second quantization of an operator with
// singular values lambda_i scales the basis word w: the product of
// lambda_l over the letters of w. Each lambda must lie in [0, 1].
double second_quantization_image(const std::function<double(Word::Letter)>& lambda, const Word& w);

} // namespace ncwick
