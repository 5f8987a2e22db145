#pragma once

#include <complex>
#include <cstddef>
#include <limits>
#include <map>
#include <vector>

#include "ncwick/word.hpp"

namespace ncwick {

using Complex = std::complex<double>;

// Governs which words a series may carry: a maximum word length, an optional
// maximum letter value, and an optional modulus threshold below which
// coefficients are pruned after each operation. drop_tol defaults to 0 so
// the algebraic identities hold exactly; pruning is opt-in.
struct TruncationPolicy {
    static constexpr Word::Letter unbounded_letter = std::numeric_limits<Word::Letter>::max();

    std::size_t max_len = 0;
    Word::Letter max_letter = unbounded_letter;
    double drop_tol = 0.0;

    bool admits(const Word& w) const noexcept {
        return w.length() <= max_len && (w.empty() || w.max_letter() <= max_letter);
    }
    friend bool operator==(const TruncationPolicy&, const TruncationPolicy&) = default;
};

// The coarser of two policies: the one retaining fewer words (min of both
// limits) and pruning harder (max drop_tol). Every binary operation puts its
// result under this combined policy.
TruncationPolicy coarser(const TruncationPolicy& a, const TruncationPolicy& b);

// A truncated element of the distribution algebra: a finitely supported map
// from words to complex coefficients under a truncation policy. Zero
// coefficients are never stored. Values are immutable once built; all
// operations below are pure and return fresh series.
//
// Truncation contract: word length is additive under concatenation, so the
// coefficients of words of length <= L in any product depend only on the
// length <= L parts of the factors. Every operation here is therefore exact
// on all retained coefficients and silently discards words beyond the
// policy; truncation commutes with the whole algebra.
class NcSeries {
public:
    using TermMap = std::map<Word, Complex>;

    enum class OnViolation { raise, drop };

    explicit NcSeries(TruncationPolicy trunc = {}) : trunc_(trunc) {}

    // The multiplicative unit: coefficient 1 at the empty word.
    static NcSeries unit(TruncationPolicy trunc);

    // A single term c * e_w. Raises truncation_violation if w violates trunc.
    static NcSeries basis(const Word& w, TruncationPolicy trunc, Complex c = 1.0);

    // Sums coefficients of repeated words; words outside the policy either
    // raise truncation_violation (strict, the default) or are dropped.
    static NcSeries from_terms(const std::vector<std::pair<Word, Complex>>& pairs,
                               TruncationPolicy trunc, OnViolation mode = OnViolation::raise);

    const TruncationPolicy& trunc() const noexcept { return trunc_; }
    const TermMap& terms() const noexcept { return terms_; }
    Complex coeff(const Word& w) const;
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    friend bool operator==(const NcSeries&, const NcSeries&) = default;

private:
    friend NcSeries add(const NcSeries&, const NcSeries&);
    friend NcSeries scale(Complex, const NcSeries&);
    friend NcSeries wick_mul(const NcSeries&, const NcSeries&);

    // Accumulate c at w if admitted, silently dropping words beyond the
    // policy (graded truncation semantics).
    void accumulate(const Word& w, Complex c);
    // Remove exact zeros and coefficients below drop_tol.
    void prune();

    TruncationPolicy trunc_;
    TermMap terms_;
};

// Coefficient-wise sum/scaling; results under the coarser policy.
NcSeries add(const NcSeries& f, const NcSeries& g);
NcSeries sub(const NcSeries& f, const NcSeries& g);
NcSeries scale(Complex c, const NcSeries& f);

// The Wick product: convolution over the free monoid,
//   (f (x) g)_gamma = sum over factorizations gamma = beta delta of
//                     f_beta * g_delta.
// On basis words this is concatenation, so the product is associative and
// unital but not commutative. Implemented by iterating term pairs and
// emitting concat(beta, delta); the factorization-based form lives in the
// tests as the independent oracle.
NcSeries wick_mul(const NcSeries& f, const NcSeries& g);

// The graded Hilbert norm at level p:
//   |f|_p^2 = sum_alpha |f_alpha|^2 * weight(alpha, a)^{-p}.
// Positive p is the distribution side; callers on the test-function side
// pass the negated exponent. Evaluated in log space; throws weight_overflow
// if a term leaves the double range.
double norm_p(const NcSeries& f, int p, const WeightSequence& a = WeightSequence::kondratiev());

// The generalized expectation E[f]: the coefficient of the empty word. It is
// the unique unital algebra homomorphism to the scalars: E[f (x) g] = E[f]E[g].
Complex expectation(const NcSeries& f);

// Norms |iota(f_N) (x) iota(g_N)|_0 for N = 1..n, where iota embeds a scalar
// sequence on the single-generator line z_1^k and f_k = g_k =
// 1/(sqrt(k) log(k+1)). The pair is square-summable but its convolution is
// not, so the sequence grows without bound: the plain l^2 space is not
// closed under the product.
std::vector<double> convolution_blowup_norms(int n);

// Operator sugar over the named operations.
inline NcSeries operator+(const NcSeries& f, const NcSeries& g) { return add(f, g); }
inline NcSeries operator-(const NcSeries& f, const NcSeries& g) { return sub(f, g); }
inline NcSeries operator*(const NcSeries& f, const NcSeries& g) { return wick_mul(f, g); }
inline NcSeries operator*(Complex c, const NcSeries& f) { return scale(c, f); }

} // namespace ncwick
