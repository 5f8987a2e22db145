#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ncwick/errors.hpp"

namespace ncwick {

// An element of the free monoid over the alphabet {1, 2, 3, ...}: a finite
// sequence of positive integer letters. The empty sequence is the monoid
// unit. Words are immutable values; every operation on them is pure.
//
// The total order used throughout (operator<=>, map keys, serialized output)
// is graded lexicographic: shorter words first, ties broken by the letter
// sequence. The algebra itself does not need an order; a fixed one makes
// I/O and tests deterministic.
class Word {
public:
    using Letter = std::uint32_t;

    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) { validate(); }
    Word(std::initializer_list<Letter> letters) : letters_(letters) { validate(); }

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    // Largest letter occurring in the word; 0 for the empty word.
    Letter max_letter() const noexcept;

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);

private:
    void validate() const;

    std::vector<Letter> letters_;
};

// Monoid product: the letters of u followed by the letters of v.
Word concat(const Word& u, const Word& v);

// True iff the letters of beta form an initial segment of alpha, i.e. beta
// is a left divisor of alpha.
bool is_prefix(const Word& beta, const Word& alpha);

// The unique gamma with concat(beta, gamma) == alpha.
// Throws not_a_prefix if no such gamma exists.
Word left_quotient(const Word& beta, const Word& alpha);

// All pairs (beta, delta) with concat(beta, delta) == gamma, ordered by
// length(beta) ascending. There are exactly length(gamma) + 1 of them.
std::vector<std::pair<Word, Word>> factorizations(const Word& gamma);

// Every word of length <= max_len over letters {1, ..., max_letter}, in
// graded lexicographic order. Size is (m^(L+1) - 1)/(m - 1); callers keep
// the bounds small.
std::vector<Word> enumerate_words(std::size_t max_len, Word::Letter max_letter);

// Rendering used by the JSON formats and debug output: "[1,2,1]", "[]".
std::string to_string(const Word& w);

// A sequence of letter weights a_i >= 1 together with a declared index d
// such that sum_i a_i^{-d} < 1 (checked at construction). The weight of a
// word is the product of its letter weights, which makes it a monoid
// homomorphism into (R+, *).
//
// tail may be supplied as a closed form for sum_{i>n} a_i^{-s}; it is what
// lets letter_sum() produce exact constants instead of bare partial sums.
// It may return +infinity to signal divergence at a given exponent.
class WeightSequence {
public:
    using WeightFn = std::function<double(Word::Letter)>;
    using TailFn = std::function<double(Word::Letter n, double s)>;

    WeightSequence(WeightFn weights, int index, TailFn tail = nullptr);

    double letter_weight(Word::Letter i) const;
    double log_letter_weight(Word::Letter i) const;
    int index() const noexcept { return index_; }
    bool has_tail() const noexcept { return static_cast<bool>(tail_); }

    // Full sum_i a_i^{-s}. With a tail form this is partial sum + tail;
    // without one the series is summed until it stagnates in double
    // precision. Throws divergent_sum when the sum is infinite.
    double letter_sum(double s) const;

    // The default space: a_i = 2i with index 2.
    static const WeightSequence& kondratiev();

private:
    WeightFn weights_;
    TailFn tail_;
    int index_;
};

// Product of a_l over the letters of w (with multiplicity); 1 for the empty
// word. Computed in log space; throws weight_overflow when the product
// leaves the double range (callers needing long words should stay with
// log_weight).
double weight(const Word& w, const WeightSequence& a);

// log of the above, always finite for finite words.
double log_weight(const Word& w, const WeightSequence& a);

// Smallest integer d >= 1 with sum_i a_i^{-d} < 1. Requires a tail form:
// partial sums alone cannot certify the strict inequality. Searches up to
// max_index and throws divergent_sum if nothing below it works.
int smallest_nuclearity_index(const WeightSequence::WeightFn& weights,
                              const WeightSequence::TailFn& tail,
                              int max_index = 64);

} // namespace ncwick
