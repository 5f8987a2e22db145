#include "ncwick/word.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ncwick/quantization.hpp"

namespace ncwick {

void Word::validate() const {
    for (Letter l : letters_) {
        if (l == 0) throw domain_error("word letters must be >= 1");
    }
}

Word::Letter Word::max_letter() const noexcept {
    Letter m = 0;
    for (Letter l : letters_) m = std::max(m, l);
    return m;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    return a.letters_ <=> b.letters_;
}

Word concat(const Word& u, const Word& v) {
    std::vector<Word::Letter> out;
    out.reserve(u.length() + v.length());
    out.insert(out.end(), u.letters().begin(), u.letters().end());
    out.insert(out.end(), v.letters().begin(), v.letters().end());
    return Word(std::move(out));
}

bool is_prefix(const Word& beta, const Word& alpha) {
    if (beta.length() > alpha.length()) return false;
    return std::equal(beta.letters().begin(), beta.letters().end(), alpha.letters().begin());
}

Word left_quotient(const Word& beta, const Word& alpha) {
    if (!is_prefix(beta, alpha)) {
        throw not_a_prefix(to_string(beta) + " is not a prefix of " + to_string(alpha));
    }
    std::vector<Word::Letter> out(alpha.letters().begin() + static_cast<std::ptrdiff_t>(beta.length()),
                                  alpha.letters().end());
    return Word(std::move(out));
}

std::vector<std::pair<Word, Word>> factorizations(const Word& gamma) {
    std::vector<std::pair<Word, Word>> out;
    out.reserve(gamma.length() + 1);
    const auto& ls = gamma.letters();
    for (std::size_t cut = 0; cut <= ls.size(); ++cut) {
        Word beta(std::vector<Word::Letter>(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(cut)));
        Word delta(std::vector<Word::Letter>(ls.begin() + static_cast<std::ptrdiff_t>(cut), ls.end()));
        out.emplace_back(std::move(beta), std::move(delta));
    }
    return out;
}

std::vector<Word> enumerate_words(std::size_t max_len, Word::Letter max_letter) {
    if (max_letter == 0) throw domain_error("enumerate_words: max_letter must be >= 1");
    std::vector<Word> out;
    std::vector<Word> level{Word{}};
    out.push_back(Word{});
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        next.reserve(level.size() * max_letter);
        for (const Word& w : level) {
            for (Word::Letter l = 1; l <= max_letter; ++l) {
                next.push_back(concat(w, Word{l}));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

std::string to_string(const Word& w) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < w.length(); ++i) {
        if (i) os << ',';
        os << w.letters()[i];
    }
    os << ']';
    return os.str();
}

WeightSequence::WeightSequence(WeightFn weights, int index, TailFn tail)
    : weights_(std::move(weights)), tail_(std::move(tail)), index_(index) {
    if (!weights_) throw domain_error("weight sequence: missing weight function");
    if (index_ < 1) throw domain_error("weight sequence: index must be >= 1");
    double s;
    try {
        s = letter_sum(static_cast<double>(index_));
    } catch (const divergent_sum&) {
        throw domain_error("weight sequence: sum a_i^{-d} diverges at the declared index");
    }
    if (!(s < 1.0)) {
        throw domain_error("weight sequence: sum a_i^{-d} must be < 1 at the declared index");
    }
}

double WeightSequence::letter_weight(Word::Letter i) const {
    const double a = weights_(i);
    if (!(a >= 1.0)) throw domain_error("weight sequence: a_i must be >= 1");
    return a;
}

double WeightSequence::log_letter_weight(Word::Letter i) const {
    return std::log(letter_weight(i));
}

double WeightSequence::letter_sum(double s) const {
    // Partial sums stop once terms stagnate; the tail form supplies the
    // remainder exactly when available.
    constexpr Word::Letter cutoff = 256;
    double sum = 0.0;
    Word::Letter i = 1;
    for (; i <= cutoff; ++i) {
        const double term = std::pow(letter_weight(i), -s);
        sum += term;
        if (term < sum * 1e-18) break;
    }
    const Word::Letter n = std::min(i, cutoff);
    if (tail_) {
        const double t = tail_(n, s);
        if (!std::isfinite(t) || t < 0.0) throw divergent_sum("letter weight sum diverges");
        sum += t;
    } else if (i > cutoff) {
        // No closed tail: keep summing until double precision stagnates.
        for (Word::Letter j = cutoff + 1; j <= 1u << 24; ++j) {
            const double term = std::pow(letter_weight(j), -s);
            sum += term;
            if (term < sum * 1e-18) return sum;
        }
        throw divergent_sum("letter weight sum did not stagnate; supply a tail form");
    }
    if (!std::isfinite(sum)) throw divergent_sum("letter weight sum diverges");
    return sum;
}

const WeightSequence& WeightSequence::kondratiev() {
    static const WeightSequence seq(
        [](Word::Letter i) { return 2.0 * static_cast<double>(i); }, 2,
        [](Word::Letter n, double s) {
            // sum_{i>n} (2i)^{-s} = 2^{-s} * sum_{i>n} i^{-s}
            if (s <= 1.0) return std::numeric_limits<double>::infinity();
            return std::pow(2.0, -s) * riemann_zeta_tail(n, s);
        });
    return seq;
}

double log_weight(const Word& w, const WeightSequence& a) {
    double sum = 0.0;
    for (Word::Letter l : w.letters()) sum += a.log_letter_weight(l);
    return sum;
}

double weight(const Word& w, const WeightSequence& a) {
    const double lw = log_weight(w, a);
    const double v = std::exp(lw);
    if (!std::isfinite(v)) {
        throw weight_overflow("word weight exceeds the double range; use log_weight");
    }
    return v;
}

int smallest_nuclearity_index(const WeightSequence::WeightFn& weights,
                              const WeightSequence::TailFn& tail,
                              int max_index) {
    if (!tail) {
        throw domain_error("smallest_nuclearity_index requires a tail form to certify sums");
    }
    for (int d = 1; d <= max_index; ++d) {
        double sum = 0.0;
        constexpr Word::Letter cutoff = 256;
        for (Word::Letter i = 1; i <= cutoff; ++i) {
            const double a = weights(i);
            if (!(a >= 1.0)) throw domain_error("weight sequence: a_i must be >= 1");
            sum += std::pow(a, -static_cast<double>(d));
        }
        const double t = tail(cutoff, static_cast<double>(d));
        if (std::isfinite(t) && t >= 0.0 && sum + t < 1.0) return d;
    }
    throw divergent_sum("no index below the search bound gives sum a_i^{-d} < 1");
}

} // namespace ncwick
