#include "ncwick/linsys.hpp"

#include <algorithm>
#include <iostream>
#include <map>

#include <Eigen/SVD>

namespace ncwick {

namespace {

std::string shape_str(std::size_t r, std::size_t c) {
    return std::to_string(r) + "x" + std::to_string(c);
}

} // namespace

AlgebraMatrix::AlgebraMatrix(std::size_t rows, std::size_t cols, TruncationPolicy trunc)
    : rows_(rows), cols_(cols), trunc_(trunc), entries_(rows * cols, NcSeries(trunc)) {
    if (rows_ == 0 || cols_ == 0) throw dimension_mismatch("matrix dimensions must be positive");
}

AlgebraMatrix AlgebraMatrix::identity(std::size_t n, TruncationPolicy trunc) {
    AlgebraMatrix m(n, n, trunc);
    for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = NcSeries::unit(trunc);
    return m;
}

AlgebraMatrix AlgebraMatrix::from_entries(std::size_t rows, std::size_t cols,
                                          std::vector<NcSeries> entries) {
    if (entries.empty() || entries.size() != rows * cols) {
        throw dimension_mismatch("entry count does not match the matrix shape");
    }
    AlgebraMatrix m(rows, cols, entries.front().trunc());
    bool mixed = false;
    for (const NcSeries& e : entries) {
        if (e.trunc() != m.trunc_) mixed = true;
        m.trunc_ = coarser(m.trunc_, e.trunc());
    }
    if (mixed) {
        std::cerr << "ncwick: mixed truncation policies in matrix entries; "
                     "coercing to the coarsest\n";
    }
    for (std::size_t k = 0; k < entries.size(); ++k) {
        m.entries_[k] = with_policy(entries[k], m.trunc_);
    }
    return m;
}

const NcSeries& AlgebraMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw dimension_mismatch("matrix index out of range");
    return entries_[i * cols_ + j];
}

void AlgebraMatrix::set(std::size_t i, std::size_t j, NcSeries s) {
    if (i >= rows_ || j >= cols_) throw dimension_mismatch("matrix index out of range");
    entries_[i * cols_ + j] = with_policy(s, trunc_);
}

NcSeries with_policy(const NcSeries& s, TruncationPolicy trunc) {
    if (s.trunc() == trunc) return s;
    std::vector<std::pair<Word, Complex>> terms(s.terms().begin(), s.terms().end());
    return NcSeries::from_terms(terms, trunc, NcSeries::OnViolation::drop);
}

AlgebraMatrix mat_add(const AlgebraMatrix& x, const AlgebraMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) {
        throw dimension_mismatch("matrix sum needs equal shapes, got " +
                                 shape_str(x.rows(), x.cols()) + " and " +
                                 shape_str(y.rows(), y.cols()));
    }
    AlgebraMatrix out(x.rows(), x.cols(), coarser(x.trunc(), y.trunc()));
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < x.cols(); ++j) {
            out.set(i, j, add(x.at(i, j), y.at(i, j)));
        }
    }
    return out;
}

AlgebraMatrix mat_mul(const AlgebraMatrix& x, const AlgebraMatrix& y) {
    if (x.cols() != y.rows()) {
        throw dimension_mismatch("matrix product needs cols(X) = rows(Y), got " +
                                 shape_str(x.rows(), x.cols()) + " and " +
                                 shape_str(y.rows(), y.cols()));
    }
    AlgebraMatrix out(x.rows(), y.cols(), coarser(x.trunc(), y.trunc()));
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < y.cols(); ++j) {
            NcSeries acc(out.trunc());
            for (std::size_t k = 0; k < x.cols(); ++k) {
                acc = add(acc, wick_mul(x.at(i, k), y.at(k, j)));
            }
            out.set(i, j, acc);
        }
    }
    return out;
}

Eigen::MatrixXcd expectation_matrix(const AlgebraMatrix& x) {
    Eigen::MatrixXcd m(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < x.cols(); ++j) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = expectation(x.at(i, j));
        }
    }
    return m;
}

std::vector<AlgebraMatrix> simulate(const std::vector<AlgebraMatrix>& h,
                                    const std::vector<AlgebraMatrix>& u,
                                    std::size_t n_steps) {
    if (h.empty() || u.empty()) throw dimension_mismatch("simulate needs nonempty h and u");
    const std::size_t p = h.front().rows();
    const std::size_t q = h.front().cols();
    for (const auto& m : h) {
        if (m.rows() != p || m.cols() != q) throw dimension_mismatch("impulse response shapes differ");
    }
    for (const auto& m : u) {
        if (m.rows() != q || m.cols() != 1) throw dimension_mismatch("input must be a q x 1 column");
    }
    const TruncationPolicy trunc = coarser(h.front().trunc(), u.front().trunc());
    std::vector<AlgebraMatrix> y;
    y.reserve(n_steps);
    for (std::size_t n = 0; n < n_steps; ++n) {
        AlgebraMatrix yn(p, 1, trunc);
        for (std::size_t m = 0; m <= n; ++m) {
            if (m >= h.size() || n - m >= u.size()) continue; // zero-padded
            yn = mat_add(yn, mat_mul(h[m], u[n - m]));
        }
        y.push_back(std::move(yn));
    }
    return y;
}

SystemDef::SystemDef(AlgebraMatrix a, AlgebraMatrix b, AlgebraMatrix c, AlgebraMatrix d)
    : A(std::move(a)), B(std::move(b)), C(std::move(c)), D(std::move(d)) {
    if (A.rows() != A.cols()) throw dimension_mismatch("A must be square");
    if (B.rows() != A.rows()) throw dimension_mismatch("B must have N rows");
    if (C.cols() != A.rows()) throw dimension_mismatch("C must have N columns");
    if (D.rows() != C.rows() || D.cols() != B.cols()) {
        throw dimension_mismatch("D must be p_out x q_in");
    }
}

std::vector<AlgebraMatrix> transfer_taylor(const SystemDef& sys, std::size_t K) {
    std::vector<AlgebraMatrix> h;
    h.reserve(K + 1);
    h.push_back(sys.D);
    if (K == 0) return h;
    AlgebraMatrix pow_b = sys.B; // A^{k-1} B
    h.push_back(mat_mul(sys.C, pow_b));
    for (std::size_t k = 2; k <= K; ++k) {
        pow_b = mat_mul(sys.A, pow_b);
        h.push_back(mat_mul(sys.C, pow_b));
    }
    return h;
}

AlgebraMatrix observability_matrix(const AlgebraMatrix& C, const AlgebraMatrix& A,
                                   std::size_t steps) {
    if (A.rows() != A.cols()) throw dimension_mismatch("A must be square");
    if (C.cols() != A.rows()) throw dimension_mismatch("C must have N columns");
    if (steps < 1) throw domain_error("observability horizon must be >= 1");
    const std::size_t p = C.rows();
    const std::size_t n = A.rows();
    AlgebraMatrix out(steps * p, n, coarser(C.trunc(), A.trunc()));
    AlgebraMatrix block = C;
    for (std::size_t k = 0; k < steps; ++k) {
        if (k > 0) block = mat_mul(block, A);
        for (std::size_t i = 0; i < p; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                out.set(k * p + i, j, block.at(i, j));
            }
        }
    }
    return out;
}

namespace {

Eigen::MatrixXcd stacked_expectation(const AlgebraMatrix& C, const AlgebraMatrix& A,
                                     std::size_t steps) {
    const Eigen::MatrixXcd ec = expectation_matrix(C);
    const Eigen::MatrixXcd ea = expectation_matrix(A);
    const Eigen::Index p = ec.rows();
    const Eigen::Index n = ea.rows();
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(steps) * p, n);
    Eigen::MatrixXcd block = ec;
    for (std::size_t k = 0; k < steps; ++k) {
        if (k > 0) block = block * ea;
        m.middleRows(static_cast<Eigen::Index>(k) * p, p) = block;
    }
    return m;
}

Eigen::Index numerical_rank(const Eigen::MatrixXcd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    const double thresh = sv(0) * static_cast<double>(std::max(m.rows(), m.cols())) * 1e-12;
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > thresh) ++rank;
    }
    return rank;
}

} // namespace

bool is_observable_expectation(const AlgebraMatrix& C, const AlgebraMatrix& A,
                               std::size_t steps) {
    if (A.rows() != A.cols()) throw dimension_mismatch("A must be square");
    if (C.cols() != A.rows()) throw dimension_mismatch("C must have N columns");
    if (steps < 1) throw domain_error("observability horizon must be >= 1");
    const Eigen::MatrixXcd m = stacked_expectation(C, A, steps);
    return numerical_rank(m) == static_cast<Eigen::Index>(A.rows());
}

bool is_strongly_observable_expectation(const AlgebraMatrix& C, const AlgebraMatrix& A) {
    return is_observable_expectation(C, A, A.rows());
}

bool kernel_trivial_check(const AlgebraMatrix& C, const AlgebraMatrix& A, std::size_t steps) {
    if (!is_observable_expectation(C, A, steps)) {
        throw precondition_failed("the expectation pair is not observable; "
                                  "the kernel recursion has no base case");
    }
    const AlgebraMatrix O = observability_matrix(C, A, steps);
    const std::size_t n = O.cols();
    const Eigen::Index ni = static_cast<Eigen::Index>(n);

    // Complex coefficient matrix of O at each nonempty support word.
    std::map<Word, Eigen::MatrixXcd> coeff_mats;
    for (std::size_t i = 0; i < O.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (const auto& [w, c] : O.at(i, j).terms()) {
                if (w.empty()) continue;
                auto [it, fresh] = coeff_mats.try_emplace(
                    w, Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(O.rows()), ni));
                (void)fresh;
                it->second(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = c;
            }
        }
    }

    // Words over letters beyond the support of O all satisfy the same
    // equations (no nonempty support word prefixes them), so one fresh
    // letter value covers the unbounded part of the alphabet.
    Word::Letter support_max = 0;
    for (const auto& [w, mat] : coeff_mats) support_max = std::max(support_max, w.max_letter());
    const Word::Letter m_eff =
        std::max<Word::Letter>(1, std::min<Word::Letter>(O.trunc().max_letter, support_max + 1));

    const Eigen::MatrixXcd m0 = stacked_expectation(C, A, steps);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m0, Eigen::ComputeThinU | Eigen::ComputeThinV);

    std::map<Word, Eigen::VectorXcd> solved;
    constexpr double tol = 1e-10;
    for (const Word& gamma : enumerate_words(O.trunc().max_len, m_eff)) {
        Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(O.rows()));
        for (const auto& [beta, mat] : coeff_mats) {
            if (beta.length() > gamma.length() || !is_prefix(beta, gamma)) continue;
            rhs -= mat * solved.at(left_quotient(beta, gamma));
        }
        const Eigen::VectorXcd x = svd.solve(rhs);
        const double residual = (m0 * x - rhs).lpNorm<Eigen::Infinity>();
        if (x.lpNorm<Eigen::Infinity>() > tol || residual > tol) return false;
        solved.emplace(gamma, x);
    }
    return true;
}

} // namespace ncwick
