#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "ncwick/series.hpp"

namespace ncwick {

// A dense rectangular matrix of series entries sharing one truncation
// policy. Construction from mixed-policy entries coerces everything to the
// coarsest policy (a one-line warning goes to stderr when that loses terms
// or changes limits).
class AlgebraMatrix {
public:
    AlgebraMatrix(std::size_t rows, std::size_t cols, TruncationPolicy trunc);

    static AlgebraMatrix identity(std::size_t n, TruncationPolicy trunc);
    // Row-major entries, size rows*cols.
    static AlgebraMatrix from_entries(std::size_t rows, std::size_t cols,
                                      std::vector<NcSeries> entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const TruncationPolicy& trunc() const noexcept { return trunc_; }

    const NcSeries& at(std::size_t i, std::size_t j) const;
    // Stores s re-truncated to the matrix policy.
    void set(std::size_t i, std::size_t j, NcSeries s);

    friend bool operator==(const AlgebraMatrix&, const AlgebraMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    TruncationPolicy trunc_;
    std::vector<NcSeries> entries_;
};

// Re-truncates a series to a given policy, dropping words the policy does
// not admit.
NcSeries with_policy(const NcSeries& s, TruncationPolicy trunc);

// Standard matrix sum/product over the algebra. The product preserves factor
// order in every entry: (X Y)_{ij} = sum_k X_{ik} (x) Y_{kj}, and is not
// commutative even for square shapes.
AlgebraMatrix mat_add(const AlgebraMatrix& x, const AlgebraMatrix& y);
AlgebraMatrix mat_mul(const AlgebraMatrix& x, const AlgebraMatrix& y);

// Entry-wise generalized expectation. A homomorphism onto the complex
// matrix algebra: expectation_matrix(X Y) = expectation_matrix(X) *
// expectation_matrix(Y).
Eigen::MatrixXcd expectation_matrix(const AlgebraMatrix& x);

// Convolution input-output map y_n = sum_{m=0}^{n} h_m (x) u_{n-m} for
// n = 0..n_steps-1. Sequences shorter than needed are zero-padded. h entries
// are p x q, u entries q x 1, outputs p x 1.
std::vector<AlgebraMatrix> simulate(const std::vector<AlgebraMatrix>& h,
                                    const std::vector<AlgebraMatrix>& u,
                                    std::size_t n_steps);

// A realization quadruple: transfer function D + z C (x) (I - zA)^{-1} B
// with A: N x N, B: N x q_in, C: p_out x N, D: p_out x q_in.
struct SystemDef {
    AlgebraMatrix A;
    AlgebraMatrix B;
    AlgebraMatrix C;
    AlgebraMatrix D;

    SystemDef(AlgebraMatrix a, AlgebraMatrix b, AlgebraMatrix c, AlgebraMatrix d);

    std::size_t state_dim() const noexcept { return A.rows(); }
    std::size_t input_dim() const noexcept { return B.cols(); }
    std::size_t output_dim() const noexcept { return C.rows(); }
};

// Taylor coefficients of the transfer function: h_0 = D and
// h_k = C A^{k-1} B for k = 1..K. The geometric series behind (I - zA)^{-1}
// converges for |z| below 1/(B_2 |A|-bound); the truncated computation here
// is finite regardless, so the radius is documentation, not a gate.
std::vector<AlgebraMatrix> transfer_taylor(const SystemDef& sys, std::size_t K);

// The vertical block stack (C; CA; ...; CA^{steps-1}), sized
// (steps * p_out) x N. The stacking makes left invertibility mean full
// column rank, which is what the kernel recursion below needs.
AlgebraMatrix observability_matrix(const AlgebraMatrix& C, const AlgebraMatrix& A,
                                   std::size_t steps);

// True iff the complex matrix stacked from (E[C], E[A]) up to `steps` blocks
// has full column rank N. Rank is numerical: singular values above
// sigma_max * max(dim) * 1e-12.
bool is_observable_expectation(const AlgebraMatrix& C, const AlgebraMatrix& A,
                               std::size_t steps);

// The horizon-equals-state-dimension special case.
bool is_strongly_observable_expectation(const AlgebraMatrix& C, const AlgebraMatrix& A);

// Verifies over the truncated algebra that the only solution of O f = 0 is
// f = 0, by the graded coefficient recursion
//   M_0 f_gamma = - sum over nonempty prefixes beta of gamma of
//                 O_beta f_{beta^{-1} gamma},
// solved word by word in graded order with least squares against M_0 (the
// expectation observability matrix, full column rank by precondition).
// Returns true iff every step yields the zero solution with residual
// <= 1e-10. Throws precondition_failed when the expectation pair is not
// observable -- the result is then meaningless.
bool kernel_trivial_check(const AlgebraMatrix& C, const AlgebraMatrix& A, std::size_t steps);

} // namespace ncwick
