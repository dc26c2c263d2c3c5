#pragma once

#include <Eigen/Dense>

#include "qboson/qcalc.hpp"

// Truncated Fock-space linear algebra. Operators live on span{|0>,...,|n_max>}
// as dense complex matrices; the ladder operators realize
//
//   a |n> = sqrt([n]) |n-1>,   a^dag |n> = sqrt([n+1]) |n+1>,   N |n> = n |n>
//
// so that a a^dag - q a^dag a = 1, [N, a] = -a and [N, a^dag] = a^dag hold
// exactly on the interior of the truncated space. The last row/column is
// truncation-contaminated: the commutation relation necessarily fails at the
// (n_max, n_max) corner by 1 + q [n_max], so algebra checks exclude it.

namespace qboson {

struct FockTruncation {
    explicit FockTruncation(int n_max_levels);

    int n_max;
    int dim() const noexcept { return n_max + 1; }

    friend bool operator==(FockTruncation a, FockTruncation b) noexcept {
        return a.n_max == b.n_max;
    }
};

class FockOperator {
public:
    FockOperator(Eigen::MatrixXcd entries, FockTruncation trunc, DeformationParam q);

    const Eigen::MatrixXcd& matrix() const noexcept { return entries_; }
    Eigen::MatrixXcd& matrix() noexcept { return entries_; }
    FockTruncation trunc() const noexcept { return trunc_; }
    DeformationParam q() const noexcept { return q_; }
    int dim() const noexcept { return trunc_.dim(); }

private:
    Eigen::MatrixXcd entries_;
    FockTruncation trunc_;
    DeformationParam q_;
};

FockOperator build_annihilator(DeformationParam q, FockTruncation trunc);
FockOperator build_creator(DeformationParam q, FockTruncation trunc);
FockOperator build_number(DeformationParam q, FockTruncation trunc);

struct AlgebraResiduals {
    // Max-norm residuals on the interior block (rows/cols 0..n_max-1).
    double comm_residual;     // a a^dag - q a^dag a - 1
    double N_a_residual;      // [N, a] + a
    double N_adag_residual;   // [N, a^dag] - a^dag
    // Same commutator residual over the full block, including the corner.
    double full_comm_residual;
    // The exact corner defect 1 + q [n_max] that full_comm_residual hits.
    double corner_defect;
};

AlgebraResiduals algebra_residuals(DeformationParam q, FockTruncation trunc);

struct DensityTolerances {
    double hermiticity = 1e-12;   // max-norm of rho - rho^dag
    double trace = 1e-10;         // |Tr rho - 1|
    double min_eigenvalue = -1e-10;
};

// Hermitian, unit-trace, positive-semidefinite operator. Validated on
// construction; re-checkable on demand.
class DensityMatrix {
public:
    Complex rho(int n, int m) const { return op_.matrix()(n, m); }
    const FockOperator& op() const noexcept { return op_; }
    const Eigen::MatrixXcd& matrix() const noexcept { return op_.matrix(); }
    FockTruncation trunc() const noexcept { return op_.trunc(); }
    DeformationParam q() const noexcept { return op_.q(); }
    int dim() const noexcept { return op_.dim(); }

    // Throws validation_error if the stored matrix no longer satisfies the
    // invariants at the given tolerances.
    void revalidate(DensityTolerances tol = {}) const;

private:
    friend DensityMatrix density_from_coeffs(const Eigen::MatrixXcd&, FockTruncation,
                                             DeformationParam, DensityTolerances);
    explicit DensityMatrix(FockOperator op) : op_(std::move(op)) {}
    FockOperator op_;
};

// Validates hermiticity, unit trace and positive semidefiniteness of coeffs
// and wraps it. Throws validation_error with a distinct code per condition.
DensityMatrix density_from_coeffs(const Eigen::MatrixXcd& coeffs, FockTruncation trunc,
                                  DeformationParam q, DensityTolerances tol = {});

// Zero-pads a density matrix into a larger truncation (trace and spectrum
// are unchanged).
DensityMatrix embed(const DensityMatrix& rho, FockTruncation larger);

} // namespace qboson
