#include "qboson/fock.hpp"

#include <cmath>
#include <sstream>

namespace qboson {

FockTruncation::FockTruncation(int n_max_levels) : n_max(n_max_levels) {
    if (n_max < 1) throw std::invalid_argument("FockTruncation requires n_max >= 1");
}

FockOperator::FockOperator(Eigen::MatrixXcd entries, FockTruncation trunc, DeformationParam q)
    : entries_(std::move(entries)), trunc_(trunc), q_(q) {
    if (entries_.rows() != trunc_.dim() || entries_.cols() != trunc_.dim()) {
        std::ostringstream msg;
        msg << "FockOperator entries are " << entries_.rows() << "x" << entries_.cols()
            << " but the truncation requires " << trunc_.dim() << "x" << trunc_.dim();
        throw validation_error(validation_error::code::dimension_mismatch, msg.str());
    }
}

FockOperator build_annihilator(DeformationParam q, FockTruncation trunc) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(trunc.dim(), trunc.dim());
    for (int n = 1; n <= trunc.n_max; ++n) {
        a(n - 1, n) = std::sqrt(q_number(n, q));
    }
    return FockOperator(std::move(a), trunc, q);
}

FockOperator build_creator(DeformationParam q, FockTruncation trunc) {
    return FockOperator(build_annihilator(q, trunc).matrix().adjoint(), trunc, q);
}

FockOperator build_number(DeformationParam q, FockTruncation trunc) {
    Eigen::MatrixXcd n = Eigen::MatrixXcd::Zero(trunc.dim(), trunc.dim());
    for (int k = 0; k <= trunc.n_max; ++k) n(k, k) = k;
    return FockOperator(std::move(n), trunc, q);
}

namespace {

double interior_max_norm(const Eigen::MatrixXcd& m, int interior_dim) {
    return m.topLeftCorner(interior_dim, interior_dim).cwiseAbs().maxCoeff();
}

} // namespace

AlgebraResiduals algebra_residuals(DeformationParam q, FockTruncation trunc) {
    const auto a = build_annihilator(q, trunc).matrix();
    const auto ad = build_creator(q, trunc).matrix();
    const auto N = build_number(q, trunc).matrix();
    const auto I = Eigen::MatrixXcd::Identity(trunc.dim(), trunc.dim());

    const Eigen::MatrixXcd comm = a * ad - q.value() * (ad * a) - I;
    const Eigen::MatrixXcd na = N * a - a * N + a;
    const Eigen::MatrixXcd nad = N * ad - ad * N - ad;

    const int interior = trunc.dim() - 1;
    AlgebraResiduals r{};
    r.comm_residual = interior_max_norm(comm, interior);
    r.N_a_residual = interior_max_norm(na, interior);
    r.N_adag_residual = interior_max_norm(nad, interior);
    r.full_comm_residual = comm.cwiseAbs().maxCoeff();
    r.corner_defect = 1.0 + q.value() * q_number(trunc.n_max, q);
    return r;
}

DensityMatrix density_from_coeffs(const Eigen::MatrixXcd& coeffs, FockTruncation trunc,
                                  DeformationParam q, DensityTolerances tol) {
    FockOperator op(coeffs, trunc, q);

    const double herm = (coeffs - coeffs.adjoint()).cwiseAbs().maxCoeff();
    if (herm > tol.hermiticity) {
        std::ostringstream msg;
        msg << "density matrix is not hermitian: max |rho - rho^dag| = " << herm;
        throw validation_error(validation_error::code::not_hermitian, msg.str());
    }

    const double tr_err = std::abs(coeffs.trace() - Complex(1.0, 0.0));
    if (tr_err > tol.trace) {
        std::ostringstream msg;
        msg << "density matrix trace differs from 1 by " << tr_err;
        throw validation_error(validation_error::code::trace_not_one, msg.str());
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (coeffs + coeffs.adjoint()),
                                                       Eigen::EigenvaluesOnly);
    const double min_eig = es.eigenvalues().minCoeff();
    if (min_eig < tol.min_eigenvalue) {
        std::ostringstream msg;
        msg << "density matrix is not positive semidefinite: min eigenvalue = " << min_eig;
        throw validation_error(validation_error::code::not_positive_semidefinite, msg.str());
    }

    return DensityMatrix(std::move(op));
}

void DensityMatrix::revalidate(DensityTolerances tol) const {
    density_from_coeffs(op_.matrix(), op_.trunc(), op_.q(), tol);
}

DensityMatrix embed(const DensityMatrix& rho, FockTruncation larger) {
    if (larger.dim() < rho.dim()) {
        throw validation_error(validation_error::code::dimension_mismatch,
                               "embed target truncation is smaller than the source");
    }
    Eigen::MatrixXcd big = Eigen::MatrixXcd::Zero(larger.dim(), larger.dim());
    big.topLeftCorner(rho.dim(), rho.dim()) = rho.matrix();
    return density_from_coeffs(big, larger, rho.q());
}

} // namespace qboson
