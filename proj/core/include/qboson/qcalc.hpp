#pragma once

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Core>

#include "qboson/errors.hpp"

// q-special functions and Jackson calculus: q-numbers [n], q-factorials [n]!,
// the two q-exponentials e_q / E_q, the Jackson q-integral, and the Jackson
// q-derivative acting on power series with matrix coefficients.
//
// Conventions used throughout:
//   [n]    = (1 - q^n) / (1 - q),             [n] -> n as q -> 1
//   [n]!   = [n][n-1]...[1],                  [0]! = 1
//   e_q(x) = sum_n x^n / [n]!                 (radius of convergence 1/(1-q))
//   E_q(x) = sum_n q^{n(n-1)/2} x^n / [n]!    (entire),  e_q(x) E_q(-x) = 1
//   (D_q f)(r) = (f(r) - f(qr)) / ((1-q) r),  D_q r^n = [n] r^{n-1}
//   int_0^a f d_q t = a (1-q) sum_j q^j f(a q^j)
//
// Every function special-cases q = 1 to its classical closed form.

namespace qboson {

using Complex = std::complex<double>;

// Deformation parameter q in (0, 1]. q = 0 is rejected: there [n] = 1 for all
// n >= 1, which collapses [n]! to 1 and degenerates every normalization built
// on it. q = 1 is the classical oscillator and is dispatched exactly.
class DeformationParam {
public:
    explicit DeformationParam(double q);

    double value() const noexcept { return q_; }
    bool is_classical() const noexcept { return q_ == 1.0; }

private:
    double q_;
};

double q_number(int n, DeformationParam q);
double q_factorial(int n, DeformationParam q);

enum class QExpVariant { small_e, big_E };

// Truncation control for series and product evaluations.
struct SeriesOptions {
    double tol = 1e-15;
    int max_terms = 100000;
};

// e_q(x) or E_q(x).
//
// small_e is evaluated by its power series where the terms are monotone
// (Re x >= 0, |x| inside the convergence disk) and through the reciprocal
// 1/E_q(-x) elsewhere; real x at or beyond the first pole 1/(1-q) is a
// domain error. big_E is evaluated through its convergent product
// representation prod_k (1 + (1-q) x q^k), which is well conditioned for
// every argument (the alternating series loses digits near its zeros).
Complex q_exponential(Complex x, DeformationParam q, QExpVariant variant,
                      SeriesOptions opts = {});

inline Complex q_exp_small(Complex x, DeformationParam q, SeriesOptions opts = {}) {
    return q_exponential(x, q, QExpVariant::small_e, opts);
}
inline Complex q_exp_big(Complex x, DeformationParam q, SeriesOptions opts = {}) {
    return q_exponential(x, q, QExpVariant::big_E, opts);
}

// First zero R = 1/(1-q) of E_q(-x), equivalently the first pole of e_q(x):
// the upper limit of every radial q-integration in this library. Errors at
// q = 1 (the classical exponential has no finite zero).
double q_exp_first_zero(DeformationParam q);

struct JacksonOptions {
    double tol = 1e-12;
    long max_nodes = 100000;
    // q = 1 falls back to composite Gauss-Legendre with at least this many nodes.
    int riemann_min_nodes = 128;
};

// int_0^a f(t) d_q t, truncated when the geometric tail bound drops below tol.
Complex jackson_integral(const std::function<Complex(double)>& f, double a,
                         DeformationParam q, JacksonOptions opts = {});

// Power series f(r) = sum_k c_k r^k with complex-matrix coefficients c_k.
// All coefficients share one square dimension; scalars are 1x1 matrices.
class RadialSeries {
public:
    explicit RadialSeries(std::vector<Eigen::MatrixXcd> coeffs);

    static RadialSeries zero(int max_degree, int dim);

    int max_degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    int dim() const noexcept { return static_cast<int>(coeffs_.front().rows()); }

    const Eigen::MatrixXcd& coeff(int k) const { return coeffs_.at(static_cast<size_t>(k)); }
    Eigen::MatrixXcd& coeff(int k) { return coeffs_.at(static_cast<size_t>(k)); }

    // Horner evaluation at radius r.
    Eigen::MatrixXcd eval(double r) const;

private:
    std::vector<Eigen::MatrixXcd> coeffs_;
};

// p-fold Jackson derivative applied algebraically on coefficients:
// c_k r^k -> [k] c_k r^{k-1}, iterated p times. p = 0 is the identity.
RadialSeries q_derivative_series(const RadialSeries& f, int p, DeformationParam q);

// f(0), i.e. the degree-zero coefficient.
Eigen::MatrixXcd series_eval_at_zero(const RadialSeries& f);

} // namespace qboson
