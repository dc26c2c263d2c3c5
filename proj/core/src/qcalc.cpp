#include "qboson/qcalc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace qboson {

namespace {

// Neumaier-compensated accumulator; keeps node sums deterministic and
// insensitive to magnitude ordering.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }

    double value() const { return sum + comp; }
};

struct CompensatedComplexSum {
    CompensatedSum re, im;
    void add(Complex z) {
        re.add(z.real());
        im.add(z.imag());
    }
    Complex value() const { return {re.value(), im.value()}; }
};

std::pair<double, double> gauss_legendre_node(int i, int n) {
    // Newton iteration on the Legendre polynomial; standard Golub-Welsch-free
    // construction, adequate for the modest node counts used here.
    const double pi = std::acos(-1.0);
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        const double dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    const double dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    return {x, w};
}

} // namespace

DeformationParam::DeformationParam(double q) : q_(q) {
    if (!(q > 0.0) || q > 1.0 || !std::isfinite(q)) {
        std::ostringstream msg;
        msg << "deformation parameter must satisfy 0 < q <= 1, got " << q;
        throw domain_error(msg.str());
    }
}

double q_number(int n, DeformationParam q) {
    if (n < 0) throw domain_error("q_number requires n >= 0");
    if (q.is_classical()) return static_cast<double>(n);
    // 1 - q^n evaluated as -expm1(n log q) to keep precision near q = 1.
    return -std::expm1(static_cast<double>(n) * std::log(q.value())) / (1.0 - q.value());
}

double q_factorial(int n, DeformationParam q) {
    if (n < 0) throw domain_error("q_factorial requires n >= 0");
    double acc = 1.0;
    for (int k = 1; k <= n; ++k) {
        acc *= q_number(k, q);
        if (!std::isfinite(acc)) {
            std::ostringstream msg;
            msg << "q_factorial overflows double at n = " << k << " (q = " << q.value() << ")";
            throw std::overflow_error(msg.str());
        }
    }
    return acc;
}

double q_exp_first_zero(DeformationParam q) {
    if (q.is_classical()) {
        throw domain_error("q_exp_first_zero undefined at q = 1: exp has no finite zero");
    }
    return 1.0 / (1.0 - q.value());
}

namespace {

Complex big_E_product(Complex x, DeformationParam qp, const SeriesOptions& opts) {
    // E_q(x) = prod_{k>=0} (1 + (1-q) x q^k). The factors converge to 1
    // geometrically; stop once the remaining relative perturbation is below tol.
    const double q = qp.value();
    const double scale = (1.0 - q) * std::abs(x);
    Complex prod = 1.0;
    double factor_mag = scale;
    Complex xq = x;
    for (int k = 0; k < opts.max_terms; ++k) {
        prod *= 1.0 + (1.0 - q) * xq;
        xq *= q;
        factor_mag *= q;
        // remaining product differs from 1 by at most ~ factor_mag/(1-q) once small
        if (factor_mag < 0.5 * opts.tol * (1.0 - q) && k >= 4) {
            return prod;
        }
    }
    throw convergence_error("E_q product did not converge within the term cap");
}

Complex small_e_series(Complex x, DeformationParam qp, const SeriesOptions& opts) {
    Complex sum = 0.0;
    Complex term = 1.0;
    for (int n = 0; n < opts.max_terms; ++n) {
        sum += term;
        term *= x / q_number(n + 1, qp);
        if (std::abs(term) < opts.tol * (std::abs(sum) + 1.0)) {
            return sum + term;
        }
    }
    throw convergence_error("e_q series did not converge within the term cap");
}

} // namespace

Complex q_exponential(Complex x, DeformationParam q, QExpVariant variant, SeriesOptions opts) {
    if (!(opts.tol > 0.0)) throw domain_error("q_exponential requires tol > 0");
    if (q.is_classical()) return std::exp(x);

    if (variant == QExpVariant::big_E) {
        return big_E_product(x, q, opts);
    }

    const double radius = q_exp_first_zero(q);
    const bool effectively_real = std::abs(x.imag()) <= 1e-14 * (std::abs(x.real()) + 1.0);
    if (effectively_real && x.real() >= radius * (1.0 - 1e-12)) {
        std::ostringstream msg;
        msg << "e_q diverges for real x >= 1/(1-q) = " << radius << " (got x = " << x.real() << ")";
        throw domain_error(msg.str());
    }
    // Monotone-term region: direct series. Elsewhere 1/E_q(-x) avoids the
    // catastrophic cancellation of the alternating tail.
    if (x.real() >= 0.0 && std::abs(x) < 0.97 * radius) {
        return small_e_series(x, q, opts);
    }
    return 1.0 / big_E_product(-x, q, opts);
}

Complex jackson_integral(const std::function<Complex(double)>& f, double a,
                         DeformationParam qp, JacksonOptions opts) {
    if (!(a > 0.0)) throw domain_error("jackson_integral requires a > 0");
    if (!(opts.tol > 0.0)) throw domain_error("jackson_integral requires tol > 0");

    if (qp.is_classical()) {
        // Riemann limit: composite Gauss-Legendre on [0, a].
        const int per_panel = 16;
        const int panels = std::max(1, (opts.riemann_min_nodes + per_panel - 1) / per_panel);
        CompensatedComplexSum acc;
        for (int p = 0; p < panels; ++p) {
            const double lo = a * p / panels;
            const double hi = a * (p + 1) / panels;
            for (int i = 0; i < per_panel; ++i) {
                const auto [x, w] = gauss_legendre_node(i, per_panel);
                const double t = 0.5 * (hi - lo) * x + 0.5 * (hi + lo);
                acc.add(0.5 * (hi - lo) * w * f(t));
            }
        }
        return acc.value();
    }

    const double q = qp.value();
    CompensatedComplexSum acc;
    double node = a;
    double weight = a * (1.0 - q);
    // Proxy for sup |f| on the remaining nodes: running max over a recent window.
    double recent_max = 0.0;
    constexpr int window = 6;
    double window_vals[window] = {0, 0, 0, 0, 0, 0};
    for (long j = 0; j < opts.max_nodes; ++j) {
        const Complex fx = f(node);
        if (!std::isfinite(fx.real()) || !std::isfinite(fx.imag())) {
            throw convergence_error("jackson_integral: integrand not finite at a node");
        }
        acc.add(weight * fx);
        window_vals[j % window] = std::abs(fx);
        recent_max = *std::max_element(window_vals, window_vals + window);
        // tail <= a q^{j+1} sup_{remaining} |f|, with the window max as proxy
        const double tail_bound = a * std::pow(q, static_cast<double>(j + 1)) * 2.0 * std::max(recent_max, 1e-300);
        if (j >= window && tail_bound < opts.tol * (std::abs(acc.value().real()) + std::abs(acc.value().imag()) + 1.0)) {
            return acc.value();
        }
        node *= q;
        weight *= q;
    }
    throw convergence_error("jackson_integral did not meet tol within the node cap");
}

RadialSeries::RadialSeries(std::vector<Eigen::MatrixXcd> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("RadialSeries requires at least one coefficient");
    const auto rows = coeffs_.front().rows();
    const auto cols = coeffs_.front().cols();
    if (rows != cols) throw std::invalid_argument("RadialSeries coefficients must be square");
    for (const auto& c : coeffs_) {
        if (c.rows() != rows || c.cols() != cols) {
            throw std::invalid_argument("RadialSeries coefficients must share one dimension");
        }
    }
}

RadialSeries RadialSeries::zero(int max_degree, int dim) {
    if (max_degree < 0 || dim <= 0) throw std::invalid_argument("RadialSeries::zero: bad shape");
    std::vector<Eigen::MatrixXcd> cs(static_cast<size_t>(max_degree) + 1,
                                     Eigen::MatrixXcd::Zero(dim, dim));
    return RadialSeries(std::move(cs));
}

Eigen::MatrixXcd RadialSeries::eval(double r) const {
    Eigen::MatrixXcd acc = coeffs_.back();
    for (int k = max_degree() - 1; k >= 0; --k) {
        acc = acc * r + coeffs_[static_cast<size_t>(k)];
    }
    return acc;
}

RadialSeries q_derivative_series(const RadialSeries& f, int p, DeformationParam q) {
    if (p < 0) throw domain_error("q_derivative_series requires p >= 0");
    if (p > f.max_degree()) throw domain_error("q_derivative_series requires p <= max_degree");
    RadialSeries cur = f;
    for (int it = 0; it < p; ++it) {
        RadialSeries next = RadialSeries::zero(std::max(cur.max_degree() - 1, 0), cur.dim());
        for (int k = 1; k <= cur.max_degree(); ++k) {
            next.coeff(k - 1) = q_number(k, q) * cur.coeff(k);
        }
        cur = std::move(next);
    }
    return cur;
}

Eigen::MatrixXcd series_eval_at_zero(const RadialSeries& f) {
    return f.coeff(0);
}

} // namespace qboson
