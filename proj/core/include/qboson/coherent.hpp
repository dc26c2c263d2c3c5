#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "qboson/fock.hpp"

// q-deformed coherent states |z> = (e_q^{|z|^2})^{-1/2} sum_n z^n/sqrt([n]!) |n>
// on the truncated Fock space, their overlaps and projectors, and the
// phase-space quadrature grid that discretizes (1/pi) int d^2z |z><z| = 1.
//
// Measure convention. Writing z = sqrt(s) e^{i theta}, the calibrated measure is
//
//   int d^2z f(z) = mu * int_0^{2pi} dtheta int_0^R [e_q^s E_q(-q s)] f d_q s,
//   mu = 1/2,  R = 1/(1-q),
//
// i.e. the Jackson q-integral in s = r^2 carries the density e_q^s E_q(-q s)
// = 1/(1 - (1-q)s) relative to d_q s. This is the unique choice (checked by
// the q-Gamma moment identity int_0^R s^n E_q(-q s) d_q s = [n]!) for which
// the resolution of unity holds exactly on the grid; at q = 1 the density is
// 1 and the measure reduces to the classical (1/2) ds dtheta = r dr dtheta.
//
// Because the density has a pole at the outermost Jackson node s = R that is
// cancelled by the (e_q^{|z|^2})^{-1} factor present in every integrand of
// interest, the grid folds that factor in analytically: its radial weights
// are mu * w_j * E_q(-q s_j) and integrate_regularized(g) approximates
// int d^2z g(z) (e_q^{|z|^2})^{-1}. Callers pass the integrand with the
// normalization factor stripped.

namespace qboson {

class CoherentState {
public:
    CoherentState(Complex z, DeformationParam q, FockTruncation trunc,
                  Eigen::VectorXcd amps, double tail_mass);

    Complex z() const noexcept { return z_; }
    DeformationParam q() const noexcept { return q_; }
    FockTruncation trunc() const noexcept { return trunc_; }
    const Eigen::VectorXcd& amps() const noexcept { return amps_; }
    // 1 - ||amps||^2, the probability mass lost to truncation.
    double tail_mass() const noexcept { return tail_mass_; }

private:
    Complex z_;
    DeformationParam q_;
    FockTruncation trunc_;
    Eigen::VectorXcd amps_;
    double tail_mass_;
};

// Builds |z>; domain error when |z|^2 >= 1/(1-q) for q < 1.
CoherentState coherent_state(Complex z, DeformationParam q, FockTruncation trunc);

// <z|z'> = (e_q^{|z|^2} e_q^{|z'|^2})^{-1/2} e_q(conj(z) z'), evaluated through
// the stable E_q forms. |overlap| <= 1 with equality iff z = z'.
Complex overlap(Complex z, Complex zp, DeformationParam q);

// ||a amps - z amps||_2; bounded by |z| |amps[n_max]| plus rounding, since the
// only defect of the truncated eigenvalue relation sits in the top level.
double eigen_residual(const CoherentState& state, const FockOperator& a);

// Rank-1 projector amps amps^dag; trace equals ||amps||^2 = 1 - tail_mass.
FockOperator projector(const CoherentState& state);

// Radial weight function folded into the grid: E_q(-q s) resolves the
// q-Gamma moment identity; E_q(-s) is the falsified alternative kept for the
// calibration report.
enum class RadialWeight { gamma_shifted, gamma_plain };

struct GridSpec {
    int radial_count = 200;
    int angular_count = 64;
    double q = 0.5;
    double mu = 0.5;
    int guard_band = 0;
    RadialWeight weight = RadialWeight::gamma_shifted;
    int n_max = 12;
};

class QuadratureGrid {
public:
    // angular_count <= 0 selects the default 2 n_max + 2, which integrates all
    // trigonometric polynomials occurring at this truncation exactly. Throws
    // grid_error when angular_count < 2 n_max + 1.
    static QuadratureGrid build(DeformationParam q, FockTruncation trunc,
                                int radial_count = 200, int angular_count = -1,
                                RadialWeight weight = RadialWeight::gamma_shifted,
                                int guard_band = -1, double mu = 0.5);

    DeformationParam q() const noexcept { return q_; }
    FockTruncation trunc() const noexcept { return trunc_; }
    int radial_count() const noexcept { return static_cast<int>(radial_nodes_.size()); }
    int angular_count() const noexcept { return angular_count_; }
    int requested_radial_count() const noexcept { return requested_radial_; }
    double mu() const noexcept { return mu_; }
    int guard_band() const noexcept { return guard_band_; }
    RadialWeight weight_form() const noexcept { return weight_; }
    // Coarse bound on the dropped radial tail, reported for reproducibility.
    double radial_tail_bound() const noexcept { return radial_tail_bound_; }

    double radial_node(int j) const { return radial_nodes_[static_cast<size_t>(j)]; }
    // Regularized weight: mu * (Jackson or Gauss-Legendre weight) * E_q(-q s_j).
    double radial_weight(int j) const { return radial_weights_[static_cast<size_t>(j)]; }
    double angular_node(int k) const;
    double angular_weight() const noexcept;

    Complex node(int j, int k) const;

    // sum_{j,k} W_j (2pi/M) g(z_jk)  ~  int d^2z g(z) (e_q^{|z|^2})^{-1}.
    Complex integrate_regularized(const std::function<Complex(Complex)>& g) const;

    GridSpec spec() const;

    // Same nodes doubled in both directions; used by refinement checks.
    QuadratureGrid refined() const;

private:
    QuadratureGrid(DeformationParam q, FockTruncation trunc) : q_(q), trunc_(trunc) {}

    DeformationParam q_;
    FockTruncation trunc_;
    std::vector<double> radial_nodes_;
    std::vector<double> radial_weights_;
    int angular_count_ = 0;
    int requested_radial_ = 0;
    double mu_ = 0.5;
    int guard_band_ = 0;
    RadialWeight weight_ = RadialWeight::gamma_shifted;
    double radial_tail_bound_ = 0.0;
};

struct UnityResult {
    FockOperator matrix;
    // max |matrix - I| over the guard-banded interior block 0..n_max-K.
    double interior_deviation;
    // max |matrix - I| over the full block.
    double full_deviation;
};

// (1/pi) sum_{j,k} W_j (2pi/M) |z_jk><z_jk| against the identity, with the
// normalization of |z_jk> folded into W_j as described above.
UnityResult resolution_of_unity(DeformationParam q, FockTruncation trunc,
                                const QuadratureGrid& grid);

} // namespace qboson
