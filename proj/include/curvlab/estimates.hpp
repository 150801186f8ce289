#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace curvlab::estimates {

/// Band-limited real trigonometric polynomial on the unit torus T^n,
/// n in {1, 2}: u(x) = sum over wave vectors |k|_inf <= band_limit of
/// a_k cos(2 pi k.x) + b_k sin(2 pi k.x). Derivatives are exact (computed on
/// the coefficients); grid values are sampled on demand, so refinement does
/// not change the field, only its quadrature.
class PeriodicField {
public:
    static PeriodicField random(std::uint64_t seed, int n, int grid, int band_limit);
    static PeriodicField single_mode(int n, int grid, std::span<const int> wave, double amp_cos,
                                     double amp_sin);
    static PeriodicField constant(int n, int grid, double value);

    int dim() const { return n_; }
    int grid() const { return grid_; }
    int band_limit() const { return band_; }

    const std::vector<double>& values() const { return values_; }

    /// Exact partial derivative d/dx_axis as another band-limited field.
    PeriodicField derivative(int axis) const;

    /// The same field sampled on a different grid.
    PeriodicField resampled(int grid) const;

    /// Derivative of the value grid computed through the discrete Fourier
    /// transform (independent of the coefficient route; for cross-checks).
    std::vector<double> dft_derivative_values(int axis) const;

private:
    PeriodicField() = default;
    void sample();

    int n_ = 1;
    int grid_ = 0;
    int band_ = 0;
    std::vector<std::vector<int>> waves_;
    std::vector<double> amp_cos_, amp_sin_;
    std::vector<double> values_;
};

/// L^p norm by uniform grid quadrature on the unit torus; p = infinity
/// takes the grid maximum.
double lp_norm(std::span<const double> values, double p);

/// Pointwise Frobenius norm of nabla^order u, returned as a value grid.
std::vector<double> grad_norm_values(const PeriodicField& f, int order);

/// LHS/RHS of the derivative interpolation inequality
///   |nabla^k u|_{1/gamma_k} <= C |u|_{1/alpha}^{1-k/m} |nabla^m u|_{1/beta}^{k/m},
/// gamma_k = (1-k/m) alpha + (k/m) beta. Throws std::domain_error when the
/// right-hand side degenerates (zero field).
double interpolation_ratio(const PeriodicField& f, int k, int m, double alpha, double beta);
double interpolation_gamma(int k, int m, double alpha, double beta);

/// Pure-sequence multiplicative estimate: if f(k) <= C sqrt(f(k-1) f(k+1))
/// for all interior k, then f(k) <= C^{k(m-k)} f(0)^{1-k/m} f(m)^{k/m}.
struct HamiltonCheck {
    bool hypothesis_ok = false;
    bool conclusion_ok = false;
    double worst_slack = 0.0;  ///< min over k of RHS - f(k) (valid when hypothesis_ok)
};
HamiltonCheck hamilton_sequence_check(std::span<const double> f, double c);

/// The interpolation exponent of the multiplicative Sobolev inequality.
double sobolev_alpha_exponent(double m, double p, double q, int n);

/// LHS/RHS of |u|_p <= C |u|_m^{1-a} (A |grad u|_q + B |u|_q)^a. The pair
/// (A, B) must satisfy the corpus-calibrated Sobolev inequality; exponent
/// regimes follow the q < n / q = n / q > n table (throws on violation).
double sobolev_chain_ratio(const PeriodicField& f, double p, double q, double m, double a_const,
                           double b_const);

/// LHS/RHS of the sup-norm chain |u|_inf <= C |u|_2^{e0} |u|_{H_1^2(A)}^{e1}
/// |u|_{H_k^2(A)}^{e2} with k = floor(n/2)+1 and the exponent split of the
/// odd/even dimension cases.
double sobolev_infty_ratio(const PeriodicField& f, double a_const, double b_const);

/// Smallest B making |u|_target <= A |grad u|_2 + B |u|_2 hold over the
/// corpus (target = sup norm on these low-dimensional tori); corpus-relative
/// by construction.
double calibrate_sobolev_b(std::span<const PeriodicField> corpus, double a_const);

/// Deterministic corpus of random band-limited fields.
std::vector<PeriodicField> make_corpus(std::uint64_t seed, int n, int grid, int band_limit,
                                       int count);

}  // namespace curvlab::estimates
