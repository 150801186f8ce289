#include "curvlab/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace curvlab::estimates {

namespace {
constexpr double kTwoPi = 2.0 * 3.14159265358979323846;
}

PeriodicField PeriodicField::random(std::uint64_t seed, int n, int grid, int band_limit) {
    if (n != 1 && n != 2) throw std::invalid_argument("PeriodicField: n must be 1 or 2");
    PeriodicField f;
    f.n_ = n;
    f.grid_ = grid;
    f.band_ = band_limit;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    // one representative per +-k pair: first nonzero component positive
    if (n == 1) {
        for (int k = 0; k <= band_limit; ++k) {
            f.waves_.push_back({k});
            f.amp_cos_.push_back(dist(rng));
            f.amp_sin_.push_back(k == 0 ? 0.0 : dist(rng));
        }
    } else {
        for (int kx = 0; kx <= band_limit; ++kx)
            for (int ky = -band_limit; ky <= band_limit; ++ky) {
                if (kx == 0 && ky < 0) continue;
                f.waves_.push_back({kx, ky});
                f.amp_cos_.push_back(dist(rng));
                f.amp_sin_.push_back((kx == 0 && ky == 0) ? 0.0 : dist(rng));
            }
    }
    // mildly red spectrum keeps high-order derivative norms comparable
    for (size_t i = 0; i < f.waves_.size(); ++i) {
        double k2 = 0.0;
        for (int c : f.waves_[i]) k2 += static_cast<double>(c) * c;
        const double w = 1.0 / (1.0 + k2);
        f.amp_cos_[i] *= w;
        f.amp_sin_[i] *= w;
    }
    f.sample();
    return f;
}

PeriodicField PeriodicField::single_mode(int n, int grid, std::span<const int> wave,
                                         double amp_cos, double amp_sin) {
    if (n != 1 && n != 2) throw std::invalid_argument("PeriodicField: n must be 1 or 2");
    PeriodicField f;
    f.n_ = n;
    f.grid_ = grid;
    f.band_ = 0;
    for (int c : wave) f.band_ = std::max(f.band_, std::abs(c));
    f.waves_.push_back(std::vector<int>(wave.begin(), wave.end()));
    f.amp_cos_.push_back(amp_cos);
    f.amp_sin_.push_back(amp_sin);
    f.sample();
    return f;
}

PeriodicField PeriodicField::constant(int n, int grid, double value) {
    std::vector<int> zero(static_cast<size_t>(n), 0);
    return single_mode(n, grid, zero, value, 0.0);
}

void PeriodicField::sample() {
    const int nvals = (n_ == 1) ? grid_ : grid_ * grid_;
    values_.assign(static_cast<size_t>(nvals), 0.0);
    for (size_t m = 0; m < waves_.size(); ++m) {
        const double ac = amp_cos_[m], as = amp_sin_[m];
        if (ac == 0.0 && as == 0.0) continue;
        if (n_ == 1) {
            const double k = waves_[m][0];
            for (int i = 0; i < grid_; ++i) {
                const double ph = kTwoPi * k * i / grid_;
                values_[static_cast<size_t>(i)] += ac * std::cos(ph) + as * std::sin(ph);
            }
        } else {
            const double kx = waves_[m][0], ky = waves_[m][1];
            for (int i = 0; i < grid_; ++i)
                for (int j = 0; j < grid_; ++j) {
                    const double ph = kTwoPi * (kx * i + ky * j) / grid_;
                    values_[static_cast<size_t>(i) * grid_ + j] +=
                        ac * std::cos(ph) + as * std::sin(ph);
                }
        }
    }
}

PeriodicField PeriodicField::derivative(int axis) const {
    if (axis < 0 || axis >= n_) throw std::invalid_argument("derivative: bad axis");
    PeriodicField f;
    f.n_ = n_;
    f.grid_ = grid_;
    f.band_ = band_;
    f.waves_ = waves_;
    f.amp_cos_.resize(waves_.size());
    f.amp_sin_.resize(waves_.size());
    for (size_t m = 0; m < waves_.size(); ++m) {
        const double w = kTwoPi * waves_[m][static_cast<size_t>(axis)];
        // d/dx (a cos + b sin) = -a w sin + b w cos
        f.amp_cos_[m] = w * amp_sin_[m];
        f.amp_sin_[m] = -w * amp_cos_[m];
    }
    f.sample();
    return f;
}

PeriodicField PeriodicField::resampled(int grid) const {
    PeriodicField f = *this;
    f.grid_ = grid;
    f.sample();
    return f;
}

std::vector<double> PeriodicField::dft_derivative_values(int axis) const {
    // naive DFT along the chosen axis; exact for band-limited data when
    // band_limit < grid/2
    const int g = grid_;
    std::vector<double> out(values_.size(), 0.0);
    const int lines = (n_ == 1) ? 1 : g;
    std::vector<double> re(static_cast<size_t>(g)), im(static_cast<size_t>(g));
    for (int line = 0; line < lines; ++line) {
        auto value_at = [&](int idx) {
            if (n_ == 1) return values_[static_cast<size_t>(idx)];
            return (axis == 0) ? values_[static_cast<size_t>(idx) * g + line]
                               : values_[static_cast<size_t>(line) * g + idx];
        };
        for (int k = 0; k < g; ++k) {
            double sr = 0.0, si = 0.0;
            for (int i = 0; i < g; ++i) {
                const double ph = -kTwoPi * k * i / g;
                sr += value_at(i) * std::cos(ph);
                si += value_at(i) * std::sin(ph);
            }
            re[static_cast<size_t>(k)] = sr / g;
            im[static_cast<size_t>(k)] = si / g;
        }
        for (int i = 0; i < g; ++i) {
            double acc = 0.0;
            for (int k = 0; k < g; ++k) {
                const int ks = (k <= g / 2) ? k : k - g;  // signed frequency
                const double w = kTwoPi * ks;
                const double ph = kTwoPi * k * i / g;
                // derivative of (re + i im) e^{i ph}: real part of i w (...) e^{i ph}
                acc += -w * re[static_cast<size_t>(k)] * std::sin(ph) -
                       w * im[static_cast<size_t>(k)] * std::cos(ph);
            }
            if (n_ == 1)
                out[static_cast<size_t>(i)] = acc;
            else if (axis == 0)
                out[static_cast<size_t>(i) * g + line] = acc;
            else
                out[static_cast<size_t>(line) * g + i] = acc;
        }
    }
    return out;
}

double lp_norm(std::span<const double> values, double p) {
    if (std::isinf(p)) {
        double m = 0.0;
        for (double v : values) m = std::max(m, std::abs(v));
        return m;
    }
    if (!(p > 0.0)) throw std::invalid_argument("lp_norm: p must be positive");
    double acc = 0.0;
    for (double v : values) acc += std::pow(std::abs(v), p);
    return std::pow(acc / static_cast<double>(values.size()), 1.0 / p);
}

std::vector<double> grad_norm_values(const PeriodicField& f, int order) {
    if (order == 0) {
        std::vector<double> v = f.values();
        for (double& x : v) x = std::abs(x);
        return v;
    }
    // accumulate |d^beta u|^2 with multinomial multiplicities over axes
    const int n = f.dim();
    std::vector<double> acc(f.values().size(), 0.0);
    if (n == 1) {
        PeriodicField d = f;
        for (int k = 0; k < order; ++k) d = d.derivative(0);
        for (size_t i = 0; i < acc.size(); ++i) acc[i] = d.values()[i] * d.values()[i];
    } else {
        for (int jx = 0; jx <= order; ++jx) {
            const int jy = order - jx;
            PeriodicField d = f;
            for (int k = 0; k < jx; ++k) d = d.derivative(0);
            for (int k = 0; k < jy; ++k) d = d.derivative(1);
            double binom = 1.0;
            for (int k = 0; k < jx; ++k) binom = binom * (order - k) / (k + 1);
            for (size_t i = 0; i < acc.size(); ++i)
                acc[i] += binom * d.values()[i] * d.values()[i];
        }
    }
    for (double& x : acc) x = std::sqrt(x);
    return acc;
}

double interpolation_gamma(int k, int m, double alpha, double beta) {
    return (1.0 - static_cast<double>(k) / m) * alpha + (static_cast<double>(k) / m) * beta;
}

namespace {

double norm_reciprocal_exponent(std::span<const double> values, double gamma) {
    // |.|_{1/gamma}; gamma = 0 means the sup norm
    if (gamma <= 0.0) return lp_norm(values, INFINITY);
    return lp_norm(values, 1.0 / gamma);
}

}  // namespace

double interpolation_ratio(const PeriodicField& f, int k, int m, double alpha, double beta) {
    if (k < 0 || m <= 0 || k > m) throw std::invalid_argument("interpolation_ratio: need 0<=k<=m");
    if (alpha < 0.0 || alpha > 1.0 || beta < 0.0 || beta > 1.0 || (alpha == 0.0 && beta == 0.0))
        throw std::invalid_argument("interpolation_ratio: exponents out of range");
    const double gk = interpolation_gamma(k, m, alpha, beta);
    const double lhs = norm_reciprocal_exponent(grad_norm_values(f, k), gk);
    const double n0 = norm_reciprocal_exponent(grad_norm_values(f, 0), alpha);
    if (n0 == 0.0) throw std::domain_error("interpolation_ratio: zero field");
    if (lhs == 0.0) return 0.0;  // e.g. constant fields with k >= 1
    const double nm = norm_reciprocal_exponent(grad_norm_values(f, m), beta);
    const double t = static_cast<double>(k) / m;
    return lhs / (std::pow(n0, 1.0 - t) * std::pow(nm, t));
}

HamiltonCheck hamilton_sequence_check(std::span<const double> f, double c) {
    HamiltonCheck out;
    const int m = static_cast<int>(f.size()) - 1;
    if (m < 1) throw std::invalid_argument("hamilton_sequence_check: need at least two entries");
    for (double v : f)
        if (!(v > 0.0)) throw std::invalid_argument("hamilton_sequence_check: sequence must be positive");

    out.hypothesis_ok = true;
    for (int k = 1; k < m; ++k) {
        const double bound = c * std::sqrt(f[static_cast<size_t>(k - 1)] * f[static_cast<size_t>(k + 1)]);
        if (f[static_cast<size_t>(k)] > bound * (1.0 + 1e-12)) {
            out.hypothesis_ok = false;
            return out;
        }
    }
    out.conclusion_ok = true;
    out.worst_slack = 1e300;
    for (int k = 0; k <= m; ++k) {
        const double t = static_cast<double>(k) / m;
        const double rhs = std::pow(c, static_cast<double>(k) * (m - k)) *
                           std::pow(f[0], 1.0 - t) * std::pow(f[static_cast<size_t>(m)], t);
        out.worst_slack = std::min(out.worst_slack, rhs - f[static_cast<size_t>(k)]);
        if (f[static_cast<size_t>(k)] > rhs * (1.0 + 1e-12)) out.conclusion_ok = false;
    }
    return out;
}

double sobolev_alpha_exponent(double m, double p, double q, int n) {
    const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
    const double inv_q = std::isinf(q) ? 0.0 : 1.0 / q;
    return (1.0 / m - inv_p) / (1.0 / m - inv_q + 1.0 / n);
}

double sobolev_chain_ratio(const PeriodicField& f, double p, double q, double m, double a_const,
                           double b_const) {
    const int n = f.dim();
    if (!(q >= 2.0)) throw std::invalid_argument("sobolev_chain_ratio: q must be >= 2");
    if (!(m >= 2.0) || (!std::isinf(p) && m > p))
        throw std::invalid_argument("sobolev_chain_ratio: need 2 <= m <= p");
    if (q < n && (std::isinf(p) || p > n * q / (n - q)))
        throw std::invalid_argument("sobolev_chain_ratio: p out of range for q < n");
    if (q == n && std::isinf(p))
        throw std::invalid_argument("sobolev_chain_ratio: p must be finite for q = n");

    const double alpha = sobolev_alpha_exponent(m, p, q, n);
    const double lhs = lp_norm(f.values(), p);
    const double um = lp_norm(f.values(), m);
    const double uq = lp_norm(f.values(), q);
    const double gq = lp_norm(grad_norm_values(f, 1), q);
    const double rhs = std::pow(um, 1.0 - alpha) * std::pow(a_const * gq + b_const * uq, alpha);
    if (rhs == 0.0) throw std::domain_error("sobolev_chain_ratio: degenerate right-hand side");
    return lhs / rhs;
}

double sobolev_infty_ratio(const PeriodicField& f, double a_const, double b_const) {
    const int n = f.dim();
    const int k = n / 2 + 1;
    auto hnorm = [&](int order, double p) {
        return std::pow(a_const, order) * lp_norm(grad_norm_values(f, order), p) +
               std::pow(b_const, order) * lp_norm(f.values(), p);
    };
    const double lhs = lp_norm(f.values(), INFINITY);
    const double u2 = lp_norm(f.values(), 2.0);
    double rhs;
    if (n == 2 * k - 1) {
        rhs = std::pow(u2, 1.0 / (n + 1)) * std::pow(hnorm(k, 2.0), static_cast<double>(n) / (n + 1));
    } else {
        rhs = std::pow(u2, 1.0 / (n + 1)) * std::pow(hnorm(1, 2.0), 1.0 / (n + 1)) *
              std::pow(hnorm(k, 2.0), static_cast<double>(n - 1) / (n + 1));
    }
    if (rhs == 0.0) throw std::domain_error("sobolev_infty_ratio: degenerate right-hand side");
    return lhs / rhs;
}

double calibrate_sobolev_b(std::span<const PeriodicField> corpus, double a_const) {
    double b = 0.0;
    for (const PeriodicField& f : corpus) {
        const double u2 = lp_norm(f.values(), 2.0);
        if (u2 == 0.0) continue;
        const double uinf = lp_norm(f.values(), INFINITY);
        const double g2 = lp_norm(grad_norm_values(f, 1), 2.0);
        b = std::max(b, (uinf - a_const * g2) / u2);
    }
    return std::max(b, 0.0);
}

std::vector<PeriodicField> make_corpus(std::uint64_t seed, int n, int grid, int band_limit,
                                       int count) {
    std::vector<PeriodicField> out;
    out.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i)
        out.push_back(PeriodicField::random(seed + static_cast<std::uint64_t>(i), n, grid, band_limit));
    return out;
}

}  // namespace curvlab::estimates
