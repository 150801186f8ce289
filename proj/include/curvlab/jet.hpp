#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace curvlab::jets {

/// Monomial bookkeeping for truncated multivariate polynomials in `nvars`
/// variables up to total degree `max_degree`. Monomials are ordered by total
/// degree then lexicographically, so truncation to a lower degree is a prefix.
/// Instances are cached; all jets hold a pointer into the cache.
class JetSpace {
public:
    static const JetSpace& get(int nvars, int max_degree);

    int nvars() const { return nvars_; }
    int max_degree() const { return max_degree_; }

    /// Number of monomials of total degree <= d.
    int size(int d) const { return prefix_[static_cast<size_t>(d)]; }
    int total_size() const { return static_cast<int>(expo_.size()) / nvars_; }

    int degree_of(int idx) const { return degree_[static_cast<size_t>(idx)]; }
    std::span<const int> exponent(int idx) const {
        return {expo_.data() + static_cast<size_t>(idx) * nvars_, static_cast<size_t>(nvars_)};
    }

    /// Index of the product monomial, or -1 beyond max_degree.
    int product(int ia, int ib) const {
        return prod_[static_cast<size_t>(ia) * total_size() + ib];
    }

    /// Index of monomial / x_var (or -1 when the exponent vanishes).
    int lower(int idx, int var) const {
        return lower_[static_cast<size_t>(idx) * nvars_ + var];
    }

private:
    JetSpace(int nvars, int max_degree);

    int nvars_;
    int max_degree_;
    std::vector<int> expo_;    // total_size x nvars
    std::vector<int> degree_;  // total_size
    std::vector<int> prefix_;  // max_degree+1
    std::vector<int> prod_;    // total_size^2
    std::vector<int> lower_;   // total_size x nvars
};

/// First-order dual number a + b*eps with eps^2 = 0; the coefficient ring for
/// machine-exact directional derivatives of the jet pipeline.
struct Dual {
    double re = 0.0;
    double eps = 0.0;

    Dual() = default;
    Dual(double r) : re(r) {}  // NOLINT: implicit by design
    Dual(double r, double e) : re(r), eps(e) {}

    Dual& operator+=(const Dual& o) {
        re += o.re;
        eps += o.eps;
        return *this;
    }
    Dual& operator-=(const Dual& o) {
        re -= o.re;
        eps -= o.eps;
        return *this;
    }
    Dual& operator*=(const Dual& o) {
        eps = re * o.eps + eps * o.re;
        re *= o.re;
        return *this;
    }
    Dual& operator/=(const Dual& o) {
        const double inv = 1.0 / o.re;
        re *= inv;
        eps = (eps - re * o.eps) * inv;
        return *this;
    }
    friend Dual operator+(Dual a, const Dual& b) { return a += b; }
    friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
    friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
    friend Dual operator/(Dual a, const Dual& b) { return a /= b; }
    friend Dual operator-(const Dual& a) { return {-a.re, -a.eps}; }
};

inline double coeff_magnitude(double x) { return std::abs(x); }
inline double coeff_magnitude(const Dual& d) { return std::abs(d.re) + std::abs(d.eps); }
inline double real_part(double x) { return x; }
inline double real_part(const Dual& d) { return d.re; }
inline double eps_part(double) { return 0.0; }
inline double eps_part(const Dual& d) { return d.eps; }

/// Truncated polynomial with coefficient type T (double or Dual). Every jet
/// carries the degree to which its coefficients are trustworthy; arithmetic
/// truncates to the weaker operand, and differentiation lowers the degree by
/// one. This makes the truncation algebra exact: no coefficient is ever kept
/// beyond the order determined by the inputs.
template <typename T>
class Jet {
public:
    Jet() = default;
    Jet(const JetSpace* sp, int degree)
        : sp_(sp), degree_(degree), c_(static_cast<size_t>(sp->size(degree)), T(0.0)) {
        if (degree < 0 || degree > sp->max_degree())
            throw std::invalid_argument("Jet: degree out of range");
    }

    static Jet constant(const JetSpace* sp, int degree, T v) {
        Jet j(sp, degree);
        j.c_[0] = v;
        return j;
    }

    const JetSpace* space() const { return sp_; }
    int degree() const { return degree_; }
    int size() const { return static_cast<int>(c_.size()); }

    T& operator[](int i) { return c_[static_cast<size_t>(i)]; }
    const T& operator[](int i) const { return c_[static_cast<size_t>(i)]; }

    /// Value at the chart origin.
    T value() const { return c_.empty() ? T(0.0) : c_[0]; }

    Jet truncated(int d) const {
        if (d >= degree_) return *this;
        Jet out(sp_, d);
        for (int i = 0; i < out.size(); ++i) out.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)];
        return out;
    }

    Jet& operator+=(const Jet& o) {
        align(o);
        for (int i = 0; i < size(); ++i) c_[static_cast<size_t>(i)] += o.c_[static_cast<size_t>(i)];
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        align(o);
        for (int i = 0; i < size(); ++i) c_[static_cast<size_t>(i)] -= o.c_[static_cast<size_t>(i)];
        return *this;
    }
    Jet& operator*=(T s) {
        for (T& x : c_) x *= s;
        return *this;
    }

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(T s, Jet a) { return a *= s; }
    friend Jet operator-(Jet a) {
        for (T& x : a.c_) x = -x;
        return a;
    }

    friend Jet operator*(const Jet& a, const Jet& b) {
        const JetSpace* sp = a.sp_;
        Jet out(sp, std::min(a.degree_, b.degree_));
        const int na = std::min<int>(a.size(), out.size());
        for (int ia = 0; ia < na; ++ia) {
            const T& ca = a.c_[static_cast<size_t>(ia)];
            if (ca == T(0.0)) continue;
            const int rem = out.degree_ - sp->degree_of(ia);
            const int nb = std::min<int>(b.size(), sp->size(rem));
            for (int ib = 0; ib < nb; ++ib) {
                const T& cb = b.c_[static_cast<size_t>(ib)];
                if (cb == T(0.0)) continue;
                out.c_[static_cast<size_t>(sp->product(ia, ib))] += ca * cb;
            }
        }
        return out;
    }

    /// Multiplicative inverse: requires an invertible constant term.
    Jet reciprocal() const {
        const T v0 = value();
        Jet u = *this;
        u *= T(1.0) / v0;
        u.c_[0] -= T(1.0);  // u = x/x0 - 1, vanishes at 0
        // 1/x = (1/x0) * sum_k (-u)^k
        Jet acc = Jet::constant(sp_, degree_, T(1.0));
        for (int k = 0; k < degree_; ++k) {
            acc = acc * u;
            acc *= T(-1.0);
            acc.c_[0] += T(1.0);
        }
        acc *= T(1.0) / v0;
        return acc;
    }

    /// Partial derivative with respect to variable `var` (degree drops by 1).
    Jet derivative(int var) const {
        Jet out(sp_, degree_ - 1);
        for (int i = 0; i < size(); ++i) {
            const int lo = sp_->lower(i, var);
            if (lo < 0) continue;
            const int e = sp_->exponent(i)[static_cast<size_t>(var)];
            if (lo < out.size()) out.c_[static_cast<size_t>(lo)] += T(static_cast<double>(e)) * c_[static_cast<size_t>(i)];
        }
        return out;
    }

    double max_abs_coeff() const {
        double m = 0.0;
        for (const T& x : c_) m = std::max(m, coeff_magnitude(x));
        return m;
    }

private:
    void align(const Jet& o) {
        if (o.sp_ != sp_) throw std::invalid_argument("Jet: mixed spaces");
        if (o.degree_ < degree_) {
            degree_ = o.degree_;
            c_.resize(static_cast<size_t>(sp_->size(degree_)));
        }
    }

    const JetSpace* sp_ = nullptr;
    int degree_ = 0;
    std::vector<T> c_;
};

inline bool operator==(const Dual& a, const Dual& b) { return a.re == b.re && a.eps == b.eps; }

}  // namespace curvlab::jets
