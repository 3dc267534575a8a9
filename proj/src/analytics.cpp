#include "lpp/analytics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lpp {

namespace {

void check_r(double r) {
    if (!(r > 0.0) || r >= 1.0) throw std::invalid_argument("analytics: r must be in (0,1)");
}

}  // namespace

bool in_cone(double x1, double x2, double delta) {
    return x1 > 0.0 && x2 > 0.0 && x1 >= delta * x2 && x2 >= delta * x1;
}

double pbar(double xi1, double xi2, double r) {
    check_r(r);
    if (!(xi1 >= 0.0) || !(xi2 >= 0.0) || xi1 + xi2 <= 0.0)
        throw std::invalid_argument("pbar: direction components must be nonnegative");
    // Normalize; pbar is invariant under scaling of the direction.
    const double s = xi1 + xi2;
    const double a = xi1 / s, b = xi2 / s;
    const double root = std::sqrt(r * a * b);
    return (r * (a + b) + (r + 1.0) * root) / (a + r * b + 2.0 * root);
}

Direction xibar(double p, double r) {
    check_r(r);
    if (!(p > r) || !(p < 1.0)) throw std::invalid_argument("xibar: p must be in (r,1)");
    const double den = p * p * (r + 1.0) - 4.0 * p * r + r * (r + 1.0);
    const double n1 = r * (1.0 - p) * (1.0 - p);
    const double n2 = (p - r) * (p - r);
    return {n1 / den, n2 / den};
}

double shape_gamma(double x1, double x2, double r) {
    check_r(r);
    if (x1 < 0.0 || x2 < 0.0)
        throw std::invalid_argument("shape_gamma: components must be nonnegative");
    return (r * (x1 + x2) + 2.0 * std::sqrt(r * x1 * x2)) / (1.0 - r);
}

double stationary_M(double p, double x1, double x2, double r) {
    check_r(r);
    if (!(p > r) || !(p < 1.0)) throw std::invalid_argument("stationary_M: p must be in (r,1)");
    if (x1 < 0.0 || x2 < 0.0)
        throw std::invalid_argument("stationary_M: components must be nonnegative");
    return p * x1 / (1.0 - p) + r * x2 / (p - r);
}

double pbar_minus_lambda(double a, double b, double lambda, double r) {
    check_r(r);
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("pbar_minus_lambda: need a, b > 0");
    if (!(lambda >= 1.0) || lambda > 1.0 / r + 1e-12)
        throw std::invalid_argument("pbar_minus_lambda: lambda must be in [1, 1/r]");
    if (lambda == 1.0) return pbar(a, b, r);
    if (std::abs(a - r * b) < 1e-9 * b) return (r + 1.0) / (lambda + 1.0);

    const double diff = a - b;
    const double A = r * (lambda + 1.0) * diff;
    const double radicand =
        A * A - 4.0 * r * lambda * (r * a - b) * (a - r * b);
    const double B = std::sqrt(std::max(radicand, 0.0));
    if (diff >= 0.0) {
        // No cancellation in the printed form when a >= b.
        return (A + B) / (2.0 * lambda * (a - r * b));
    }
    // a < b: rationalize so the numerator does not cancel near a = rb.
    return 2.0 * r * (b - r * a) / (B - A);
}

double pbar_plus_lambda(double a, double b, double lambda, double r) {
    return lambda * pbar_minus_lambda(a, b, lambda, r);
}

double L_pq(double m, double n, double p, double q, double r) {
    check_r(r);
    if (!(p > r) || p >= 1.0 || !(q > r) || q >= 1.0)
        throw std::invalid_argument("L_pq: p, q must be in (r,1)");
    return m * std::log((1.0 - p) / (1.0 - q)) + n * std::log((1.0 - r / q) / (1.0 - r / p));
}

CurlyL curlyL(double lambda, double q, double m, double n, double r) {
    check_r(r);
    if (!(lambda >= 1.0)) throw std::invalid_argument("curlyL: lambda must be >= 1");
    if (!(q >= r) || q >= 1.0) throw std::invalid_argument("curlyL: q must be in [r,1)");
    CurlyL out;
    if (lambda >= 1.0 / q) {
        out.finite = false;
        out.value = std::numeric_limits<double>::infinity();
        return out;
    }
    if (lambda == 1.0) {
        out.argmin = std::max(q, pbar(m, n, r));
        out.value = 0.0;
        return out;
    }
    const double s = std::max(q, pbar_minus_lambda(m, n, lambda, r));
    out.argmin = s;
    out.value = L_pq(m, n, s, lambda * s, r);
    return out;
}

BoundConstants bound_constants(double delta, double r) {
    check_r(r);
    if (!(delta > 0.0) || delta >= 1.0)
        throw std::invalid_argument("bound_constants: delta must be in (0,1)");
    BoundConstants c;
    const double sr = std::sqrt(r);
    if (delta < r) {
        const double inv = 1.0 / delta;
        const double one_m_r = 1.0 - r;
        const double term =
            (inv + 1.0) * ((1.0 + r) * (1.0 + r) * delta + 2.0 * r * r + 2.0) /
                (8.0 * one_m_r * one_m_r * delta) +
            r * (r + 1.0) * (inv + 1.0) / (4.0 * one_m_r * std::sqrt(r * delta)) +
            (r * inv + 1.0) / (2.0 * one_m_r * std::sqrt(r * delta));
        c.C0 = std::max(r + 1.0, term);
    } else {
        c.C0 = std::nan("");
    }
    c.C1 = (1.0 + delta) * (1.0 + delta) * r * (1.0 - r) /
           (2.0 * delta * delta * sr * (1.0 + sr) * (1.0 + sr));
    c.C2 = 2.0 * (r + 1.0) * (r + 1.0) / (r * (1.0 - r));
    c.shape_lo = r / (1.0 - r);
    c.shape_hi = (r + sr) / (1.0 - r);
    c.pbar_lo = r + (1.0 - r) * delta * std::sqrt(r * delta) / ((1.0 + sr) * (1.0 + sr));
    c.pbar_hi = 1.0 - (1.0 - sr) * delta / (1.0 + sr);
    return c;
}

double L_tilt_quadratic(double s, double lambda, double a, double b, double r) {
    check_r(r);
    const double d = lambda - 1.0;
    const double lin = a * s / (1.0 - s) + b * r / (s - r);
    const double quad = a * s * s / ((1.0 - s) * (1.0 - s)) -
                        b * r * (2.0 * s - r) / ((s - r) * (s - r));
    return d * lin + 0.5 * d * d * quad;
}

double L_tilt_remainder_bound(double eps, double a, double b, double lambda) {
    const double d = lambda - 1.0;
    return 2.0 * (a + b) * d * d * d / (eps * eps * eps);
}

}  // namespace lpp
