#include "lpp/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lpp {

MeanSe mean_se(const std::vector<double>& xs) {
    MeanSe m;
    m.n = xs.size();
    if (m.n == 0) return m;
    double sum = 0.0;
    for (double x : xs) sum += x;
    m.mean = sum / static_cast<double>(m.n);
    if (m.n < 2) return m;
    double ss = 0.0;
    for (double x : xs) ss += (x - m.mean) * (x - m.mean);
    m.se = std::sqrt(ss / (static_cast<double>(m.n) * static_cast<double>(m.n - 1)));
    return m;
}

Ecdf::Ecdf(std::vector<double> xs) : sorted_(std::move(xs)) {
    std::sort(sorted_.begin(), sorted_.end());
}

double Ecdf::evaluate(double x) const {
    if (sorted_.empty()) return 0.0;
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

namespace {

// Regularized lower incomplete gamma by series (x < a+1).
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Regularized upper incomplete gamma by continued fraction (x >= a+1).
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-15) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double gamma_q(double a, double x) {
    if (!(a > 0.0) || x < 0.0) throw std::invalid_argument("gamma_q: bad arguments");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

GofResult chi_square_geometric(const std::vector<std::int64_t>& samples, double rho,
                               double min_expected) {
    GofResult res;
    if (!(rho > 0.0) || rho >= 1.0)
        throw std::invalid_argument("chi_square_geometric: rho must be in (0,1)");
    const double n = static_cast<double>(samples.size());
    if (n < 1.0) return res;

    // Bins 0..k-1 plus the tail [k, inf); pick k so the tail expectation is
    // still >= min_expected (tail mass of Geom is rho^k).
    int k = 0;
    while (n * std::pow(rho, k + 1) * (1.0 - rho) >= min_expected &&
           n * std::pow(rho, k + 1) >= min_expected)
        ++k;
    if (k < 1 || n * std::pow(rho, k) < min_expected) {
        // Not enough mass to split even once.
        if (k < 1) return res;
    }

    std::vector<double> observed(static_cast<std::size_t>(k) + 1, 0.0);
    for (std::int64_t s : samples) {
        if (s < 0) throw std::invalid_argument("chi_square_geometric: negative sample");
        const std::size_t bin = s >= k ? static_cast<std::size_t>(k) : static_cast<std::size_t>(s);
        observed[bin] += 1.0;
    }
    double stat = 0.0;
    for (int i = 0; i <= k; ++i) {
        const double expected =
            i < k ? n * std::pow(rho, i) * (1.0 - rho) : n * std::pow(rho, k);
        if (expected < min_expected) return res;  // inconclusive binning
        const double d = observed[static_cast<std::size_t>(i)] - expected;
        stat += d * d / expected;
    }
    res.conclusive = true;
    res.statistic = stat;
    res.dof = k;  // k+1 bins, probabilities fixed by rho
    res.p_value = gamma_q(0.5 * res.dof, 0.5 * stat);
    return res;
}

namespace {

double pearson(const double* xs, const double* ys, std::size_t n, bool* ok) {
    if (ok) *ok = false;
    if (n < 2) return 0.0;
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - mx, dy = ys[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx <= 0.0 || syy <= 0.0) return 0.0;
    if (ok) *ok = true;
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace

double lag_correlation(const std::vector<double>& xs, int lag, bool* ok) {
    if (lag < 1 || static_cast<std::size_t>(lag) >= xs.size()) {
        if (ok) *ok = false;
        return 0.0;
    }
    const std::size_t n = xs.size() - static_cast<std::size_t>(lag);
    return pearson(xs.data(), xs.data() + lag, n, ok);
}

double cross_correlation(const std::vector<double>& xs, const std::vector<double>& ys, bool* ok) {
    const std::size_t n = std::min(xs.size(), ys.size());
    return pearson(xs.data(), ys.data(), n, ok);
}

WilsonInterval wilson_interval(std::int64_t successes, std::int64_t trials, double z) {
    if (trials <= 0 || successes < 0 || successes > trials)
        throw std::invalid_argument("wilson_interval: bad counts");
    WilsonInterval w;
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    w.estimate = p;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    w.lo = std::max(0.0, center - half);
    w.hi = std::min(1.0, center + half);
    return w;
}

FitResult least_squares(const std::vector<double>& xs, const std::vector<double>& ys) {
    FitResult f;
    const std::size_t n = std::min(xs.size(), ys.size());
    if (n < 2) return f;
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - mx, dy = ys[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx <= 0.0) return f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.r2 = syy <= 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    return f;
}

FitResult loglog_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
    std::vector<double> lx, ly;
    const std::size_t n = std::min(xs.size(), ys.size());
    for (std::size_t i = 0; i < n; ++i)
        if (xs[i] > 0.0 && ys[i] > 0.0) {
            lx.push_back(std::log(xs[i]));
            ly.push_back(std::log(ys[i]));
        }
    return least_squares(lx, ly);
}

}  // namespace lpp
