#include "lpp/walk_oracle.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lpp {

WalkOracle::WalkOracle(double rho_plus, double rho_minus, int truncation, int n_max,
                       double max_truncation_mass)
    : rho_plus_(rho_plus), rho_minus_(rho_minus), truncation_(truncation), n_max_(n_max) {
    if (!(rho_plus > 0.0) || rho_plus >= 1.0 || !(rho_minus > 0.0) || rho_minus >= 1.0)
        throw std::invalid_argument("WalkOracle: parameters must be in (0,1)");
    if (truncation < 1 || n_max < 1) throw std::invalid_argument("WalkOracle: bad sizes");

    const int T = truncation;
    const double c = (1.0 - rho_plus) * (1.0 - rho_minus) / (1.0 - rho_plus * rho_minus);
    // Dropped tail mass: c * (rho_plus^{T+1}/(1-rho_plus) + rho_minus^{T+1}/(1-rho_minus)).
    const double lost = c * (std::pow(rho_plus, T + 1) / (1.0 - rho_plus) +
                             std::pow(rho_minus, T + 1) / (1.0 - rho_minus));
    if (lost > max_truncation_mass)
        throw std::invalid_argument("WalkOracle: truncation keeps too little mass");

    pmf_.assign(static_cast<std::size_t>(2 * T + 1), 0.0);
    for (int k = -T; k <= T; ++k)
        pmf_[static_cast<std::size_t>(k + T)] =
            k >= 0 ? c * std::pow(rho_plus, k) : c * std::pow(rho_minus, -k);
    const double total = std::accumulate(pmf_.begin(), pmf_.end(), 0.0);
    for (double& p : pmf_) p /= total;

    // Unrestricted marginals P(S_k <= 0) by repeated convolution.
    nonpos_.resize(static_cast<std::size_t>(n_max));
    {
        const int L = n_max * T;
        std::vector<double> dist(static_cast<std::size_t>(2 * L + 1), 0.0);
        dist[static_cast<std::size_t>(L)] = 1.0;  // S_0 = 0
        std::vector<double> next(dist.size(), 0.0);
        for (int k = 1; k <= n_max; ++k) {
            std::fill(next.begin(), next.end(), 0.0);
            const int reach = k * T;
            for (int v = -(k - 1) * T; v <= (k - 1) * T; ++v) {
                const double p = dist[static_cast<std::size_t>(v + L)];
                if (p == 0.0) continue;
                for (int s = -T; s <= T; ++s) {
                    const int w = v + s;
                    if (w >= -reach && w <= reach)
                        next[static_cast<std::size_t>(w + L)] +=
                            p * pmf_[static_cast<std::size_t>(s + T)];
                }
            }
            dist.swap(next);
            double acc = 0.0;
            for (int v = -reach; v <= 0; ++v) acc += dist[static_cast<std::size_t>(v + L)];
            nonpos_[static_cast<std::size_t>(k - 1)] = acc;
        }
    }

    // Constrained route: propagate the sub-probability mass of walks that
    // have stayed <= 0 the whole time.
    stay_.resize(static_cast<std::size_t>(n_max));
    {
        const int L = n_max * T;
        std::vector<double> alive(static_cast<std::size_t>(L + 1), 0.0);  // value -v at index v
        alive[0] = 1.0;
        std::vector<double> next(alive.size(), 0.0);
        for (int k = 1; k <= n_max; ++k) {
            std::fill(next.begin(), next.end(), 0.0);
            for (int v = 0; v <= (k - 1) * T; ++v) {
                const double p = alive[static_cast<std::size_t>(v)];
                if (p == 0.0) continue;
                for (int s = -T; s <= T; ++s) {
                    const int w = v - s;  // new depth below zero
                    if (w >= 0 && w <= L) next[static_cast<std::size_t>(w)] += p * pmf_[static_cast<std::size_t>(s + T)];
                }
            }
            alive.swap(next);
            stay_[static_cast<std::size_t>(k - 1)] =
                std::accumulate(alive.begin(), alive.end(), 0.0);
        }
    }

    // Series route: q_n from exp( sum_k s^k/k P(S_k <= 0) ) via the standard
    // power-series exponentiation recurrence.
    stay_series_.resize(static_cast<std::size_t>(n_max));
    {
        std::vector<double> q(static_cast<std::size_t>(n_max) + 1, 0.0);
        q[0] = 1.0;
        for (int n = 1; n <= n_max; ++n) {
            double acc = 0.0;
            for (int k = 1; k <= n; ++k)
                acc += nonpos_[static_cast<std::size_t>(k - 1)] * q[static_cast<std::size_t>(n - k)];
            q[static_cast<std::size_t>(n)] = acc / n;
            stay_series_[static_cast<std::size_t>(n - 1)] = q[static_cast<std::size_t>(n)];
        }
    }
}

double WalkOracle::mean() const {
    return rho_plus_ / (1.0 - rho_plus_) - rho_minus_ / (1.0 - rho_minus_);
}

double WalkOracle::pmf_at(int k) const {
    if (k < -truncation_ || k > truncation_) return 0.0;
    return pmf_[static_cast<std::size_t>(k + truncation_)];
}

std::int64_t WalkOracle::sample_step(RngStream& stream, double rho_plus, double rho_minus) {
    const std::int64_t a = sample_geometric(stream, rho_plus);
    const std::int64_t b = sample_geometric(stream, rho_minus);
    return a - b;
}

}  // namespace lpp
