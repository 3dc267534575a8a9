#pragma once

#include <cstdint>
#include <vector>

#include "lpp/rng.hpp"

namespace lpp {

// Exact (up to truncation below 1e-10 total mass) distribution machinery for
// the random walk whose step is A - B with independent A ~ Geom(rho_plus),
// B ~ Geom(rho_minus). The step pmf has the closed form
//   P(X = k) = c * rho_plus^k   (k >= 0),   c * rho_minus^-k (k < 0),
//   c = (1-rho_plus)(1-rho_minus) / (1 - rho_plus*rho_minus).
class WalkOracle {
  public:
    WalkOracle(double rho_plus, double rho_minus, int truncation, int n_max,
               double max_truncation_mass = 1e-10);

    double rho_plus() const { return rho_plus_; }
    double rho_minus() const { return rho_minus_; }
    int truncation() const { return truncation_; }
    int n_max() const { return n_max_; }
    double mean() const;

    // pmf over [-T, T], renormalized to total mass 1 (within 1e-12).
    const std::vector<double>& pmf() const { return pmf_; }
    double pmf_at(int k) const;

    // P(S_k <= 0) for the unrestricted walk, k in [1, n_max].
    double prob_nonpositive(int k) const { return nonpos_[static_cast<std::size_t>(k - 1)]; }

    // q_n = P(S_1 <= 0, ..., S_n <= 0), by direct constrained convolution.
    double stay_nonpositive(int n) const { return stay_[static_cast<std::size_t>(n - 1)]; }

    // The same probabilities out of the fluctuation identity
    //   sum_n q_n s^n = exp( sum_k s^k/k * P(S_k <= 0) ),
    // an independent route through the unrestricted marginals.
    double stay_nonpositive_series(int n) const {
        return stay_series_[static_cast<std::size_t>(n - 1)];
    }

    // One sampled step (for Monte Carlo cross-checks).
    static std::int64_t sample_step(RngStream& stream, double rho_plus, double rho_minus);

  private:
    double rho_plus_, rho_minus_;
    int truncation_, n_max_;
    std::vector<double> pmf_;          // index k + T
    std::vector<double> nonpos_;       // P(S_k <= 0)
    std::vector<double> stay_;         // constrained-convolution q_n
    std::vector<double> stay_series_;  // series-route q_n
};

}  // namespace lpp
