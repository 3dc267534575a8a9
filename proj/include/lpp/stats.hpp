#pragma once

#include <cstdint>
#include <vector>

namespace lpp {

struct MeanSe {
    double mean = 0.0;
    double se = 0.0;
    std::size_t n = 0;
};

MeanSe mean_se(const std::vector<double>& xs);

// Empirical CDF over a sample; evaluate() is right-continuous.
class Ecdf {
  public:
    explicit Ecdf(std::vector<double> xs);
    double evaluate(double x) const;
    std::size_t size() const { return sorted_.size(); }

  private:
    std::vector<double> sorted_;
};

// Chi-square goodness of fit against Geom(rho), binning the support
// {0, 1, ..., k, [k+1, inf)} so every bin has expected count >= min_expected.
struct GofResult {
    bool conclusive = false;
    double statistic = 0.0;
    int dof = 0;
    double p_value = 1.0;
};

GofResult chi_square_geometric(const std::vector<std::int64_t>& samples, double rho,
                               double min_expected = 5.0);

// Pearson correlation of (x_t, x_{t+lag}); NaN-free, returns 0 on degenerate
// input and sets *ok = false.
double lag_correlation(const std::vector<double>& xs, int lag, bool* ok = nullptr);
double cross_correlation(const std::vector<double>& xs, const std::vector<double>& ys,
                         bool* ok = nullptr);

// Wilson score interval for a binomial proportion.
struct WilsonInterval {
    double estimate = 0.0;
    double lo = 0.0;
    double hi = 0.0;
};

WilsonInterval wilson_interval(std::int64_t successes, std::int64_t trials, double z = 1.96);

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};

FitResult least_squares(const std::vector<double>& xs, const std::vector<double>& ys);
// Least squares on (log x, log y); skips nonpositive pairs.
FitResult loglog_fit(const std::vector<double>& xs, const std::vector<double>& ys);

// Regularized upper incomplete gamma Q(a, x); the chi-square survival
// function is Q(dof/2, stat/2).
double gamma_q(double a, double x);

}  // namespace lpp
