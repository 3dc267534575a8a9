#pragma once

namespace lpp {

// Direction in the open simplex, normalized so x1 + x2 = 1.
struct Direction {
    double x1 = 0.5;
    double x2 = 0.5;
};

// Membership in the cone S_delta: x1 >= delta*x2 and x2 >= delta*x1.
bool in_cone(double x1, double x2, double delta);

// Characteristic parameter of a direction; scale-invariant, value in (r,1).
double pbar(double xi1, double xi2, double r);

// Characteristic direction of a parameter p in (r,1); inverse of pbar.
Direction xibar(double p, double r);

// Limit shape: gamma(x) = r(x1+x2)/(1-r) + 2 sqrt(r x1 x2)/(1-r).
double shape_gamma(double x1, double x2, double r);

// Mean of the stationary model: M^p(x) = p x1/(1-p) + r x2/(p-r);
// minimized over p at pbar(x) where it equals shape_gamma(x).
double stationary_M(double p, double x1, double x2, double r);

// The lower root p of M^{lambda p}(a,b) = M^p(a,b), for lambda in [1, 1/r]:
// r <= pbar_minus <= pbar(a,b) <= pbar_plus = lambda*pbar_minus <= 1.
double pbar_minus_lambda(double a, double b, double lambda, double r);
double pbar_plus_lambda(double a, double b, double lambda, double r);

// Two-parameter tilt value; also the closed-form log-MGF of the
// increment-stationary passage time at tilt log(q/p):
//   m log((1-p)/(1-q)) + n log((1-r/q)/(1-r/p)).
double L_pq(double m, double n, double p, double q, double r);

struct CurlyL {
    bool finite = true;
    double value = 0.0;
    double argmin = 0.0;  // minimizing s; meaningful when finite
};

// inf over s in (q, 1/lambda) of L^{s, lambda*s}(m,n); infinite when
// lambda >= 1/q, otherwise attained at s = max(q, pbar_minus_lambda(m,n)).
CurlyL curlyL(double lambda, double q, double m, double n, double r);

struct BoundConstants {
    double C0 = 0.0;  // pbar_minus drift bound; defined for delta < r
    double C1 = 0.0;  // Lipschitz bound for pbar along directions
    double C2 = 0.0;  // Lipschitz bound for xibar in p
    double shape_lo = 0.0;  // gamma(x) >= shape_lo * |x|_1
    double shape_hi = 0.0;  // gamma(x) <= shape_hi * |x|_1
    double pbar_lo = 0.0;   // pbar(x) >= pbar_lo on the cone
    double pbar_hi = 0.0;   // pbar(x) <= pbar_hi on the cone
};

// The explicit constants as written; requesting C0 with delta >= r is a
// parameter error because the bound is only stated on that range.
BoundConstants bound_constants(double delta, double r);

// Quadratic expansion of lambda -> L^{s, lambda*s}(a,b) at lambda = 1, and
// the remainder envelope 2 eps^-3 (a+b) (lambda-1)^3 valid for
// eps in (0, min(r, 1-s, (1-r)/2)) and lambda in [max((r+eps)/s,1), (1-eps)/s].
double L_tilt_quadratic(double s, double lambda, double a, double b, double r);
double L_tilt_remainder_bound(double eps, double a, double b, double lambda);

}  // namespace lpp
