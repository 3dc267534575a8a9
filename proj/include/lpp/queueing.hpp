#pragma once

#include <cstdint>
#include <vector>

#include "lpp/rng.hpp"

namespace lpp {

// One pass of the single-server queue recursions over a window:
//   t_j = (t_{j-1} - a_j)^+ + s_j,   d_j = t_j + a_j - t_{j-1},
//   dual_j = min(a_j, t_{j-1}),
// with t_{-1} = t_init. All arithmetic exact in 64-bit.
struct QueueTrace {
    std::vector<std::int64_t> arrivals;
    std::vector<std::int64_t> services;
    std::vector<std::int64_t> sojourns;
    std::vector<std::int64_t> departures;
    std::vector<std::int64_t> dual_services;
    std::int64_t t_init = 0;
};

QueueTrace lindley(const std::vector<std::int64_t>& arrivals,
                   const std::vector<std::int64_t>& services, std::int64_t t_init);

// Geom(sigma/alpha) draw: the stationary sojourn law of a queue with
// Geom(alpha) arrivals and Geom(sigma) services. Initializing a finite window
// with it makes the window exactly stationary. sigma >= alpha is unstable.
std::uint32_t stationary_sojourn_init(RngStream& stream, double sigma, double alpha);

// Departures of a window, with the first index at which they no longer depend
// on the unknown pre-window state. Computed by running the recursion from
// t_init = 0 and from a huge t_init; once the two sojourn runs meet, every
// intermediate initial value yields the same trace from there on.
struct WindowedDepartures {
    std::vector<std::int64_t> departures;
    std::vector<std::int64_t> dual_services;
    // departures[j], dual_services[j] are past-independent for j >= valid_from;
    // valid_from == size() means the window never stabilized.
    std::size_t valid_from = 0;
};

WindowedDepartures departures_with_coupling(const std::vector<std::int64_t>& arrivals,
                                            const std::vector<std::int64_t>& services);

// Both sides of the interchange identity
//   D(D(b,a), s) == D(D(b, R(a,s)), D(a,s))
// evaluated on the interior of the window where every intermediate queue has
// shed its boundary effects. `conclusive` is false when no such interior
// exists (the caller may retry with a longer window).
struct InterchangeResult {
    bool conclusive = false;
    bool equal = false;
    std::size_t compared = 0;   // number of indices compared
    std::size_t valid_from = 0;  // first compared index, relative to the window
    std::vector<std::int64_t> lhs;
    std::vector<std::int64_t> rhs;
};

InterchangeResult queue_identity_sides(const std::vector<std::int64_t>& b,
                                       const std::vector<std::int64_t>& a,
                                       const std::vector<std::int64_t>& s);

// One step of the local corner flip: I' = w + (I-J)^+, J' = w + (J-I)^+,
// w' = min(I,J). Preserves the product law Geom(q) x Geom(r/q) x Geom(r).
struct TripleMapResult {
    std::int64_t I_out = 0;
    std::int64_t J_out = 0;
    std::int64_t omega_out = 0;
};

TripleMapResult geometric_triple_map(std::int64_t I, std::int64_t J, std::int64_t omega);

// Coupled pair of stationary J-columns for parameters r < q1 <= q2 < 1.
// The q2 column (smaller mean) is the base/service sequence of a stable
// queue with Geom(r/q1) arrivals; its departures form the q1 column, so the
// q2 column is pointwise <= the q1 column while the marginals stay
// Geom(r/q1) and Geom(r/q2).
struct CoupledBoundary {
    std::vector<std::int64_t> J_q1;
    std::vector<std::int64_t> J_q2;
    double r = 0.0, q1 = 0.0, q2 = 0.0;
};

CoupledBoundary sample_coupled_J_pair(RngStream& stream, double r, double q1, double q2,
                                      int length);

// Next column of vertical increments of the boundary model: departures of the
// queue with the current column as arrivals and the bulk weights as services.
// t_init is the horizontal increment at the column base.
std::vector<std::int64_t> propagate_boundary(const std::vector<std::int64_t>& J_col,
                                             const std::vector<std::int64_t>& bulk_col,
                                             std::int64_t t_init);

// Two-sided partial sums S_n, n in [-K, K], of the steps
// step(j) = J_col[j] - Jhat_col[j], j in [-K+1, K] (inputs aligned so entry i
// holds index j = i - K + 1). S_0 = 0, S_n - S_{n-1} = step(n).
struct BoundaryWalk {
    int K = 0;
    std::vector<std::int64_t> steps;     // length 2K, step(j) at j + K - 1
    std::vector<std::int64_t> partial;   // length 2K+1, S(n) at n + K

    std::int64_t step(int j) const { return steps[static_cast<std::size_t>(j + K - 1)]; }
    std::int64_t S(int n) const { return partial[static_cast<std::size_t>(n + K)]; }
};

BoundaryWalk build_boundary_walk(const std::vector<std::int64_t>& J_col,
                                 const std::vector<std::int64_t>& Jhat_col, int K);

}  // namespace lpp
