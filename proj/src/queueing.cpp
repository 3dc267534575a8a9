#include "lpp/queueing.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpp {

namespace {

// Upper twin initial sojourn. Any genuine pre-window state below this couples
// identically; a stationary geometric sojourn exceeding it has probability
// far below 1e-300 for every parameter choice used here.
constexpr std::int64_t kHugeInit = std::int64_t{1} << 40;

void check_lengths(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& s,
                   const char* who) {
    if (a.size() != s.size()) throw std::invalid_argument(std::string(who) + ": length mismatch");
    for (std::int64_t v : a)
        if (v < 0) throw std::invalid_argument(std::string(who) + ": negative arrival");
    for (std::int64_t v : s)
        if (v < 0) throw std::invalid_argument(std::string(who) + ": negative service");
}

}  // namespace

QueueTrace lindley(const std::vector<std::int64_t>& arrivals,
                   const std::vector<std::int64_t>& services, std::int64_t t_init) {
    check_lengths(arrivals, services, "lindley");
    if (t_init < 0) throw std::invalid_argument("lindley: t_init must be nonnegative");
    const std::size_t n = arrivals.size();
    QueueTrace q;
    q.arrivals = arrivals;
    q.services = services;
    q.t_init = t_init;
    q.sojourns.resize(n);
    q.departures.resize(n);
    q.dual_services.resize(n);
    std::int64_t prev = t_init;
    for (std::size_t j = 0; j < n; ++j) {
        const std::int64_t t = std::max<std::int64_t>(prev - arrivals[j], 0) + services[j];
        q.sojourns[j] = t;
        q.departures[j] = t + arrivals[j] - prev;
        q.dual_services[j] = std::min(arrivals[j], prev);
        prev = t;
    }
    return q;
}

std::uint32_t stationary_sojourn_init(RngStream& stream, double sigma, double alpha) {
    if (!(sigma >= 0.0) || !(alpha > 0.0) || alpha >= 1.0 || sigma >= alpha)
        throw std::invalid_argument("stationary_sojourn_init: need 0 <= sigma < alpha < 1");
    return sample_geometric(stream, sigma / alpha);
}

WindowedDepartures departures_with_coupling(const std::vector<std::int64_t>& arrivals,
                                            const std::vector<std::int64_t>& services) {
    check_lengths(arrivals, services, "departures_with_coupling");
    const std::size_t n = arrivals.size();
    WindowedDepartures out;
    out.departures.resize(n);
    out.dual_services.resize(n);
    std::int64_t lo = 0, hi = kHugeInit;
    std::size_t coupled_at = n;  // first j with lo-sojourn == hi-sojourn
    for (std::size_t j = 0; j < n; ++j) {
        const std::int64_t t_lo = std::max<std::int64_t>(lo - arrivals[j], 0) + services[j];
        const std::int64_t t_hi = std::max<std::int64_t>(hi - arrivals[j], 0) + services[j];
        out.departures[j] = t_lo + arrivals[j] - lo;
        out.dual_services[j] = std::min(arrivals[j], lo);
        if (coupled_at == n && t_lo == t_hi) coupled_at = j;
        lo = t_lo;
        hi = t_hi;
    }
    // d_j and dual_j read the sojourn at j-1, so they are exact from the
    // index after coupling.
    out.valid_from = coupled_at == n ? n : coupled_at + 1;
    return out;
}

namespace {

std::vector<std::int64_t> slice(const std::vector<std::int64_t>& v, std::size_t from) {
    return std::vector<std::int64_t>(v.begin() + static_cast<std::ptrdiff_t>(from), v.end());
}

}  // namespace

InterchangeResult queue_identity_sides(const std::vector<std::int64_t>& b,
                                       const std::vector<std::int64_t>& a,
                                       const std::vector<std::int64_t>& s) {
    if (b.size() != a.size() || a.size() != s.size())
        throw std::invalid_argument("queue_identity_sides: length mismatch");
    const std::size_t n = b.size();
    InterchangeResult res;
    if (n == 0) return res;

    // Left side: D(D(b,a), s).
    const WindowedDepartures d_ba = departures_with_coupling(b, a);
    if (d_ba.valid_from >= n) return res;
    const std::size_t l0 = d_ba.valid_from;
    const WindowedDepartures lhs_q =
        departures_with_coupling(slice(d_ba.departures, l0), slice(s, l0));
    if (lhs_q.valid_from >= lhs_q.departures.size()) return res;
    const std::size_t lhs_from = l0 + lhs_q.valid_from;

    // Right side: D(D(b, R(a,s)), D(a,s)).
    const WindowedDepartures d_as = departures_with_coupling(a, s);
    if (d_as.valid_from >= n) return res;
    const std::size_t r0 = d_as.valid_from;
    const WindowedDepartures d_b_dual =
        departures_with_coupling(slice(b, r0), slice(d_as.dual_services, r0));
    if (d_b_dual.valid_from >= d_b_dual.departures.size()) return res;
    const std::size_t r1 = d_b_dual.valid_from;
    const WindowedDepartures rhs_q = departures_with_coupling(
        slice(d_b_dual.departures, r1), slice(d_as.departures, r0 + r1));
    if (rhs_q.valid_from >= rhs_q.departures.size()) return res;
    const std::size_t rhs_from = r0 + r1 + rhs_q.valid_from;

    const std::size_t from = std::max(lhs_from, rhs_from);
    if (from >= n) return res;
    res.conclusive = true;
    res.valid_from = from;
    res.compared = n - from;
    res.lhs.assign(lhs_q.departures.begin() + static_cast<std::ptrdiff_t>(from - l0),
                   lhs_q.departures.end());
    res.rhs.assign(rhs_q.departures.begin() + static_cast<std::ptrdiff_t>(from - r0 - r1),
                   rhs_q.departures.end());
    res.equal = res.lhs == res.rhs;
    return res;
}

TripleMapResult geometric_triple_map(std::int64_t I, std::int64_t J, std::int64_t omega) {
    TripleMapResult t;
    t.I_out = omega + std::max<std::int64_t>(I - J, 0);
    t.J_out = omega + std::max<std::int64_t>(J - I, 0);
    t.omega_out = std::min(I, J);
    return t;
}

CoupledBoundary sample_coupled_J_pair(RngStream& stream, double r, double q1, double q2,
                                      int length) {
    if (!(r > 0.0) || !(q1 > r) || !(q2 >= q1) || q2 >= 1.0)
        throw std::invalid_argument("sample_coupled_J_pair: need r < q1 <= q2 < 1");
    if (length < 1) throw std::invalid_argument("sample_coupled_J_pair: empty column");
    CoupledBoundary out;
    out.r = r;
    out.q1 = q1;
    out.q2 = q2;
    if (q1 == q2) {
        // Degenerate coupling: one column serves as both entries.
        out.J_q2.reserve(length);
        for (int i = 0; i < length; ++i)
            out.J_q2.push_back(sample_geometric(stream, r / q2));
        out.J_q1 = out.J_q2;
        return out;
    }
    // Stable orientation: services ~ Geom(r/q2) (smaller mean), arrivals
    // ~ Geom(r/q1); the stationary sojourn is Geom(q1/q2).
    const std::int64_t t_init = stationary_sojourn_init(stream, r / q2, r / q1);
    std::vector<std::int64_t> arrivals(static_cast<std::size_t>(length));
    std::vector<std::int64_t> services(static_cast<std::size_t>(length));
    for (auto& v : arrivals) v = sample_geometric(stream, r / q1);
    for (auto& v : services) v = sample_geometric(stream, r / q2);
    QueueTrace q = lindley(arrivals, services, t_init);
    out.J_q1 = std::move(q.departures);
    out.J_q2 = std::move(services);
    return out;
}

std::vector<std::int64_t> propagate_boundary(const std::vector<std::int64_t>& J_col,
                                             const std::vector<std::int64_t>& bulk_col,
                                             std::int64_t t_init) {
    QueueTrace q = lindley(J_col, bulk_col, t_init);
    return std::move(q.departures);
}

BoundaryWalk build_boundary_walk(const std::vector<std::int64_t>& J_col,
                                 const std::vector<std::int64_t>& Jhat_col, int K) {
    if (K < 1) throw std::invalid_argument("build_boundary_walk: K must be positive");
    const std::size_t need = static_cast<std::size_t>(2 * K);
    if (J_col.size() != need || Jhat_col.size() != need)
        throw std::invalid_argument("build_boundary_walk: columns must cover 2K indices");
    BoundaryWalk w;
    w.K = K;
    w.steps.resize(need);
    for (std::size_t i = 0; i < need; ++i) w.steps[i] = J_col[i] - Jhat_col[i];
    w.partial.assign(static_cast<std::size_t>(2 * K + 1), 0);
    std::int64_t acc = 0;
    for (int n = 1; n <= K; ++n) {
        acc += w.step(n);
        w.partial[static_cast<std::size_t>(n + K)] = acc;
    }
    acc = 0;
    for (int n = -1; n >= -K; --n) {
        acc -= w.step(n + 1);
        w.partial[static_cast<std::size_t>(n + K)] = acc;
    }
    return w;
}

}  // namespace lpp
