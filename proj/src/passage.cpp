#include "lpp/passage.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace lpp {

namespace {

std::atomic<bool> g_dp_parallel{true};

// Grids below this cell count are not worth the wavefront setup.
constexpr std::int64_t kParallelThreshold = 1 << 16;
constexpr int kBlock = 64;

bool want_parallel(const Rect& box) {
#if defined(_OPENMP)
    return g_dp_parallel.load(std::memory_order_relaxed) && box.cells() >= kParallelThreshold &&
           omp_get_max_threads() > 1;
#else
    (void)box;
    return false;
#endif
}

// Interior sweep: v(x,y) = max(v(x-1,y), v(x,y-1)) + w(x,y) over
// [lo + (1,1), hi], assuming the seed row y = lo.y and column x = lo.x are
// already in place.
void interior_forward_serial(Grid<std::int64_t>& v, FieldView field, Rect box) {
    const Point lo = box.lo, hi = box.hi();
    for (int y = lo.y + 1; y <= hi.y; ++y) {
        const std::int64_t* below = v.row(y - 1);
        std::int64_t* cur = v.row(y);
        std::int64_t left = cur[0];
        for (int x = lo.x + 1; x <= hi.x; ++x) {
            const int i = x - lo.x;
            left = std::max(left, below[i]) + field.at(x, y);
            cur[i] = left;
        }
    }
}

void interior_reverse_serial(Grid<std::int64_t>& v, FieldView field, Rect box) {
    const Point lo = box.lo, hi = box.hi();
    for (int y = hi.y - 1; y >= lo.y; --y) {
        const std::int64_t* above = v.row(y + 1);
        std::int64_t* cur = v.row(y);
        std::int64_t right = cur[hi.x - lo.x];
        for (int x = hi.x - 1; x >= lo.x; --x) {
            const int i = x - lo.x;
            right = std::max(right, above[i]) + field.at(x, y);
            cur[i] = right;
        }
    }
}

#if defined(_OPENMP)
// Blocked wavefront over the interior: blocks on one block-antidiagonal only
// depend on earlier antidiagonals, so they run in parallel. Integer max-plus,
// so the result is identical to the serial sweep for any thread count.
void interior_forward_wavefront(Grid<std::int64_t>& v, FieldView field, Rect box) {
    const Point lo = box.lo, hi = box.hi();
    const int iw = hi.x - lo.x;  // interior width (columns lo.x+1 .. hi.x)
    const int ih = hi.y - lo.y;
    if (iw <= 0 || ih <= 0) return;
    const int bx = (iw + kBlock - 1) / kBlock;
    const int by = (ih + kBlock - 1) / kBlock;
    for (int d = 0; d < bx + by - 1; ++d) {
        const int jb_lo = std::max(0, d - bx + 1);
        const int jb_hi = std::min(d, by - 1);
#pragma omp parallel for schedule(static)
        for (int jb = jb_lo; jb <= jb_hi; ++jb) {
            const int ib = d - jb;
            const int x0 = lo.x + 1 + ib * kBlock;
            const int y0 = lo.y + 1 + jb * kBlock;
            const int x1 = std::min(hi.x, x0 + kBlock - 1);
            const int y1 = std::min(hi.y, y0 + kBlock - 1);
            for (int y = y0; y <= y1; ++y) {
                const std::int64_t* below = v.row(y - 1);
                std::int64_t* cur = v.row(y);
                std::int64_t left = cur[x0 - 1 - lo.x];
                for (int x = x0; x <= x1; ++x) {
                    const int i = x - lo.x;
                    left = std::max(left, below[i]) + field.at(x, y);
                    cur[i] = left;
                }
            }
        }
    }
}

void interior_reverse_wavefront(Grid<std::int64_t>& v, FieldView field, Rect box) {
    const Point lo = box.lo, hi = box.hi();
    const int iw = hi.x - lo.x;
    const int ih = hi.y - lo.y;
    if (iw <= 0 || ih <= 0) return;
    const int bx = (iw + kBlock - 1) / kBlock;
    const int by = (ih + kBlock - 1) / kBlock;
    for (int d = 0; d < bx + by - 1; ++d) {
        const int jb_lo = std::max(0, d - bx + 1);
        const int jb_hi = std::min(d, by - 1);
#pragma omp parallel for schedule(static)
        for (int jb = jb_lo; jb <= jb_hi; ++jb) {
            const int ib = d - jb;
            const int x1 = hi.x - 1 - ib * kBlock;
            const int y1 = hi.y - 1 - jb * kBlock;
            const int x0 = std::max(lo.x, x1 - kBlock + 1);
            const int y0 = std::max(lo.y, y1 - kBlock + 1);
            for (int y = y1; y >= y0; --y) {
                const std::int64_t* above = v.row(y + 1);
                std::int64_t* cur = v.row(y);
                std::int64_t right = cur[x1 + 1 - lo.x];
                for (int x = x1; x >= x0; --x) {
                    const int i = x - lo.x;
                    right = std::max(right, above[i]) + field.at(x, y);
                    cur[i] = right;
                }
            }
        }
    }
}
#endif  // _OPENMP

void check_box_in_field(FieldView field, Rect box, const char* who) {
    if (!field.domain().contains(box.lo) || !field.domain().contains(box.hi()))
        throw std::invalid_argument(std::string(who) + ": box not covered by the field");
}

}  // namespace

void set_dp_parallel(bool enabled) { g_dp_parallel.store(enabled, std::memory_order_relaxed); }
bool dp_parallel_enabled() { return g_dp_parallel.load(std::memory_order_relaxed); }

PassageGrid bulk_passage_forward(FieldView field, Point anchor) {
    return bulk_passage_forward(field, anchor, Rect::spanning(anchor, field.domain().hi()));
}

PassageGrid bulk_passage_forward(FieldView field, Point anchor, Rect box) {
    if (box.lo != anchor) throw std::invalid_argument("bulk_passage_forward: anchor must be box.lo");
    check_box_in_field(field, box, "bulk_passage_forward");
    PassageGrid g{anchor, GridDirection::kForward, GridKind::kBulk, Grid<std::int64_t>(box)};
    auto& v = g.values;
    const Point lo = box.lo, hi = box.hi();
    std::int64_t acc = field.at(lo);
    v.at(lo) = acc;
    for (int x = lo.x + 1; x <= hi.x; ++x) v.at(x, lo.y) = (acc += field.at(x, lo.y));
    acc = v.at(lo);
    for (int y = lo.y + 1; y <= hi.y; ++y) v.at(lo.x, y) = (acc += field.at(lo.x, y));
#if defined(_OPENMP)
    if (want_parallel(box)) {
        interior_forward_wavefront(v, field, box);
        return g;
    }
#endif
    interior_forward_serial(v, field, box);
    return g;
}

PassageGrid bulk_passage_forward_serial(FieldView field, Point anchor, Rect box) {
    if (box.lo != anchor) throw std::invalid_argument("bulk_passage_forward: anchor must be box.lo");
    check_box_in_field(field, box, "bulk_passage_forward");
    PassageGrid g{anchor, GridDirection::kForward, GridKind::kBulk, Grid<std::int64_t>(box)};
    auto& v = g.values;
    const Point lo = box.lo, hi = box.hi();
    std::int64_t acc = field.at(lo);
    v.at(lo) = acc;
    for (int x = lo.x + 1; x <= hi.x; ++x) v.at(x, lo.y) = (acc += field.at(x, lo.y));
    acc = v.at(lo);
    for (int y = lo.y + 1; y <= hi.y; ++y) v.at(lo.x, y) = (acc += field.at(lo.x, y));
    interior_forward_serial(v, field, box);
    return g;
}

PassageGrid bulk_passage_reverse(FieldView field, Point anchor) {
    return bulk_passage_reverse(field, anchor, Rect::spanning(field.domain().lo, anchor));
}

PassageGrid bulk_passage_reverse(FieldView field, Point anchor, Rect box) {
    if (box.hi() != anchor)
        throw std::invalid_argument("bulk_passage_reverse: anchor must be box.hi");
    check_box_in_field(field, box, "bulk_passage_reverse");
    PassageGrid g{anchor, GridDirection::kReverse, GridKind::kBulk, Grid<std::int64_t>(box)};
    auto& v = g.values;
    const Point lo = box.lo, hi = box.hi();
    std::int64_t acc = field.at(hi);
    v.at(hi) = acc;
    for (int x = hi.x - 1; x >= lo.x; --x) v.at(x, hi.y) = (acc += field.at(x, hi.y));
    acc = v.at(hi);
    for (int y = hi.y - 1; y >= lo.y; --y) v.at(hi.x, y) = (acc += field.at(hi.x, y));
#if defined(_OPENMP)
    if (want_parallel(box)) {
        interior_reverse_wavefront(v, field, box);
        return g;
    }
#endif
    interior_reverse_serial(v, field, box);
    return g;
}

PassageGrid bulk_passage_reverse_serial(FieldView field, Point anchor, Rect box) {
    if (box.hi() != anchor)
        throw std::invalid_argument("bulk_passage_reverse: anchor must be box.hi");
    check_box_in_field(field, box, "bulk_passage_reverse");
    PassageGrid g{anchor, GridDirection::kReverse, GridKind::kBulk, Grid<std::int64_t>(box)};
    auto& v = g.values;
    const Point lo = box.lo, hi = box.hi();
    std::int64_t acc = field.at(hi);
    v.at(hi) = acc;
    for (int x = hi.x - 1; x >= lo.x; --x) v.at(x, hi.y) = (acc += field.at(x, hi.y));
    acc = v.at(hi);
    for (int y = hi.y - 1; y >= lo.y; --y) v.at(hi.x, y) = (acc += field.at(hi.x, y));
    interior_reverse_serial(v, field, box);
    return g;
}

StationaryBoundary sample_stationary_boundary(RngStream& stream, Point corner, int m, int n,
                                              double r, double p, double q) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("sample_stationary_boundary: extent must be positive");
    if (!(r > 0.0) || !(p > r) || p >= 1.0 || !(q > r) || q >= 1.0)
        throw std::invalid_argument("sample_stationary_boundary: need r < p,q < 1");
    StationaryBoundary b{corner, {}, {}, r, p, q};
    b.I.reserve(m);
    b.J.reserve(n);
    for (int k = 0; k < m; ++k) b.I.push_back(sample_geometric(stream, p));
    for (int k = 0; k < n; ++k) b.J.push_back(sample_geometric(stream, r / q));
    return b;
}

PassageGrid sw_boundary_passage(FieldView field, const StationaryBoundary& boundary) {
    const int m = static_cast<int>(boundary.I.size());
    const int n = static_cast<int>(boundary.J.size());
    if (m < 1 || n < 1) throw std::invalid_argument("sw_boundary_passage: empty boundary arrays");
    const Point corner = boundary.corner;
    const Rect box{corner, m + 1, n + 1};
    // Bulk weights are read only off the boundary axes.
    const Rect interior{corner + kE1 + kE2, m, n};
    if (!field.domain().contains(interior.lo) || !field.domain().contains(interior.hi()))
        throw std::invalid_argument("sw_boundary_passage: field does not cover the interior");

    PassageGrid g{corner, GridDirection::kForward, GridKind::kSwBoundary, Grid<std::int64_t>(box)};
    auto& v = g.values;
    v.at(corner) = 0;
    std::int64_t acc = 0;
    for (int k = 1; k <= m; ++k) v.at(corner.x + k, corner.y) = (acc += boundary.I[k - 1]);
    acc = 0;
    for (int k = 1; k <= n; ++k) v.at(corner.x, corner.y + k) = (acc += boundary.J[k - 1]);
#if defined(_OPENMP)
    if (want_parallel(box)) {
        interior_forward_wavefront(v, field, box);
        return g;
    }
#endif
    interior_forward_serial(v, field, box);
    return g;
}

PassageGrid ne_boundary_passage(FieldView field, const std::vector<std::uint32_t>& Ihat,
                                const std::vector<std::uint32_t>& Jhat, Point corner) {
    StationaryBoundary reflected{-corner, Ihat, Jhat, field.r(), 0.0, 0.0};
    PassageGrid sw = sw_boundary_passage(field.reflect(), reflected);
    const Rect d = sw.values.domain();
    PassageGrid g{corner, GridDirection::kReverse, GridKind::kNeBoundary,
                  Grid<std::int64_t>({-d.hi(), d.width, d.height})};
    for (int y = d.lo.y; y <= d.hi().y; ++y)
        for (int x = d.lo.x; x <= d.hi().x; ++x) g.values.at(-x, -y) = sw.values.at(x, y);
    return g;
}

Grid<std::int64_t> increment_fields(const PassageGrid& grid, Axis axis) {
    if (grid.direction != GridDirection::kForward)
        throw std::invalid_argument("increment_fields: grid must be forward");
    const Rect d = grid.values.domain();
    const Point step = axis == Axis::kE1 ? kE1 : kE2;
    const Rect out{d.lo + step, d.width - (step.x ? 1 : 0), d.height - (step.y ? 1 : 0)};
    if (out.width < 1 || out.height < 1)
        throw std::invalid_argument("increment_fields: grid too thin along the axis");
    Grid<std::int64_t> inc(out);
    for (int y = out.lo.y; y <= out.hi().y; ++y)
        for (int x = out.lo.x; x <= out.hi().x; ++x)
            inc.at(x, y) = grid.at(x, y) - grid.at(x - step.x, y - step.y);
    return inc;
}

ExitRecord exit_extremes(FieldView field, const StationaryBoundary& boundary, Point target) {
    const Point corner = boundary.corner;
    if (target.x <= corner.x || target.y <= corner.y)
        throw std::invalid_argument("exit_extremes: target must lie in the open quadrant");
    const Rect box = Rect::spanning(corner + kE1 + kE2, target);
    PassageGrid rev = bulk_passage_reverse(field, target, box);
    return exit_extremes(boundary, target, rev);
}

ExitRecord exit_extremes(const StationaryBoundary& boundary, Point target,
                         const PassageGrid& reverse_bulk) {
    const Point corner = boundary.corner;
    const int m = target.x - corner.x;
    const int n = target.y - corner.y;
    if (m < 1 || n < 1)
        throw std::invalid_argument("exit_extremes: target must lie in the open quadrant");
    if (static_cast<int>(boundary.I.size()) < m || static_cast<int>(boundary.J.size()) < n)
        throw std::invalid_argument("exit_extremes: boundary arrays do not reach the target");

    // Candidate k exits the horizontal boundary after k I-weights, then runs
    // through the bulk from corner + k*e1 + e2; -l likewise on the vertical.
    std::vector<std::int64_t> cand(static_cast<std::size_t>(m + n));
    std::int64_t best = INT64_MIN;
    std::int64_t acc = 0;
    for (int k = 1; k <= m; ++k) {
        acc += boundary.I[k - 1];
        const std::int64_t val = acc + reverse_bulk.at(corner.x + k, corner.y + 1);
        cand[static_cast<std::size_t>(k - 1)] = val;
        best = std::max(best, val);
    }
    acc = 0;
    for (int l = 1; l <= n; ++l) {
        acc += boundary.J[l - 1];
        const std::int64_t val = acc + reverse_bulk.at(corner.x + 1, corner.y + l);
        cand[static_cast<std::size_t>(m + l - 1)] = val;
        best = std::max(best, val);
    }

    ExitRecord rec;
    rec.value = best;
    for (int l = n; l >= 1; --l)
        if (cand[static_cast<std::size_t>(m + l - 1)] == best) rec.exit_set.push_back(-l);
    for (int k = 1; k <= m; ++k)
        if (cand[static_cast<std::size_t>(k - 1)] == best) rec.exit_set.push_back(k);
    rec.z_e1 = rec.exit_set.back();
    rec.z_e2 = rec.exit_set.front();
    return rec;
}

}  // namespace lpp
