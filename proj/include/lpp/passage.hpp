#pragma once

#include <cstdint>
#include <vector>

#include "lpp/lattice.hpp"
#include "lpp/rng.hpp"
#include "lpp/weight_field.hpp"

namespace lpp {

enum class GridKind { kBulk, kSwBoundary, kNeBoundary };
enum class GridDirection { kForward, kReverse };
enum class Axis { kE1, kE2 };

// Table of last-passage values from (forward) or to (reverse) an anchor.
struct PassageGrid {
    Point anchor{};
    GridDirection direction = GridDirection::kForward;
    GridKind kind = GridKind::kBulk;
    Grid<std::int64_t> values;

    std::int64_t at(Point p) const { return values.at(p); }
    std::int64_t at(int x, int y) const { return values.at(x, y); }
};

// Row of I-weights (sites corner + k*e1, k >= 1) and column of J-weights
// (corner + k*e2, k >= 1) attached to a corner. p_row and q_col are the
// parameters the arrays were sampled with: I ~ Geom(p_row), J ~ Geom(r/q_col);
// the one-parameter stationary model has p_row == q_col.
struct StationaryBoundary {
    Point corner{};
    std::vector<std::uint32_t> I;
    std::vector<std::uint32_t> J;
    double r = 0.0;
    double p_row = 0.0;
    double q_col = 0.0;
};

StationaryBoundary sample_stationary_boundary(RngStream& stream, Point corner, int m, int n,
                                              double r, double p, double q);

struct ExitRecord {
    std::vector<int> exit_set;  // sorted; positive = horizontal index, negative = vertical
    int z_e1 = 0;               // max of exit_set
    int z_e2 = 0;               // min of exit_set
    std::int64_t value = 0;     // boundary passage value at the target
};

// When true (and the build has OpenMP), grids above a size threshold run the
// blocked wavefront kernel. Either way the values are bit-identical to the
// serial reference.
void set_dp_parallel(bool enabled);
bool dp_parallel_enabled();

// Max-plus passage values G(anchor -> y) for y in box; box defaults to
// [anchor, field NE corner]. Requires anchor == box.lo inside the field.
PassageGrid bulk_passage_forward(FieldView field, Point anchor);
PassageGrid bulk_passage_forward(FieldView field, Point anchor, Rect box);

// Passage values G(x -> anchor) for x in box; box defaults to
// [field SW corner, anchor]. Equals forward passage in the reflected field.
PassageGrid bulk_passage_reverse(FieldView field, Point anchor);
PassageGrid bulk_passage_reverse(FieldView field, Point anchor, Rect box);

// Serial reference kernels, kept for tests and the benchmark target.
PassageGrid bulk_passage_forward_serial(FieldView field, Point anchor, Rect box);
PassageGrid bulk_passage_reverse_serial(FieldView field, Point anchor, Rect box);

// Boundary model: value 0 at the corner, prefix sums of I / J along the two
// axes, and the bulk recursion off the boundary. The grid spans
// [corner, corner + (|I|, |J|)] and the field must cover its interior.
PassageGrid sw_boundary_passage(FieldView field, const StationaryBoundary& boundary);

// Northeast variant: weights Ihat (sites corner - k*e1) and Jhat
// (corner - k*e2) on the top-right axes, values to the corner over
// [corner - (|Ihat|, |Jhat|), corner]. Defined as the southwest model of the
// reflected field.
PassageGrid ne_boundary_passage(FieldView field, const std::vector<std::uint32_t>& Ihat,
                                const std::vector<std::uint32_t>& Jhat, Point corner);

// I-increments (axis e1): G(y) - G(y - e1); J-increments (axis e2) likewise.
// Defined on the part of the grid where the neighbor exists.
Grid<std::int64_t> increment_fields(const PassageGrid& grid, Axis axis);

// Exit points of the boundary-model geodesics from the corner to the target:
// index k (resp. -l) is in the set iff exiting the horizontal (vertical)
// boundary at step k (l) attains the boundary passage value. The target must
// lie in the open quadrant of the corner.
ExitRecord exit_extremes(FieldView field, const StationaryBoundary& boundary, Point target);

// Same scan against a precomputed reverse bulk grid anchored at the target
// (values over [corner + e1 + e2, target]); used by the replicate loops.
ExitRecord exit_extremes(const StationaryBoundary& boundary, Point target,
                         const PassageGrid& reverse_bulk);

}  // namespace lpp
