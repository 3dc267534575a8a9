#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "lpp/passage.hpp"

namespace lpp {

// Rightmost prefers e1 on ties, upmost prefers e2; these are the two extremal
// maximizers among geodesics between the same endpoints.
enum class TieRule { kRightmost, kUpmost };

struct Geodesic {
    std::vector<Point> vertices;
    TieRule tie_rule = TieRule::kRightmost;
};

// Walks forward from `from`, choosing at each site the step whose remaining
// passage value (read from a reverse grid anchored at `to`) is maximal; the
// tie rule breaks equal branches. The traced path attains G(from -> to).
Geodesic trace_geodesic(const PassageGrid& reverse_grid, Point from, Point to, TieRule rule);

// True iff some vertex of g lies on the closed vertical segment of
// half-length `half_length` centered at `center`.
bool crosses_segment(const Geodesic& g, Point center, double half_length);

// Sum of vertex weights along the path.
std::int64_t path_weight(const Geodesic& g, FieldView field);

}  // namespace lpp
