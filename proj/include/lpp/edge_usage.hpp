#pragma once

#include <cstdint>
#include <vector>

#include "lpp/weight_field.hpp"

namespace lpp {

// Passage values from `from` to every site of one column, computed with a
// rolling row buffer (O(width) memory). Returns G(from -> (col_x, y)) for
// y in [from.y, y_hi].
std::vector<std::int64_t> forward_column_values(FieldView field, Point from, int col_x, int y_hi);

// Reverse counterpart: G((col_x, y) -> to) for y in [y_lo, to.y].
std::vector<std::int64_t> reverse_column_values(FieldView field, Point to, int col_x, int y_lo);

// The event that some geodesic from u to v passes through both the origin and
// e1, i.e. uses the edge (0, e1). An up-right path from u (u <= 0) to v
// (v >= e1) crosses from column 0 to column 1 at exactly one row n, so
//   G(u -> v) = max_n { G(u -> (0,n)) + G((1,n) -> v) },
// and the event holds iff the max is attained at n = 0.
bool edge_usage_event(FieldView field, Point u, Point v);

}  // namespace lpp
