#include "lpp/geodesic.hpp"

#include <stdexcept>

namespace lpp {

Geodesic trace_geodesic(const PassageGrid& reverse_grid, Point from, Point to, TieRule rule) {
    if (!leq(from, to)) throw std::invalid_argument("trace_geodesic: from must be <= to");
    if (reverse_grid.direction != GridDirection::kReverse || reverse_grid.anchor != to)
        throw std::invalid_argument("trace_geodesic: grid must be reverse-anchored at `to`");
    if (!reverse_grid.values.contains(from))
        throw std::invalid_argument("trace_geodesic: `from` outside the grid");

    Geodesic g;
    g.tie_rule = rule;
    g.vertices.reserve(static_cast<std::size_t>(to.x - from.x + to.y - from.y + 1));
    Point z = from;
    g.vertices.push_back(z);
    while (z != to) {
        bool step_right;
        if (z.y == to.y) {
            step_right = true;
        } else if (z.x == to.x) {
            step_right = false;
        } else {
            const std::int64_t via_e1 = reverse_grid.at(z + kE1);
            const std::int64_t via_e2 = reverse_grid.at(z + kE2);
            if (rule == TieRule::kRightmost)
                step_right = via_e1 >= via_e2;
            else
                step_right = via_e1 > via_e2;
        }
        z = z + (step_right ? kE1 : kE2);
        g.vertices.push_back(z);
    }
    return g;
}

bool crosses_segment(const Geodesic& g, Point center, double half_length) {
    for (const Point& v : g.vertices)
        if (v.x == center.x && std::abs(static_cast<double>(v.y) - center.y) <= half_length)
            return true;
    return false;
}

std::int64_t path_weight(const Geodesic& g, FieldView field) {
    std::int64_t sum = 0;
    for (const Point& v : g.vertices) sum += field.at(v);
    return sum;
}

}  // namespace lpp
