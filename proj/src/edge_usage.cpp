#include "lpp/edge_usage.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpp {

std::vector<std::int64_t> forward_column_values(FieldView field, Point from, int col_x, int y_hi) {
    if (col_x < from.x || y_hi < from.y)
        throw std::invalid_argument("forward_column_values: empty geometry");
    const Rect box = Rect::spanning(from, {col_x, y_hi});
    if (!field.domain().contains(box.lo) || !field.domain().contains(box.hi()))
        throw std::invalid_argument("forward_column_values: box not covered by the field");

    const int width = box.width;
    std::vector<std::int64_t> row(static_cast<std::size_t>(width));
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(box.height));

    std::int64_t acc = 0;
    for (int i = 0; i < width; ++i) row[i] = (acc += field.at(from.x + i, from.y));
    out.push_back(row[width - 1]);
    for (int y = from.y + 1; y <= y_hi; ++y) {
        row[0] += field.at(from.x, y);
        for (int i = 1; i < width; ++i)
            row[i] = std::max(row[i - 1], row[i]) + field.at(from.x + i, y);
        out.push_back(row[width - 1]);
    }
    return out;
}

std::vector<std::int64_t> reverse_column_values(FieldView field, Point to, int col_x, int y_lo) {
    if (col_x > to.x || y_lo > to.y)
        throw std::invalid_argument("reverse_column_values: empty geometry");
    const Rect box = Rect::spanning({col_x, y_lo}, to);
    if (!field.domain().contains(box.lo) || !field.domain().contains(box.hi()))
        throw std::invalid_argument("reverse_column_values: box not covered by the field");

    const int width = box.width;
    std::vector<std::int64_t> row(static_cast<std::size_t>(width));
    std::vector<std::int64_t> out(static_cast<std::size_t>(box.height));

    std::int64_t acc = 0;
    for (int i = width - 1; i >= 0; --i) row[i] = (acc += field.at(col_x + i, to.y));
    out[static_cast<std::size_t>(to.y - y_lo)] = row[0];
    for (int y = to.y - 1; y >= y_lo; --y) {
        row[width - 1] += field.at(to.x, y);
        for (int i = width - 2; i >= 0; --i)
            row[i] = std::max(row[i + 1], row[i]) + field.at(col_x + i, y);
        out[static_cast<std::size_t>(y - y_lo)] = row[0];
    }
    return out;
}

bool edge_usage_event(FieldView field, Point u, Point v) {
    if (!(u.x <= 0 && u.y <= 0 && v.x >= 1 && v.y >= 0))
        throw std::invalid_argument("edge_usage_event: need u <= 0 and v >= e1");
    const std::vector<std::int64_t> a = forward_column_values(field, u, 0, v.y);
    const std::vector<std::int64_t> b = reverse_column_values(field, v, 1, u.y);
    std::int64_t best = INT64_MIN;
    for (std::size_t n = 0; n < a.size(); ++n) best = std::max(best, a[n] + b[n]);
    const std::size_t at_zero = static_cast<std::size_t>(-u.y);
    return a[at_zero] + b[at_zero] == best;
}

}  // namespace lpp
