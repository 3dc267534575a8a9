#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace lpp {

// Lattice site. Coordinates follow the (x1, x2) = (column, row) convention.
struct Point {
    int x = 0;
    int y = 0;

    friend constexpr bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
    friend constexpr bool operator!=(Point a, Point b) { return !(a == b); }
    // Componentwise partial order.
    friend constexpr bool leq(Point a, Point b) { return a.x <= b.x && a.y <= b.y; }
    friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    constexpr Point operator-() const { return {-x, -y}; }
};

inline constexpr Point kE1{1, 0};
inline constexpr Point kE2{0, 1};

// Closed lattice rectangle [lo, lo + (width-1, height-1)].
struct Rect {
    Point lo;
    int width = 0;
    int height = 0;

    constexpr Point hi() const { return {lo.x + width - 1, lo.y + height - 1}; }
    constexpr bool contains(Point p) const {
        return p.x >= lo.x && p.y >= lo.y && p.x <= lo.x + width - 1 && p.y <= lo.y + height - 1;
    }
    constexpr std::int64_t cells() const {
        return static_cast<std::int64_t>(width) * height;
    }

    static Rect spanning(Point a, Point b) {
        if (!leq(a, b)) throw std::invalid_argument("Rect::spanning: corners not ordered");
        return {a, b.x - a.x + 1, b.y - a.y + 1};
    }
};

// Dense row-major table addressed by absolute lattice coordinates.
template <typename T>
class Grid {
  public:
    Grid() = default;
    Grid(Rect domain, T fill = T{})
        : domain_(domain), data_(static_cast<std::size_t>(domain.cells()), fill) {
        if (domain.width <= 0 || domain.height <= 0)
            throw std::invalid_argument("Grid: empty domain");
    }

    const Rect& domain() const { return domain_; }
    bool contains(Point p) const { return domain_.contains(p); }

    T& at(Point p) {
        assert(contains(p));
        return data_[index(p)];
    }
    const T& at(Point p) const {
        assert(contains(p));
        return data_[index(p)];
    }
    T& at(int x, int y) { return at(Point{x, y}); }
    const T& at(int x, int y) const { return at(Point{x, y}); }

    // Row pointer for inner loops; row y, starting at domain().lo.x.
    T* row(int y) { return data_.data() + static_cast<std::size_t>(y - domain_.lo.y) * domain_.width; }
    const T* row(int y) const {
        return data_.data() + static_cast<std::size_t>(y - domain_.lo.y) * domain_.width;
    }

    std::vector<T>& raw() { return data_; }
    const std::vector<T>& raw() const { return data_; }

    friend bool operator==(const Grid& a, const Grid& b) {
        return a.domain_.lo == b.domain_.lo && a.domain_.width == b.domain_.width &&
               a.domain_.height == b.domain_.height && a.data_ == b.data_;
    }

  private:
    std::size_t index(Point p) const {
        return static_cast<std::size_t>(p.y - domain_.lo.y) * domain_.width +
               static_cast<std::size_t>(p.x - domain_.lo.x);
    }

    Rect domain_{};
    std::vector<T> data_;
};

}  // namespace lpp
