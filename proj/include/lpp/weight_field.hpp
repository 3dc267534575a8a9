#pragma once

#include <cstdint>
#include <stdexcept>

#include "lpp/lattice.hpp"
#include "lpp/rng.hpp"

namespace lpp {

// Immutable rectangle of nonnegative integer vertex weights. Weights are
// 32-bit; passage sums live in 64-bit. Immutable after construction and
// shareable read-only across threads.
class WeightField {
  public:
    WeightField(Rect domain, std::vector<std::uint32_t> weights, double r)
        : grid_(domain), r_(r) {
        if (weights.size() != static_cast<std::size_t>(domain.cells()))
            throw std::invalid_argument("WeightField: weight count does not match domain");
        grid_.raw() = std::move(weights);
    }

    const Rect& domain() const { return grid_.domain(); }
    double r() const { return r_; }

    std::uint32_t at(Point p) const { return grid_.at(p); }
    std::uint32_t at(int x, int y) const { return grid_.at(x, y); }

  private:
    Grid<std::uint32_t> grid_;
    double r_;
};

// Read-only view of a field, optionally reflected through the origin
// (site x of the view reads site -x of the base). Reflecting twice gives
// back the original view; no weights are copied.
class FieldView {
  public:
    FieldView(const WeightField& base)  // NOLINT: implicit by design
        : base_(&base), reflected_(false) {}

    FieldView reflect() const {
        FieldView v = *this;
        v.reflected_ = !v.reflected_;
        return v;
    }
    bool reflected() const { return reflected_; }

    Rect domain() const {
        const Rect& d = base_->domain();
        if (!reflected_) return d;
        return {-d.hi(), d.width, d.height};
    }
    double r() const { return base_->r(); }

    std::uint32_t at(Point p) const { return reflected_ ? base_->at(-p) : base_->at(p); }
    std::uint32_t at(int x, int y) const { return at(Point{x, y}); }

  private:
    const WeightField* base_;
    bool reflected_;
};

// Fills every site with an independent Geom(r) draw, row-major from the
// origin, so a fixed (seed, stream_id) yields a bit-identical field.
inline WeightField sample_weight_field(RngStream& stream, Point origin, int width, int height,
                                       double r) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("sample_weight_field: dimensions must be positive");
    if (!(r > 0.0) || r >= 1.0)
        throw std::invalid_argument("sample_weight_field: r must be in (0,1)");
    std::vector<std::uint32_t> w;
    w.reserve(static_cast<std::size_t>(width) * height);
    for (int j = 0; j < height; ++j)
        for (int i = 0; i < width; ++i) w.push_back(sample_geometric(stream, r));
    return WeightField({origin, width, height}, std::move(w), r);
}

}  // namespace lpp
