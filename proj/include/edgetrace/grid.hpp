#pragma once

#include <cassert>
#include <stdexcept>
#include <vector>

#include "edgetrace/point.hpp"

namespace edgetrace {

/// Dense row-major grid of T with (x,y) indexing.
template <typename T>
class Grid {
public:
    Grid() = default;
    Grid(int width, int height, const T& fill = T{})
        : width_(width), height_(height),
          cells_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill) {
        if (width < 0 || height < 0)
            throw std::invalid_argument("Grid: negative dimensions");
    }

    int width() const { return width_; }
    int height() const { return height_; }

    bool inBounds(int x, int y) const { return x >= 0 && x < width_ && y >= 0 && y < height_; }
    bool inBounds(const Point& p) const { return inBounds(p.x, p.y); }

    T& operator()(int x, int y) {
        assert(inBounds(x, y));
        return cells_[static_cast<std::size_t>(y) * width_ + x];
    }
    const T& operator()(int x, int y) const {
        assert(inBounds(x, y));
        return cells_[static_cast<std::size_t>(y) * width_ + x];
    }
    T& operator()(const Point& p) { return (*this)(p.x, p.y); }
    const T& operator()(const Point& p) const { return (*this)(p.x, p.y); }

    const std::vector<T>& cells() const { return cells_; }

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<T> cells_;
};

} // namespace edgetrace
