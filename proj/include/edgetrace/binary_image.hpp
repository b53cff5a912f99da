#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "edgetrace/grid.hpp"
#include "edgetrace/point.hpp"

namespace edgetrace {

/// Binary edge image: every pixel is 0 or 1. Out-of-bounds reads behave as 0,
/// so border pixels need no special casing anywhere downstream.
class BinaryImage {
public:
    BinaryImage() = default;
    BinaryImage(int width, int height) : grid_(width, height, 0) {}

    /// Builds an image from ASCII rows; '#' and '1' are set, everything else clear.
    /// Rows may have different lengths; the width is the longest row.
    static BinaryImage fromAscii(const std::vector<std::string>& rows);

    int width() const { return grid_.width(); }
    int height() const { return grid_.height(); }
    bool inBounds(int x, int y) const { return grid_.inBounds(x, y); }
    bool inBounds(const Point& p) const { return grid_.inBounds(p); }

    /// Pixel value with out-of-bounds treated as 0.
    std::uint8_t at(int x, int y) const { return grid_.inBounds(x, y) ? grid_(x, y) : 0; }
    std::uint8_t at(const Point& p) const { return at(p.x, p.y); }
    bool isSet(const Point& p) const { return at(p) != 0; }

    void set(const Point& p, bool value = true) { grid_(p) = value ? 1 : 0; }
    void clear(const Point& p) { grid_(p) = 0; }

    int countSetPixels() const;
    std::vector<Point> setPixels() const; // row-major order

    friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

private:
    Grid<std::uint8_t> grid_;
};

} // namespace edgetrace
