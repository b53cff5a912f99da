#pragma once

#include <array>
#include <cstdint>

#include "edgetrace/binary_image.hpp"
#include "edgetrace/point.hpp"

namespace edgetrace {

// 8-neighbor layout around a center pixel, clockwise from top-left:
//
//   p0 p1 p2
//   p7  .  p3
//   p6 p5 p4
//
// Odd indices are orthogonal neighbors, even indices diagonal. The four
// groups (p7,p0,p1), (p1,p2,p3), (p3,p4,p5), (p5,p6,p7) each form a 2x2
// block with the center.
inline constexpr std::array<Point, 8> kNeighborOffset = {{
    {-1, -1}, {0, -1}, {1, -1}, {1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0},
}};

inline constexpr bool isOrthogonalIndex(int i) { return (i & 1) != 0; }

inline Point neighborAt(const Point& p, int index) {
    return {p.x + kNeighborOffset[index].x, p.y + kNeighborOffset[index].y};
}

/// Occupancy of the 8 neighbors as a bit mask, bit i set iff neighbor p_i is
/// in bounds and set. p itself must be in bounds.
std::uint8_t neighborOccupancy(const BinaryImage& image, const Point& p);

/// Fixed-capacity neighbor list; at most 8 entries, no heap.
struct NeighborList {
    std::array<Point, 8> points{};
    int count = 0;

    void push(const Point& p) { points[count++] = p; }
    int size() const { return count; }
    bool empty() const { return count == 0; }
    const Point& operator[](int i) const { return points[i]; }
    const Point* begin() const { return points.data(); }
    const Point* end() const { return points.data() + count; }
};

/// Direct neighbors of p, in ascending neighbor-index order: every set
/// orthogonal neighbor, plus every set diagonal neighbor whose two adjacent
/// orthogonal neighbors (of the same center) are both clear. Direct neighbors
/// are the nearest representatives of each local connection, which is what
/// makes the tracing follow the shortest path.
NeighborList getDirectNeighbors(const BinaryImage& image, const Point& p);

/// True iff p lies within a 2x2 block of set pixels, i.e. all members of at
/// least one of the groups (p7,p0,p1), (p1,p2,p3), (p3,p4,p5), (p5,p6,p7)
/// are set. p must be set.
bool containsFourCluster(const BinaryImage& image, const Point& p);
bool containsFourCluster(std::uint8_t occupancy);

/// Ambiguity criterion: more than two direct neighbors, or inside a
/// four-cluster. p must be set.
bool isAmbiguityPoint(const BinaryImage& image, const Point& p);

} // namespace edgetrace
