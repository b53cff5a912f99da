#include "edgetrace/neighborhood.hpp"

#include <stdexcept>

namespace edgetrace {

namespace {

// Bit masks for the four 2x2 groups (p7,p0,p1), (p1,p2,p3), (p3,p4,p5), (p5,p6,p7).
constexpr std::uint8_t kFourClusterMask[4] = {0x83, 0x0E, 0x38, 0xE0};

// For diagonal index d, the two orthogonal indices adjacent to it.
constexpr int kDiagonalFlank[8][2] = {
    {7, 1}, {0, 0}, {1, 3}, {0, 0}, {3, 5}, {0, 0}, {5, 7}, {0, 0},
};

} // namespace

std::uint8_t neighborOccupancy(const BinaryImage& image, const Point& p) {
    if (!image.inBounds(p))
        throw std::out_of_range("neighborOccupancy: point out of image bounds");
    std::uint8_t mask = 0;
    for (int i = 0; i < 8; ++i)
        if (image.at(neighborAt(p, i)))
            mask |= static_cast<std::uint8_t>(1u << i);
    return mask;
}

NeighborList getDirectNeighbors(const BinaryImage& image, const Point& p) {
    const std::uint8_t occ = neighborOccupancy(image, p);
    NeighborList out;
    for (int i = 0; i < 8; ++i) {
        if (!(occ & (1u << i)))
            continue;
        if (!isOrthogonalIndex(i)) {
            // Diagonal neighbors count only when both flanking orthogonals are clear.
            const int a = kDiagonalFlank[i][0];
            const int b = kDiagonalFlank[i][1];
            if ((occ & (1u << a)) || (occ & (1u << b)))
                continue;
        }
        out.push(neighborAt(p, i));
    }
    return out;
}

bool containsFourCluster(std::uint8_t occupancy) {
    for (std::uint8_t mask : kFourClusterMask)
        if ((occupancy & mask) == mask)
            return true;
    return false;
}

bool containsFourCluster(const BinaryImage& image, const Point& p) {
    return containsFourCluster(neighborOccupancy(image, p));
}

bool isAmbiguityPoint(const BinaryImage& image, const Point& p) {
    const std::uint8_t occ = neighborOccupancy(image, p);
    if (containsFourCluster(occ))
        return true;
    int direct = 0;
    for (int i = 0; i < 8; ++i) {
        if (!(occ & (1u << i)))
            continue;
        if (!isOrthogonalIndex(i)) {
            const int a = kDiagonalFlank[i][0];
            const int b = kDiagonalFlank[i][1];
            if ((occ & (1u << a)) || (occ & (1u << b)))
                continue;
        }
        ++direct;
    }
    return direct > 2;
}

} // namespace edgetrace
