#include <doctest.h>

#include "edgetrace/neighborhood.hpp"

using namespace edgetrace;

namespace {

const Point kCenter{1, 1};

/// 3x3 image with the center set and neighbors populated from an occupancy mask.
BinaryImage imageFromMask(unsigned mask) {
    BinaryImage image(3, 3);
    image.set(kCenter);
    for (int i = 0; i < 8; ++i)
        if (mask & (1u << i))
            image.set(neighborAt(kCenter, i));
    return image;
}

// Independent formulation of the ambiguity criterion, written directly from
// its definition: count set orthogonals plus set diagonals whose two
// orthogonal detour pixels are clear; four-clusters enumerated as the four
// 2x2 blocks containing the center.
int bruteDirectNeighborCount(const BinaryImage& image, const Point& p) {
    int count = 0;
    const int orth[4][2] = {{0, -1}, {1, 0}, {0, 1}, {-1, 0}};
    for (const auto& d : orth)
        if (image.at(p.x + d[0], p.y + d[1]))
            ++count;
    const int diag[4][2] = {{-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
    for (const auto& d : diag) {
        if (!image.at(p.x + d[0], p.y + d[1]))
            continue;
        if (!image.at(p.x + d[0], p.y) && !image.at(p.x, p.y + d[1]))
            ++count;
    }
    return count;
}

bool bruteFourCluster(const BinaryImage& image, const Point& p) {
    for (int ax = p.x - 1; ax <= p.x; ++ax) {
        for (int ay = p.y - 1; ay <= p.y; ++ay) {
            if (image.at(ax, ay) && image.at(ax + 1, ay) && image.at(ax, ay + 1) &&
                image.at(ax + 1, ay + 1))
                return true;
        }
    }
    return false;
}

bool bruteAmbiguity(const BinaryImage& image, const Point& p) {
    return bruteDirectNeighborCount(image, p) > 2 || bruteFourCluster(image, p);
}

} // namespace

TEST_CASE("neighborOccupancy encodes the 8 neighbors") {
    CHECK(neighborOccupancy(imageFromMask(0x00), kCenter) == 0x00);
    CHECK(neighborOccupancy(imageFromMask(0xFF), kCenter) == 0xFF);

    // center at a corner: out-of-bounds neighbors read as 0
    BinaryImage corner(3, 3);
    corner.set({0, 0});
    corner.set({1, 0});
    CHECK(neighborOccupancy(corner, {0, 0}) == (1u << 3)); // only p3

    CHECK_THROWS_AS(neighborOccupancy(corner, {5, 5}), std::out_of_range);
}

TEST_CASE("getDirectNeighbors keeps orthogonals and lone diagonals") {
    const auto points = [](const NeighborList& list) {
        return std::vector<Point>(list.begin(), list.end());
    };

    // orthogonal neighbors always returned, ascending index order
    CHECK(points(getDirectNeighbors(imageFromMask(0x88), kCenter)) ==
          std::vector<Point>{{2, 1}, {0, 1}}); // p3, p7

    // diagonal suppressed by its set adjacent orthogonal
    CHECK(points(getDirectNeighbors(imageFromMask(0x0C), kCenter)) ==
          std::vector<Point>{{2, 1}}); // p2 and p3 set -> only p3

    // diagonals with no set orthogonal neighbor
    CHECK(points(getDirectNeighbors(imageFromMask(0x11), kCenter)) ==
          std::vector<Point>{{0, 0}, {2, 2}}); // p0, p4

    // X-junction center: all four orthogonals
    CHECK(points(getDirectNeighbors(imageFromMask(0xAA), kCenter)) ==
          std::vector<Point>{{1, 0}, {2, 1}, {1, 2}, {0, 1}}); // p1, p3, p5, p7
}

TEST_CASE("getDirectNeighbors never returns a diagonal with a set flank") {
    for (unsigned mask = 0; mask < 256; ++mask) {
        const BinaryImage image = imageFromMask(mask);
        for (const Point& n : getDirectNeighbors(image, kCenter)) {
            if (n.x != kCenter.x && n.y != kCenter.y) {
                CHECK(!image.at(n.x, kCenter.y));
                CHECK(!image.at(kCenter.x, n.y));
            }
        }
    }
}

TEST_CASE("containsFourCluster checks the four 2x2 groups") {
    CHECK(containsFourCluster(imageFromMask(0x83), kCenter));  // p7,p0,p1
    CHECK(!containsFourCluster(imageFromMask(0xAA), kCenter)); // only orthogonals
    CHECK(containsFourCluster(imageFromMask(0xFF), kCenter));
}

TEST_CASE("isAmbiguityPoint spot checks") {
    CHECK(isAmbiguityPoint(imageFromMask(0xAA), kCenter)); // X junction

    // interior pixel of a straight line
    CHECK(!isAmbiguityPoint(imageFromMask((1u << 3) | (1u << 7)), kCenter));

    // top-left pixel of an isolated 2x2 block: p3,p4,p5
    CHECK(isAmbiguityPoint(imageFromMask((1u << 3) | (1u << 4) | (1u << 5)), kCenter));
}

TEST_CASE("ambiguity criterion matches the brute-force predicate on all 256 configurations") {
    int mismatches = 0;
    for (unsigned mask = 0; mask < 256; ++mask) {
        const BinaryImage image = imageFromMask(mask);
        if (isAmbiguityPoint(image, kCenter) != bruteAmbiguity(image, kCenter))
            ++mismatches;
        if (static_cast<int>(getDirectNeighbors(image, kCenter).size()) !=
            bruteDirectNeighborCount(image, kCenter))
            ++mismatches;
        if (containsFourCluster(image, kCenter) != bruteFourCluster(image, kCenter))
            ++mismatches;
    }
    CHECK(mismatches == 0);
}
