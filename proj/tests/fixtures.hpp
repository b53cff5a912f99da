#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "edgetrace/binary_image.hpp"
#include "edgetrace/trace.hpp"

namespace edgetrace::fixtures {

// --- Fundamental test figures -----------------------------------------------

/// Three open edges and one closed ring, no ambiguities.
inline BinaryImage openAndClosed() {
    return BinaryImage::fromAscii({
        "..............",
        ".####....#....",
        "........#.#...",
        ".#......#.#...",
        ".#.......#....",
        ".#............",
        "......###.....",
        "..............",
    });
}

/// Horizontal bar with a stem: one single-pixel ambiguity at (2,2).
inline BinaryImage tJunction() {
    return BinaryImage::fromAscii({
        ".....",
        ".....",
        "#####",
        "..#..",
        "..#..",
    });
}

/// Plus sign with 1-px arms around center (2,2).
inline BinaryImage plusSign() {
    return BinaryImage::fromAscii({
        "..#..",
        "..#..",
        "#####",
        "..#..",
        "..#..",
    });
}

/// Diagonal X crossing at (2,2).
inline BinaryImage xJunctionDiagonal() {
    return BinaryImage::fromAscii({
        "#...#",
        ".#.#.",
        "..#..",
        ".#.#.",
        "#...#",
    });
}

/// Y junction: vertical arm + two diagonal arms meeting at (3,3).
inline BinaryImage yJunction() {
    return BinaryImage::fromAscii({
        ".......",
        "...#...",
        "...#...",
        "...#...",
        "..#.#..",
        ".#...#.",
    });
}

/// Isolated 2x2 block: one ambiguity of four points, zero edges.
inline BinaryImage block2x2() {
    return BinaryImage::fromAscii({
        "....",
        ".##.",
        ".##.",
        "....",
    });
}

/// 3x3 solid cluster with two attached arms.
inline BinaryImage blobWithArms() {
    return BinaryImage::fromAscii({
        ".......",
        "..###..",
        ".####..",
        "..###..",
        "...#...",
        "...#...",
    });
}

/// Junction-free 14-pixel rectangular ring.
inline BinaryImage rectangleRing() {
    return BinaryImage::fromAscii({
        ".......",
        ".#####.",
        ".#...#.",
        ".#...#.",
        ".#####.",
        ".......",
    });
}

/// Outer ring, inner ring, and a 2-px spoke joining them (two junctions).
inline BinaryImage nestedRings() {
    return BinaryImage::fromAscii({
        "...........",
        ".#########.",
        ".#.......#.",
        ".#..###..#.",
        ".#..#.####.",
        ".#..###..#.",
        ".#.......#.",
        ".#########.",
        "...........",
    });
}

/// Octagonal ring crossed by a horizontal chord: two T-style junctions at
/// (2,5) and (8,5); our trace yields 3 edges (11+7+11 points) and 2 SPAs.
inline BinaryImage circleChord() {
    return BinaryImage::fromAscii({
        "...........",
        "....###....",
        "...#...#...",
        "..#.....#..",
        "..#.....#..",
        "..#######..",
        "..#.....#..",
        "..#.....#..",
        "...#...#...",
        "....###....",
        "...........",
    });
}

/// circleChord ring with three 1-px arms sticking out; removing all dangling
/// edges and re-tracing leaves one closed ring.
inline BinaryImage threeArmRing() {
    return BinaryImage::fromAscii({
        ".....#.....",
        "....###....",
        "...#...#...",
        "..#.....#..",
        "..#.....#..",
        "..#.....##.",
        "..#.....#..",
        "..#.....#..",
        "...#...#...",
        "....###....",
        "....#......",
    });
}

/// Trunk, vertical branch, two sub-branches, four leaf twigs: dangling
/// removal with maxLen 5 fully prunes it only after 3 rounds.
inline BinaryImage cascadeTree() {
    return BinaryImage::fromAscii({
        ".....................",
        ".....................",
        ".....................",
        ".....................",
        ".....................",
        ".......#.....#.......",
        "........#####........",
        ".......#..#..#.......",
        "..........#..........",
        "#####################",
        ".....................",
    });
}

/// Three plus-junctions chained by two 3-px interior bridges.
inline BinaryImage ambiguityChain() {
    return BinaryImage::fromAscii({
        "............",
        "..#...#...#.",
        ".###########",
        "..#...#...#.",
        "............",
    });
}

/// A 2x2 cluster at (5,3)..(6,4) with collinear 2-px arms attached at the
/// (5,3) and (6,3) connection pixels.
inline BinaryImage clusterWithCollinearArms() {
    return BinaryImage::fromAscii({
        "............",
        "............",
        "............",
        "...######...",
        ".....##.....",
        "............",
    });
}

/// The full corpus used by coverage/ordering checks.
inline std::vector<BinaryImage> corpus() {
    return {openAndClosed(), tJunction(),  plusSign(),     xJunctionDiagonal(),
            yJunction(),     block2x2(),   blobWithArms(), rectangleRing(),
            nestedRings(),   circleChord(), threeArmRing(), cascadeTree(),
            ambiguityChain()};
}

inline BinaryImage randomImage(int width, int height, double density, std::mt19937& rng) {
    BinaryImage image(width, height);
    std::bernoulli_distribution bit(density);
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x)
            if (bit(rng))
                image.set({x, y});
    return image;
}

// --- Invariant checkers ------------------------------------------------------
// Each returns the first violation as text, or nullopt when the invariant holds.

/// Set pixels == union of edge points and ambiguity points, exactly.
inline std::optional<std::string> checkCoverage(const TraceResult& result) {
    Grid<std::uint8_t> covered(result.image.width(), result.image.height(), 0);
    for (const Edge& edge : result.edges) {
        for (const Point& p : edge.points) {
            if (!result.image.isSet(p)) {
                std::ostringstream os;
                os << "edge point " << p << " is not a set pixel";
                return os.str();
            }
            covered(p) = 1;
        }
    }
    for (const Ambiguity& amb : result.ambiguities.all()) {
        for (const Point& p : amb.points) {
            if (!result.image.isSet(p)) {
                std::ostringstream os;
                os << "ambiguity point " << p << " is not a set pixel";
                return os.str();
            }
            covered(p) = 1;
        }
    }
    for (const Point& p : result.image.setPixels()) {
        if (!covered(p)) {
            std::ostringstream os;
            os << "set pixel " << p << " is in no edge and no ambiguity";
            return os.str();
        }
    }
    return std::nullopt;
}

/// No repeated pixel within an edge except a first==last seam on an
/// ambiguity pixel; non-ambiguity cells hold at most one id.
inline std::optional<std::string> checkNoDoubleTrace(const TraceResult& result) {
    for (std::size_t id = 0; id < result.edges.size(); ++id) {
        const auto& pts = result.edges[id].points;
        std::set<Point> seen;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (!seen.insert(pts[i]).second) {
                const bool permittedSeam = i + 1 == pts.size() && pts.front() == pts.back() &&
                                           result.ambiguities.contains(pts[i]);
                if (!permittedSeam) {
                    std::ostringstream os;
                    os << "edge " << id << " repeats pixel " << pts[i];
                    return os.str();
                }
            }
        }
    }
    for (int y = 0; y < result.image.height(); ++y) {
        for (int x = 0; x < result.image.width(); ++x) {
            if (!result.ambiguities.contains({x, y}) && result.edgeIdMap(x, y).size() > 1) {
                std::ostringstream os;
                os << "non-ambiguity pixel (" << x << "," << y << ") carries "
                   << result.edgeIdMap(x, y).size() << " edge ids";
                return os.str();
            }
        }
    }
    return std::nullopt;
}

/// Consecutive points 8-adjacent; no diagonal step when either in-between
/// orthogonal pixel is set.
inline std::optional<std::string> checkOrdering(const TraceResult& result) {
    for (std::size_t id = 0; id < result.edges.size(); ++id) {
        const auto& pts = result.edges[id].points;
        for (std::size_t i = 1; i < pts.size(); ++i) {
            const Point& a = pts[i - 1];
            const Point& b = pts[i];
            if (!areEightAdjacent(a, b)) {
                std::ostringstream os;
                os << "edge " << id << ": " << a << " -> " << b << " not 8-adjacent";
                return os.str();
            }
            if (a.x != b.x && a.y != b.y) {
                if (result.image.at(a.x, b.y) || result.image.at(b.x, a.y)) {
                    std::ostringstream os;
                    os << "edge " << id << ": diagonal step " << a << " -> " << b
                       << " with a set orthogonal detour";
                    return os.str();
                }
            }
        }
    }
    return std::nullopt;
}

/// Edge ids per cell match the edges running through the pixel, and any edge
/// point inside an ambiguity is a terminal.
inline std::optional<std::string> checkBookkeeping(const TraceResult& result) {
    EdgeIdMap rebuilt = buildEdgeIdMap(result.image.width(), result.image.height(), result.edges);
    for (int y = 0; y < result.image.height(); ++y) {
        for (int x = 0; x < result.image.width(); ++x) {
            std::vector<EdgeId> a = result.edgeIdMap(x, y);
            std::vector<EdgeId> b = rebuilt(x, y);
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a != b) {
                std::ostringstream os;
                os << "edgeIdMap cell (" << x << "," << y << ") inconsistent with edge list";
                return os.str();
            }
        }
    }
    for (std::size_t id = 0; id < result.edges.size(); ++id) {
        const auto& pts = result.edges[id].points;
        for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
            if (result.ambiguities.contains(pts[i])) {
                std::ostringstream os;
                os << "edge " << id << " has interior ambiguity point " << pts[i];
                return os.str();
            }
        }
    }
    return std::nullopt;
}

inline std::optional<std::string> checkAllTraceInvariants(const TraceResult& result) {
    if (auto v = checkCoverage(result))
        return v;
    if (auto v = checkNoDoubleTrace(result))
        return v;
    if (auto v = checkOrdering(result))
        return v;
    return checkBookkeeping(result);
}

} // namespace edgetrace::fixtures
