#pragma once

#include <vector>

#include "edgetrace/ambiguity.hpp"
#include "edgetrace/binary_image.hpp"
#include "edgetrace/grid.hpp"
#include "edgetrace/point.hpp"

namespace edgetrace {

using EdgeId = int;

/// Ordered sequence of 8-connected edge pixels. The edge's id is its position
/// in TraceResult::edges. Interior points are never ambiguity points; a point
/// repeats only as first == last, when a closed loop attaches to a single
/// ambiguity connection pixel.
struct Edge {
    std::vector<Point> points;

    int size() const { return static_cast<int>(points.size()); }
    const Point& front() const { return points.front(); }
    const Point& back() const { return points.back(); }
    bool isClosed() const { return points.size() > 1 && points.front() == points.back(); }
};

/// Per-pixel ordered list of the ids of every edge running through that pixel.
using EdgeIdMap = Grid<std::vector<EdgeId>>;

/// The augmented edge map: ordered edges, per-pixel edge ids, and the
/// ambiguity registry, together covering every set pixel of the image.
struct TraceResult {
    BinaryImage image; // working image the result describes
    std::vector<Edge> edges;
    EdgeIdMap edgeIdMap;
    AmbiguityRegistry ambiguities;
};

/// Two-pass trace: identifies all ambiguities, then traces every remaining
/// set pixel into ordered edges connected to adjacent ambiguities through a
/// single connection pixel. Deterministic for identical inputs; edge ids are
/// dense 0..edges.size()-1. Iterative walk, so edge length is bounded only
/// by memory.
TraceResult traceAll(const BinaryImage& image);

/// Merges two point sequences sharing a terminal point. The four overlap
/// cases (start/start, end/end, end/start, start/end) are resolved in that
/// order; the shared point appears once at the seam. Throws
/// std::invalid_argument when no terminal is shared.
std::vector<Point> mergeEdgePoints(const std::vector<Point>& a, const std::vector<Point>& b);

/// Merges edges a and b of a finished result in place. The merged edge keeps
/// min(a,b); remaining ids are recompacted and the edge-id map rewritten.
/// Returns the kept id.
EdgeId mergeEdges(TraceResult& result, EdgeId a, EdgeId b);

/// Rebuilds a per-pixel edge-id map from an edge list (ids ascending per cell).
EdgeIdMap buildEdgeIdMap(int width, int height, const std::vector<Edge>& edges);

} // namespace edgetrace
