#pragma once

#include <optional>
#include <vector>

#include "edgetrace/trace.hpp"

namespace edgetrace {

/// Connection of an edge to ambiguities: at neither end, exactly one end, or
/// both ends (both ends in the same ambiguity also counts as bridged).
enum class EdgeClass { Free, Dangling, Bridged };

const char* edgeClassName(EdgeClass c);

EdgeClass classifyEdge(const TraceResult& result, EdgeId id);

/// Length window over an edge's point count; unset bounds match everything.
struct LengthFilter {
    std::optional<int> shorterThan; // points.size() < shorterThan
    std::optional<int> longerThan;  // points.size() > longerThan

    bool matches(int length) const {
        return (!shorterThan || length < *shorterThan) && (!longerThan || length > *longerThan);
    }
};

/// Removes every edge matching the class filter (nullopt = any class) and the
/// length filter. Ambiguity points stay; pixels covered only by removed edges
/// are cleared in the working image so re-analysis stays consistent.
TraceResult removeEdgesWhere(const TraceResult& result, std::optional<EdgeClass> classFilter,
                             const LengthFilter& lengthFilter = {});

/// Repeats {remove dangling edges shorter than maxLen; re-trace the working
/// image}. rounds = nullopt runs until a round removes nothing. Re-tracing is
/// needed because a removal can dissolve junctions and reclassify edges.
TraceResult removeDanglingIterative(const TraceResult& result, std::optional<int> maxLen,
                                    std::optional<int> rounds);

/// Generalization used by the pipeline: iterate {remove <class>; re-trace}.
TraceResult removeIterative(const TraceResult& result, std::optional<EdgeClass> classFilter,
                            const LengthFilter& lengthFilter, std::optional<int> rounds);

/// Absorbs every edge whose interior (points strictly between the two
/// connection pixels) has at most maxConnectorLen pixels and whose ends touch
/// two distinct ambiguities, combining the clusters transitively. Connector
/// pixels become ambiguity points.
TraceResult mergeNearbyAmbiguities(const TraceResult& result, int maxConnectorLen);

enum class EdgeEnd { Start, End };

/// Direction the edge leaves through the given terminal, from a total
/// least-squares line through the min(fitLength, size) terminal points.
/// Range (-pi, pi], image coordinates (y down).
double endpointAngle(const Edge& edge, EdgeEnd whichEnd, int fitLength);

struct ConnectionCostParams {
    int fitLength = 5;
    double angleWeight = 1.0;
    double distanceWeight = 0.25;
    double costThreshold = 1.5707963267948966; // pi/2
};

/// Greedy continuity-based pairing of the edge terminals attached to one
/// ambiguity. Pair cost is angleWeight * (pi - wrapped angular difference of
/// the approach directions) + distanceWeight * distance of the connection
/// pixels; the globally cheapest pairs below costThreshold are accepted over
/// a static ranking, each terminal at most once. Accepted pairs are joined by
/// a Bresenham bridge and merged (a pair of the same edge's two ends closes
/// it). Bridge pixels are recorded in the edge and set in the working image.
TraceResult connectEdgesAtAmbiguity(const TraceResult& result, int ambiguityId,
                                    const ConnectionCostParams& params = {});

/// Applies connectEdgesAtAmbiguity to every ambiguity in ascending id order.
TraceResult connectAllAmbiguities(const TraceResult& result,
                                  const ConnectionCostParams& params = {});

/// Integer Bresenham rasterization from a to b, endpoints included,
/// consecutive points 8-adjacent.
std::vector<Point> bresenhamLine(const Point& a, const Point& b);

Edge reverseEdge(const Edge& edge);

/// Reverses one edge (or all edges when id is nullopt) in place.
TraceResult reverseEdges(const TraceResult& result, std::optional<EdgeId> id);

} // namespace edgetrace
