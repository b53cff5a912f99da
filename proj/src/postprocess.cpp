#include "edgetrace/postprocess.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace edgetrace {

namespace {

constexpr double kPi = 3.14159265358979323846;

int findRoot(std::vector<int>& parent, int i) {
    while (parent[i] != i) {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    return i;
}

double wrappedAngularDifference(double a, double b) {
    double d = std::fabs(a - b);
    d = std::fmod(d, 2.0 * kPi);
    return d > kPi ? 2.0 * kPi - d : d;
}

} // namespace

const char* edgeClassName(EdgeClass c) {
    switch (c) {
    case EdgeClass::Free: return "free";
    case EdgeClass::Dangling: return "dangling";
    case EdgeClass::Bridged: return "bridged";
    }
    return "?";
}

EdgeClass classifyEdge(const TraceResult& result, EdgeId id) {
    const Edge& edge = result.edges.at(id);
    const bool start = result.ambiguities.contains(edge.front());
    const bool end = result.ambiguities.contains(edge.back());
    if (start && end)
        return EdgeClass::Bridged;
    return (start || end) ? EdgeClass::Dangling : EdgeClass::Free;
}

TraceResult removeEdgesWhere(const TraceResult& result, std::optional<EdgeClass> classFilter,
                             const LengthFilter& lengthFilter) {
    TraceResult out;
    out.image = result.image;
    out.ambiguities = result.ambiguities;
    std::vector<const Edge*> removed;
    for (EdgeId id = 0; id < static_cast<EdgeId>(result.edges.size()); ++id) {
        const Edge& edge = result.edges[id];
        const bool classMatch = !classFilter || classifyEdge(result, id) == *classFilter;
        if (classMatch && lengthFilter.matches(edge.size()))
            removed.push_back(&edge);
        else
            out.edges.push_back(edge);
    }
    out.edgeIdMap = buildEdgeIdMap(out.image.width(), out.image.height(), out.edges);
    // Pixels belonging only to removed edges disappear from the working image;
    // ambiguity points stay untouched.
    for (const Edge* edge : removed)
        for (const Point& p : edge->points)
            if (!out.ambiguities.contains(p) && out.edgeIdMap(p).empty())
                out.image.clear(p);
    return out;
}

TraceResult removeIterative(const TraceResult& result, std::optional<EdgeClass> classFilter,
                            const LengthFilter& lengthFilter, std::optional<int> rounds) {
    TraceResult current = result;
    for (int round = 0; !rounds || round < *rounds; ++round) {
        const std::size_t before = current.edges.size();
        TraceResult pruned = removeEdgesWhere(current, classFilter, lengthFilter);
        const bool changed = pruned.edges.size() != before;
        current = traceAll(pruned.image);
        if (!rounds && !changed)
            break;
    }
    return current;
}

TraceResult removeDanglingIterative(const TraceResult& result, std::optional<int> maxLen,
                                    std::optional<int> rounds) {
    return removeIterative(result, EdgeClass::Dangling, LengthFilter{maxLen, std::nullopt}, rounds);
}

TraceResult mergeNearbyAmbiguities(const TraceResult& result, int maxConnectorLen) {
    const int ambiguityCount = result.ambiguities.size();
    std::vector<int> parent(ambiguityCount);
    std::iota(parent.begin(), parent.end(), 0);

    std::vector<char> absorbed(result.edges.size(), 0);
    for (EdgeId id = 0; id < static_cast<EdgeId>(result.edges.size()); ++id) {
        const Edge& edge = result.edges[id];
        const int a = result.ambiguities.idAt(edge.front());
        const int b = result.ambiguities.idAt(edge.back());
        if (a < 0 || b < 0 || a == b)
            continue;
        if (edge.size() - 2 > maxConnectorLen)
            continue;
        absorbed[id] = 1;
        parent[findRoot(parent, a)] = findRoot(parent, b);
    }

    TraceResult out;
    out.image = result.image;

    // Rebuild the registry: each union-find group becomes one combined
    // ambiguity, numbered by its smallest original id; connector interiors
    // join their group after the cluster points.
    AmbiguityRegistry registry(result.image.width(), result.image.height());
    std::vector<int> newIdOfRoot(ambiguityCount, -1);
    std::vector<std::vector<Point>> combined;
    for (int oldId = 0; oldId < ambiguityCount; ++oldId) {
        const int root = findRoot(parent, oldId);
        if (newIdOfRoot[root] < 0) {
            newIdOfRoot[root] = static_cast<int>(combined.size());
            combined.emplace_back();
        }
        const auto& pts = result.ambiguities.all()[oldId].points;
        auto& dst = combined[newIdOfRoot[root]];
        dst.insert(dst.end(), pts.begin(), pts.end());
    }
    for (EdgeId id = 0; id < static_cast<EdgeId>(result.edges.size()); ++id) {
        if (!absorbed[id])
            continue;
        const Edge& edge = result.edges[id];
        const int root = findRoot(parent, result.ambiguities.idAt(edge.front()));
        auto& dst = combined[newIdOfRoot[root]];
        dst.insert(dst.end(), edge.points.begin() + 1, edge.points.end() - 1);
    }
    for (auto& points : combined)
        registry.add(std::move(points));
    out.ambiguities = std::move(registry);

    for (EdgeId id = 0; id < static_cast<EdgeId>(result.edges.size()); ++id)
        if (!absorbed[id])
            out.edges.push_back(result.edges[id]);
    out.edgeIdMap = buildEdgeIdMap(out.image.width(), out.image.height(), out.edges);
    return out;
}

double endpointAngle(const Edge& edge, EdgeEnd whichEnd, int fitLength) {
    const auto& pts = edge.points;
    if (pts.size() < 2)
        throw std::invalid_argument("endpointAngle: edge needs at least 2 points");
    const int m = std::min(static_cast<int>(pts.size()), std::max(fitLength, 2));

    // Window in traversal order toward the terminal.
    std::vector<Point> window;
    window.reserve(m);
    if (whichEnd == EdgeEnd::End)
        window.assign(pts.end() - m, pts.end());
    else
        window.assign(pts.rend() - m, pts.rend());

    double mx = 0, my = 0;
    for (const Point& p : window) {
        mx += p.x;
        my += p.y;
    }
    mx /= m;
    my /= m;
    double sxx = 0, syy = 0, sxy = 0;
    for (const Point& p : window) {
        const double dx = p.x - mx;
        const double dy = p.y - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0 && syy == 0)
        throw std::invalid_argument("endpointAngle: fit points coincide");

    // Principal axis of the scatter (total least squares, so vertical runs
    // are as well-posed as horizontal ones).
    const double axis = 0.5 * std::atan2(2.0 * sxy, sxx - syy);
    double dx = std::cos(axis);
    double dy = std::sin(axis);

    // Orient along the traversal: prefer the window chord, fall back to the
    // offset from the innermost distinct point (a closed seam window can have
    // a zero chord).
    const Point& terminal = window.back();
    double cx = terminal.x - window.front().x;
    double cy = terminal.y - window.front().y;
    if (cx == 0 && cy == 0) {
        for (auto it = window.rbegin() + 1; it != window.rend(); ++it) {
            if (!(*it == terminal)) {
                cx = terminal.x - it->x;
                cy = terminal.y - it->y;
                break;
            }
        }
    }
    double dot = dx * cx + dy * cy;
    if (dot == 0) {
        cx = terminal.x - mx;
        cy = terminal.y - my;
        dot = dx * cx + dy * cy;
    }
    if (dot < 0) {
        dx = -dx;
        dy = -dy;
    }
    double angle = std::atan2(dy, dx);
    if (angle <= -kPi)
        angle = kPi;
    return angle;
}

namespace {

struct Terminal {
    EdgeId edge;
    EdgeEnd end;
    Point connection;
    double angle;
};

} // namespace

TraceResult connectEdgesAtAmbiguity(const TraceResult& result, int ambiguityId,
                                    const ConnectionCostParams& params) {
    if (ambiguityId < 0 || ambiguityId >= result.ambiguities.size())
        throw std::invalid_argument("connectEdgesAtAmbiguity: no such ambiguity");

    std::vector<Terminal> terminals;
    for (EdgeId id = 0; id < static_cast<EdgeId>(result.edges.size()); ++id) {
        const Edge& edge = result.edges[id];
        if (edge.size() < 2 || edge.isClosed())
            continue; // closed loops are already self-connected
        if (result.ambiguities.idAt(edge.front()) == ambiguityId)
            terminals.push_back(
                {id, EdgeEnd::Start, edge.front(), endpointAngle(edge, EdgeEnd::Start, params.fitLength)});
        if (result.ambiguities.idAt(edge.back()) == ambiguityId)
            terminals.push_back(
                {id, EdgeEnd::End, edge.back(), endpointAngle(edge, EdgeEnd::End, params.fitLength)});
    }

    // Static ranking over all terminal pairs; ties resolved by terminal order
    // (edge id ascending, start before end).
    struct Pair {
        double cost;
        int i, j;
    };
    std::vector<Pair> ranking;
    for (int i = 0; i < static_cast<int>(terminals.size()); ++i) {
        for (int j = i + 1; j < static_cast<int>(terminals.size()); ++j) {
            const double mismatch =
                kPi - wrappedAngularDifference(terminals[i].angle, terminals[j].angle);
            const double dx = terminals[i].connection.x - terminals[j].connection.x;
            const double dy = terminals[i].connection.y - terminals[j].connection.y;
            const double cost = params.angleWeight * mismatch +
                                params.distanceWeight * std::sqrt(dx * dx + dy * dy);
            ranking.push_back({cost, i, j});
        }
    }
    std::sort(ranking.begin(), ranking.end(), [](const Pair& a, const Pair& b) {
        return std::tie(a.cost, a.i, a.j) < std::tie(b.cost, b.i, b.j);
    });

    std::vector<char> consumed(terminals.size(), 0);
    std::vector<std::pair<int, int>> accepted;
    for (const Pair& pair : ranking) {
        if (pair.cost >= params.costThreshold || consumed[pair.i] || consumed[pair.j])
            continue;
        consumed[pair.i] = consumed[pair.j] = 1;
        accepted.push_back({pair.i, pair.j});
    }

    // Execute the joins on an edit buffer; terminal locations track the
    // reversals and merges applied so far.
    std::vector<std::vector<Point>> slots;
    slots.reserve(result.edges.size());
    for (const Edge& e : result.edges)
        slots.push_back(e.points);
    std::vector<char> alive(slots.size(), 1);
    struct Location {
        EdgeId edge;
        EdgeEnd end;
    };
    std::vector<Location> location(terminals.size());
    for (std::size_t t = 0; t < terminals.size(); ++t)
        location[t] = {terminals[t].edge, terminals[t].end};

    std::vector<Point> bridgePixels;
    auto reverseSlot = [&](EdgeId e) {
        std::reverse(slots[e].begin(), slots[e].end());
        for (Location& loc : location)
            if (loc.edge == e)
                loc.end = loc.end == EdgeEnd::Start ? EdgeEnd::End : EdgeEnd::Start;
    };

    for (auto [ti, tj] : accepted) {
        if (location[ti].edge == location[tj].edge) {
            // Self-closure: bridge from the end terminal back to the start.
            if (location[ti].end == EdgeEnd::End)
                std::swap(ti, tj);
            const EdgeId e = location[ti].edge;
            const std::vector<Point> bridge =
                bresenhamLine(terminals[tj].connection, terminals[ti].connection);
            slots[e].insert(slots[e].end(), bridge.begin() + 1, bridge.end());
            bridgePixels.insert(bridgePixels.end(), bridge.begin(), bridge.end());
            continue;
        }
        EdgeId ea = location[ti].edge;
        EdgeId eb = location[tj].edge;
        if (location[ti].end == EdgeEnd::Start)
            reverseSlot(ea); // ea must end at ti's connection pixel
        if (location[tj].end == EdgeEnd::End)
            reverseSlot(eb); // eb must start at tj's connection pixel
        if (!(terminals[ti].connection == terminals[tj].connection)) {
            const std::vector<Point> bridge =
                bresenhamLine(terminals[ti].connection, terminals[tj].connection);
            slots[ea].insert(slots[ea].end(), bridge.begin() + 1, bridge.end());
            bridgePixels.insert(bridgePixels.end(), bridge.begin(), bridge.end());
        }
        const EdgeId kept = std::min(ea, eb);
        std::vector<Point> merged = std::move(slots[ea]);
        merged.insert(merged.end(), slots[eb].begin() + 1, slots[eb].end());
        slots[kept] = std::move(merged);
        alive[std::max(ea, eb)] = 0;
        for (Location& loc : location) {
            if (loc.edge == ea) {
                loc.edge = kept;
                loc.end = EdgeEnd::Start; // ea's surviving terminal is the merged start
            } else if (loc.edge == eb) {
                loc.edge = kept;
                loc.end = EdgeEnd::End;
            }
        }
    }

    TraceResult out;
    out.image = result.image;
    out.ambiguities = result.ambiguities;
    for (std::size_t i = 0; i < slots.size(); ++i)
        if (alive[i])
            out.edges.push_back({std::move(slots[i])});
    out.edgeIdMap = buildEdgeIdMap(out.image.width(), out.image.height(), out.edges);
    for (const Point& p : bridgePixels)
        out.image.set(p);
    return out;
}

TraceResult connectAllAmbiguities(const TraceResult& result, const ConnectionCostParams& params) {
    TraceResult current = result;
    for (int id = 0; id < current.ambiguities.size(); ++id)
        current = connectEdgesAtAmbiguity(current, id, params);
    return current;
}

std::vector<Point> bresenhamLine(const Point& a, const Point& b) {
    std::vector<Point> line;
    const int dx = std::abs(b.x - a.x);
    const int dy = -std::abs(b.y - a.y);
    const int sx = a.x < b.x ? 1 : -1;
    const int sy = a.y < b.y ? 1 : -1;
    int err = dx + dy;
    Point p = a;
    while (true) {
        line.push_back(p);
        if (p == b)
            break;
        const int e2 = 2 * err;
        if (e2 >= dy) {
            err += dy;
            p.x += sx;
        }
        if (e2 <= dx) {
            err += dx;
            p.y += sy;
        }
    }
    return line;
}

Edge reverseEdge(const Edge& edge) {
    Edge out = edge;
    std::reverse(out.points.begin(), out.points.end());
    return out;
}

TraceResult reverseEdges(const TraceResult& result, std::optional<EdgeId> id) {
    TraceResult out = result;
    if (id) {
        if (*id < 0 || *id >= static_cast<EdgeId>(out.edges.size()))
            throw std::invalid_argument("reverseEdges: no such edge");
        out.edges[*id] = reverseEdge(out.edges[*id]);
    } else {
        for (Edge& e : out.edges)
            e = reverseEdge(e);
    }
    return out;
}

} // namespace edgetrace
