#include "edgetrace/trace.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

#include "edgetrace/neighborhood.hpp"

namespace edgetrace {

namespace {

/// Second pass of the trace. Edges are built in retire-able slots so that a
/// two-way start can merge its two sub-edges (keeping the smaller id) without
/// renumbering; ids are compacted once at the end.
class Tracer {
public:
    explicit Tracer(const BinaryImage& image)
        : image_(image),
          registry_(preprocessAmbiguities(image)),
          cells_(image.width(), image.height()) {}

    TraceResult run() {
        for (int y = 0; y < image_.height(); ++y) {
            for (int x = 0; x < image_.width(); ++x) {
                const Point p{x, y};
                if (image_.isSet(p) && !registry_.contains(p) && cells_(p).empty())
                    traceFrom(p);
            }
        }
        return finish();
    }

private:
    // A neighbor is unvisited if no edge runs through it yet, or it is an
    // ambiguity point (connection pixels join every adjacent edge).
    bool isUnvisited(const Point& n) const {
        return cells_(n).empty() || registry_.contains(n);
    }

    NeighborList unvisitedNeighbors(const Point& p) const {
        NeighborList out;
        for (const Point& n : getDirectNeighbors(image_, p))
            if (isUnvisited(n))
                out.push(n);
        return out;
    }

    void appendToEdge(const Point& p, std::vector<Point>& edge) {
        edge.push_back(p);
        cells_(p).push_back(edgeCounter_);
    }

    void finishEdge(std::vector<Point>&& edge) {
        assert(static_cast<int>(slots_.size()) == edgeCounter_);
        slots_.push_back(std::move(edge));
        alive_.push_back(1);
        ++edgeCounter_;
    }

    // Continues an edge from `next` until it hits a connection pixel or runs
    // out of unvisited neighbors, then finishes it.
    void walk(std::vector<Point> edge, Point next) {
        Point p = next;
        while (true) {
            appendToEdge(p, edge);
            if (registry_.contains(p))
                break; // connection pixel is the terminal point
            const NeighborList unvisited = unvisitedNeighbors(p);
            if (unvisited.empty())
                break;
            assert(unvisited.size() == 1); // mid-walk: predecessor is already visited
            p = unvisited[0];
        }
        finishEdge(std::move(edge));
    }

    void traceFrom(const Point& seed) {
        std::vector<Point> edge;
        appendToEdge(seed, edge);
        const NeighborList unvisited = unvisitedNeighbors(seed);
        if (unvisited.size() == 2) {
            // The trace started somewhere within the edge: trace both
            // directions from the seed and merge.
            walk({seed}, unvisited[0]);
            if (isUnvisited(unvisited[1])) {
                walk({seed}, unvisited[1]);
                mergeSlots(edgeCounter_ - 2, edgeCounter_ - 1);
            }
            // else the first walk closed a junction-free loop and consumed
            // the second direction; it is the whole edge already.
        } else if (unvisited.size() == 1) {
            walk(std::move(edge), unvisited[0]);
        } else {
            finishEdge(std::move(edge));
        }
    }

    void mergeSlots(EdgeId a, EdgeId b) {
        assert(a < b && alive_[a] && alive_[b]);
        std::vector<Point> retired = std::move(slots_[b]);
        slots_[a] = mergeEdgePoints(slots_[a], retired);
        alive_[b] = 0;
        slots_[b].clear();
        for (const Point& q : retired) {
            std::vector<EdgeId>& cell = cells_(q);
            for (EdgeId& id : cell)
                if (id == b)
                    id = a;
            // a connection pixel shared by both sub-edges now lists `a` twice
            cell.erase(std::unique(cell.begin(), cell.end()), cell.end());
        }
    }

    TraceResult finish() {
        std::vector<EdgeId> remap(slots_.size(), -1);
        std::vector<Edge> edges;
        edges.reserve(slots_.size());
        for (std::size_t i = 0; i < slots_.size(); ++i) {
            if (!alive_[i])
                continue;
            remap[i] = static_cast<EdgeId>(edges.size());
            edges.push_back({std::move(slots_[i])});
        }
        for (int y = 0; y < image_.height(); ++y) {
            for (int x = 0; x < image_.width(); ++x) {
                for (EdgeId& id : cells_(x, y)) {
                    assert(remap[id] >= 0);
                    id = remap[id];
                }
            }
        }
        return TraceResult{image_, std::move(edges), std::move(cells_), std::move(registry_)};
    }

    BinaryImage image_;
    AmbiguityRegistry registry_;
    EdgeIdMap cells_;
    std::vector<std::vector<Point>> slots_;
    std::vector<char> alive_;
    EdgeId edgeCounter_ = 0;
};

} // namespace

TraceResult traceAll(const BinaryImage& image) {
    return Tracer(image).run();
}

std::vector<Point> mergeEdgePoints(const std::vector<Point>& a, const std::vector<Point>& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("mergeEdgePoints: empty edge");
    std::vector<Point> merged;
    merged.reserve(a.size() + b.size() - 1);
    if (a.front() == b.front()) {
        merged.assign(a.rbegin(), a.rend());
        merged.insert(merged.end(), b.begin() + 1, b.end());
    } else if (a.back() == b.back()) {
        merged = a;
        merged.insert(merged.end(), b.rbegin() + 1, b.rend());
    } else if (a.back() == b.front()) {
        merged = a;
        merged.insert(merged.end(), b.begin() + 1, b.end());
    } else if (a.front() == b.back()) {
        merged = b;
        merged.insert(merged.end(), a.begin() + 1, a.end());
    } else {
        throw std::invalid_argument("mergeEdgePoints: edges share no terminal point");
    }
    return merged;
}

EdgeId mergeEdges(TraceResult& result, EdgeId a, EdgeId b) {
    const int n = static_cast<int>(result.edges.size());
    if (a < 0 || b < 0 || a >= n || b >= n || a == b)
        throw std::invalid_argument("mergeEdges: invalid edge ids");
    const EdgeId kept = std::min(a, b);
    const EdgeId retired = std::max(a, b);
    result.edges[kept].points = mergeEdgePoints(result.edges[a].points, result.edges[b].points);
    result.edges.erase(result.edges.begin() + retired);
    result.edgeIdMap = buildEdgeIdMap(result.image.width(), result.image.height(), result.edges);
    return kept;
}

EdgeIdMap buildEdgeIdMap(int width, int height, const std::vector<Edge>& edges) {
    EdgeIdMap map(width, height);
    for (std::size_t id = 0; id < edges.size(); ++id) {
        for (const Point& p : edges[id].points) {
            std::vector<EdgeId>& cell = map(p);
            if (cell.empty() || cell.back() != static_cast<EdgeId>(id))
                cell.push_back(static_cast<EdgeId>(id));
        }
    }
    return map;
}

} // namespace edgetrace
