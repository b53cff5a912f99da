#pragma once

#include <vector>

#include "edgetrace/binary_image.hpp"
#include "edgetrace/grid.hpp"
#include "edgetrace/point.hpp"

namespace edgetrace {

/// A coherent cluster of pixels where edge paths are undefined (a junction,
/// intersection or thick region). Single-pixel clusters cover T-/Y-/X-style
/// junctions; multi-pixel clusters cover blocks and blobs of any shape.
struct Ambiguity {
    int id = 0;
    std::vector<Point> points; // discovery order
};

/// All ambiguities of an image plus a per-pixel index, so the full cluster is
/// retrievable from any member pixel in time proportional to its size.
class AmbiguityRegistry {
public:
    AmbiguityRegistry() = default;
    AmbiguityRegistry(int width, int height) : perPixel_(width, height, kNone) {}

    bool contains(const Point& p) const {
        return perPixel_.inBounds(p) && perPixel_(p) != kNone;
    }
    /// Ambiguity id at p, or -1.
    int idAt(const Point& p) const { return perPixel_.inBounds(p) ? perPixel_(p) : kNone; }
    /// Containing ambiguity, or nullptr.
    const Ambiguity* at(const Point& p) const {
        const int id = idAt(p);
        return id == kNone ? nullptr : &ambiguities_[id];
    }

    const std::vector<Ambiguity>& all() const { return ambiguities_; }
    int size() const { return static_cast<int>(ambiguities_.size()); }

    /// Registers a finished cluster at every member pixel. Members must be
    /// in bounds and not registered yet.
    int add(std::vector<Point> points);

    static constexpr int kNone = -1;

private:
    std::vector<Ambiguity> ambiguities_;
    Grid<int> perPixel_;
};

/// First pass: scans row-major for unregistered pixels satisfying the
/// ambiguity criterion and region-grows each into one coherent cluster via
/// direct neighbors. Afterwards no set pixel outside the registry satisfies
/// the criterion.
AmbiguityRegistry preprocessAmbiguities(const BinaryImage& image);

} // namespace edgetrace
