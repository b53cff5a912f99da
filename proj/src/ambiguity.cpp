#include "edgetrace/ambiguity.hpp"

#include <stdexcept>

#include "edgetrace/neighborhood.hpp"

namespace edgetrace {

int AmbiguityRegistry::add(std::vector<Point> points) {
    const int id = static_cast<int>(ambiguities_.size());
    for (const Point& p : points) {
        if (!perPixel_.inBounds(p))
            throw std::out_of_range("AmbiguityRegistry::add: point out of bounds");
        if (perPixel_(p) != kNone)
            throw std::invalid_argument("AmbiguityRegistry::add: pixel already registered");
        perPixel_(p) = id;
    }
    ambiguities_.push_back({id, std::move(points)});
    return id;
}

AmbiguityRegistry preprocessAmbiguities(const BinaryImage& image) {
    AmbiguityRegistry registry(image.width(), image.height());
    // Clusters are disjoint and closed under the direct-neighbor criterion
    // link, so one shared membership grid is enough to avoid double entries.
    Grid<std::uint8_t> clustered(image.width(), image.height(), 0);
    for (int y = 0; y < image.height(); ++y) {
        for (int x = 0; x < image.width(); ++x) {
            const Point p{x, y};
            if (!image.isSet(p) || clustered(p))
                continue;
            if (!isAmbiguityPoint(image, p))
                continue;
            // Region-grow: iteratively append direct neighbors that also
            // satisfy the criterion.
            std::vector<Point> clusterPoints{p};
            clustered(p) = 1;
            for (std::size_t c = 0; c < clusterPoints.size(); ++c) {
                for (const Point& pn : getDirectNeighbors(image, clusterPoints[c])) {
                    if (clustered(pn) || !isAmbiguityPoint(image, pn))
                        continue;
                    clustered(pn) = 1;
                    clusterPoints.push_back(pn);
                }
            }
            registry.add(std::move(clusterPoints));
        }
    }
    return registry;
}

} // namespace edgetrace
