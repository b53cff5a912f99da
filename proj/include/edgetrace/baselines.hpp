#pragma once

#include <string>
#include <vector>

#include "edgetrace/binary_image.hpp"
#include "edgetrace/point.hpp"

namespace edgetrace {

/// Common output representation of the compared methods. Segments are pixel
/// sets in scan order for labeling and traversal-ordered (possibly revisiting
/// pixels) for the tracers; hierarchy holds a parent index per segment for
/// border following, -1 for top-level.
struct SegmentSet {
    std::string method;
    std::vector<std::vector<Point>> segments;
    std::vector<int> hierarchy;
};

/// 8-connected component labeling; components numbered by scan order, each
/// segment's pixels in scan order.
SegmentSet ccl(const BinaryImage& image);

/// Moore-Neighbor tracing around the outer boundary of each connected
/// component, one segment per component. Uses Jacob's stopping criterion
/// (stop when about to leave the start pixel the same way as the first
/// time), so open curves terminate after the out-and-back pass and closed
/// curves after one loop. Interior pixels off the boundary are not visited.
SegmentSet mooreTrace(const BinaryImage& image);

/// Classical border following: outer and hole borders with parent links.
/// Pixels can appear in several borders; interior pixels in none.
SegmentSet borderFollowingWithHierarchy(const BinaryImage& image);

} // namespace edgetrace
