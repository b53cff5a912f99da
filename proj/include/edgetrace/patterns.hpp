#pragma once

#include "edgetrace/binary_image.hpp"
#include "edgetrace/metrics.hpp"

namespace edgetrace {

/// Chained 5x5 plus-shaped crosses sharing arm tips; every crossing pixel is
/// a single-pixel ambiguity. Row layout chains n crosses horizontally
/// (exactly n ambiguities); the square layout fills a ceil(sqrt(n)) grid with
/// horizontal and vertical links, rounding the count up to the full grid.
BinaryImage makeCrossPattern(int n, PatternLayout layout);

/// Actual cross count the square layout produces for a requested n.
int crossPatternActualCount(int n, PatternLayout layout);

/// Junction-free rectangular ring, outline of size x size, 1 px margin.
BinaryImage makeRing(int size);

/// Three one-pixel-wide arms of the given length meeting at one junction.
BinaryImage makeTJunction(int armLength);

/// Two diagonal strokes crossing at one pixel; four diagonal arms.
BinaryImage makeXJunction(int armLength);

} // namespace edgetrace
