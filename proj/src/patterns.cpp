#include "edgetrace/patterns.hpp"

#include <cmath>
#include <stdexcept>

namespace edgetrace {

namespace {

int squareSide(int n) {
    int side = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
    while (side * side < n)
        ++side;
    return side;
}

} // namespace

int crossPatternActualCount(int n, PatternLayout layout) {
    if (layout == PatternLayout::Row)
        return n;
    const int side = squareSide(n);
    return side * side;
}

BinaryImage makeCrossPattern(int n, PatternLayout layout) {
    if (n < 1)
        throw std::invalid_argument("makeCrossPattern: n must be >= 1");
    if (layout == PatternLayout::Row) {
        // Crossing pixels at (2+4k, 2); adjacent crosses share an arm tip.
        BinaryImage image(4 * n + 1, 5);
        for (int x = 0; x <= 4 * n; ++x)
            image.set({x, 2});
        for (int k = 0; k < n; ++k)
            for (int y = 0; y <= 4; ++y)
                image.set({2 + 4 * k, y});
        return image;
    }
    const int side = squareSide(n);
    const int extent = 4 * side + 1;
    BinaryImage image(extent, extent);
    for (int k = 0; k < side; ++k) {
        for (int t = 0; t < extent; ++t) {
            image.set({t, 2 + 4 * k}); // horizontal line through row of crossings
            image.set({2 + 4 * k, t}); // vertical line through column of crossings
        }
    }
    return image;
}

BinaryImage makeRing(int size) {
    if (size < 3)
        throw std::invalid_argument("makeRing: size must be >= 3");
    BinaryImage image(size + 2, size + 2);
    for (int t = 0; t < size; ++t) {
        image.set({1 + t, 1});
        image.set({1 + t, size});
        image.set({1, 1 + t});
        image.set({size, 1 + t});
    }
    return image;
}

BinaryImage makeTJunction(int armLength) {
    if (armLength < 1)
        throw std::invalid_argument("makeTJunction: arm length must be >= 1");
    const int a = armLength;
    BinaryImage image(2 * a + 3, a + 3);
    for (int x = 0; x <= 2 * a; ++x)
        image.set({1 + x, 1});
    for (int y = 0; y <= a; ++y)
        image.set({1 + a, 1 + y});
    return image;
}

BinaryImage makeXJunction(int armLength) {
    if (armLength < 1)
        throw std::invalid_argument("makeXJunction: arm length must be >= 1");
    const int a = armLength;
    const int c = a + 1;
    BinaryImage image(2 * a + 3, 2 * a + 3);
    image.set({c, c});
    for (int k = 1; k <= a; ++k) {
        image.set({c - k, c - k});
        image.set({c + k, c - k});
        image.set({c - k, c + k});
        image.set({c + k, c + k});
    }
    return image;
}

} // namespace edgetrace
