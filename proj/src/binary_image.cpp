#include "edgetrace/binary_image.hpp"

#include <algorithm>

namespace edgetrace {

BinaryImage BinaryImage::fromAscii(const std::vector<std::string>& rows) {
    std::size_t width = 0;
    for (const auto& row : rows)
        width = std::max(width, row.size());
    BinaryImage image(static_cast<int>(width), static_cast<int>(rows.size()));
    for (int y = 0; y < image.height(); ++y) {
        const std::string& row = rows[y];
        for (int x = 0; x < static_cast<int>(row.size()); ++x) {
            if (row[x] == '#' || row[x] == '1')
                image.set({x, y});
        }
    }
    return image;
}

int BinaryImage::countSetPixels() const {
    int n = 0;
    for (std::uint8_t v : grid_.cells())
        n += v;
    return n;
}

std::vector<Point> BinaryImage::setPixels() const {
    std::vector<Point> pts;
    for (int y = 0; y < height(); ++y)
        for (int x = 0; x < width(); ++x)
            if (grid_(x, y))
                pts.push_back({x, y});
    return pts;
}

} // namespace edgetrace
