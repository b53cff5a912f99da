#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>

namespace edgetrace {

/// Integer pixel coordinate, x = column, y = row (origin top-left, y grows down).
struct Point {
    int x = 0;
    int y = 0;

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Point& p) {
    return os << "(" << p.x << "," << p.y << ")";
}

/// True if a and b are 8-adjacent (and distinct).
inline bool areEightAdjacent(const Point& a, const Point& b) {
    const int dx = a.x - b.x;
    const int dy = a.y - b.y;
    return (dx != 0 || dy != 0) && dx >= -1 && dx <= 1 && dy >= -1 && dy <= 1;
}

struct PointHash {
    std::size_t operator()(const Point& p) const {
        return std::hash<std::int64_t>{}((static_cast<std::int64_t>(p.y) << 32) ^
                                         static_cast<std::uint32_t>(p.x));
    }
};

} // namespace edgetrace
