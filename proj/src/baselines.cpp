#include "edgetrace/baselines.hpp"

#include <array>
#include <cstdlib>
#include <optional>

#include "edgetrace/grid.hpp"

namespace edgetrace {

namespace {

// Moore neighborhood in clockwise screen order (y down), starting west.
constexpr std::array<Point, 8> kClockwise = {{
    {-1, 0}, {-1, -1}, {0, -1}, {1, -1}, {1, 0}, {1, 1}, {0, 1}, {-1, 1},
}};

// Counterclockwise order, starting west.
constexpr std::array<Point, 8> kCounterClockwise = {{
    {-1, 0}, {-1, 1}, {0, 1}, {1, 1}, {1, 0}, {1, -1}, {0, -1}, {-1, -1},
}};

int ringIndex(const std::array<Point, 8>& ring, const Point& center, const Point& neighbor) {
    for (int i = 0; i < 8; ++i)
        if (center.x + ring[i].x == neighbor.x && center.y + ring[i].y == neighbor.y)
            return i;
    return -1;
}

Grid<int> labelComponents(const BinaryImage& image, int& count) {
    Grid<int> label(image.width(), image.height(), -1);
    count = 0;
    std::vector<Point> stack;
    for (int y = 0; y < image.height(); ++y) {
        for (int x = 0; x < image.width(); ++x) {
            if (!image.at(x, y) || label(x, y) >= 0)
                continue;
            const int id = count++;
            label(x, y) = id;
            stack.push_back({x, y});
            while (!stack.empty()) {
                const Point p = stack.back();
                stack.pop_back();
                for (int dy = -1; dy <= 1; ++dy) {
                    for (int dx = -1; dx <= 1; ++dx) {
                        const int nx = p.x + dx;
                        const int ny = p.y + dy;
                        if (image.at(nx, ny) && label.inBounds(nx, ny) && label(nx, ny) < 0) {
                            label(nx, ny) = id;
                            stack.push_back({nx, ny});
                        }
                    }
                }
            }
        }
    }
    return label;
}

struct MooreStep {
    Point pixel;  // next contour pixel
    Point before; // background cell scanned immediately before it
};

// Clockwise Moore scan around p starting just after `back`.
std::optional<MooreStep> mooreScan(const BinaryImage& image, const Point& p, const Point& back) {
    const int start = ringIndex(kClockwise, p, back);
    for (int k = 1; k <= 8; ++k) {
        const int idx = (start + k) & 7;
        const Point cell{p.x + kClockwise[idx].x, p.y + kClockwise[idx].y};
        if (image.isSet(cell)) {
            const int prevIdx = (start + k - 1) & 7;
            return MooreStep{cell, {p.x + kClockwise[prevIdx].x, p.y + kClockwise[prevIdx].y}};
        }
    }
    return std::nullopt;
}

std::vector<Point> mooreBoundary(const BinaryImage& image, const Point& start) {
    std::vector<Point> contour{start};
    // The component's first pixel in scan order has a background west neighbor.
    const Point entry{start.x - 1, start.y};
    const auto first = mooreScan(image, start, entry);
    if (!first)
        return contour; // isolated pixel

    const std::size_t limit =
        4u * (static_cast<std::size_t>(image.width()) * image.height() + image.width() + image.height());
    Point m = first->pixel;
    Point before = first->before;
    while (contour.size() < limit) {
        if (m == start) {
            // About to re-enter the start: stop if it would be left the same
            // way as the first time (Jacob's criterion).
            const auto departure = mooreScan(image, start, before);
            if (departure->pixel == first->pixel && departure->before == first->before)
                break;
            contour.push_back(start);
            m = departure->pixel;
            before = departure->before;
            continue;
        }
        contour.push_back(m);
        const auto next = mooreScan(image, m, before);
        m = next->pixel;
        before = next->before;
    }
    return contour;
}

} // namespace

SegmentSet ccl(const BinaryImage& image) {
    int count = 0;
    const Grid<int> label = labelComponents(image, count);
    SegmentSet out;
    out.method = "ccl";
    out.segments.resize(count);
    for (int y = 0; y < image.height(); ++y)
        for (int x = 0; x < image.width(); ++x)
            if (label(x, y) >= 0)
                out.segments[label(x, y)].push_back({x, y});
    return out;
}

SegmentSet mooreTrace(const BinaryImage& image) {
    int count = 0;
    const Grid<int> label = labelComponents(image, count);
    SegmentSet out;
    out.method = "mnt";
    std::vector<char> traced(count, 0);
    for (int y = 0; y < image.height(); ++y) {
        for (int x = 0; x < image.width(); ++x) {
            const int id = label.inBounds(x, y) ? label(x, y) : -1;
            if (id < 0 || traced[id])
                continue;
            traced[id] = 1;
            out.segments.push_back(mooreBoundary(image, {x, y}));
        }
    }
    return out;
}

SegmentSet borderFollowingWithHierarchy(const BinaryImage& image) {
    const int w = image.width();
    const int h = image.height();
    Grid<int> f(w, h, 0);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            if (image.at(x, y))
                f(x, y) = 1;
    auto fAt = [&](int x, int y) { return f.inBounds(x, y) ? f(x, y) : 0; };

    struct Border {
        bool outer;
        int parent; // border number; 1 is the frame
        std::vector<Point> points;
    };
    std::vector<Border> borders(2);
    borders[1] = {false, 0, {}};
    int nbd = 1;

    auto followBorder = [&](const Point& start, const Point& from, int number,
                            std::vector<Point>& points) {
        // Clockwise search from `from` for the first nonzero neighbor of start.
        Point p1{};
        bool found = false;
        const int s0 = ringIndex(kClockwise, start, from);
        for (int k = 0; k < 8 && !found; ++k) {
            const int idx = (s0 + k) & 7;
            const Point cell{start.x + kClockwise[idx].x, start.y + kClockwise[idx].y};
            if (fAt(cell.x, cell.y) != 0) {
                p1 = cell;
                found = true;
            }
        }
        if (!found) {
            f(start.x, start.y) = -number; // single-pixel border
            points.push_back(start);
            return;
        }
        Point p2 = p1;
        Point p3 = start;
        while (true) {
            // Counterclockwise from the position after p2 around p3; note
            // whether the east neighbor was examined and was background.
            const int s = ringIndex(kCounterClockwise, p3, p2);
            Point p4 = p2;
            bool eastExaminedZero = false;
            for (int k = 1; k <= 8; ++k) {
                const int idx = (s + k) & 7;
                const Point cell{p3.x + kCounterClockwise[idx].x, p3.y + kCounterClockwise[idx].y};
                if (fAt(cell.x, cell.y) != 0) {
                    p4 = cell;
                    break;
                }
                if (kCounterClockwise[idx].x == 1 && kCounterClockwise[idx].y == 0)
                    eastExaminedZero = true;
            }
            if (eastExaminedZero)
                f(p3.x, p3.y) = -number;
            else if (f(p3.x, p3.y) == 1)
                f(p3.x, p3.y) = number;
            points.push_back(p3);
            if (p4 == start && p3 == p1)
                break;
            p2 = p3;
            p3 = p4;
        }
    };

    for (int y = 0; y < h; ++y) {
        int lnbd = 1;
        for (int x = 0; x < w; ++x) {
            const int fv = f(x, y);
            if (fv == 0)
                continue;
            bool isOuter = false;
            bool isHole = false;
            Point from{};
            if (fv == 1 && fAt(x - 1, y) == 0) {
                isOuter = true;
                from = {x - 1, y};
            } else if (fv >= 1 && fAt(x + 1, y) == 0) {
                isHole = true;
                from = {x + 1, y};
                if (fv > 1)
                    lnbd = fv;
            }
            if (isOuter || isHole) {
                ++nbd;
                const Border& lb = borders[lnbd];
                int parent;
                if (isOuter)
                    parent = lb.outer ? lb.parent : lnbd;
                else
                    parent = lb.outer ? lnbd : lb.parent;
                borders.push_back({isOuter, parent, {}});
                followBorder({x, y}, from, nbd, borders.back().points);
            }
            if (f(x, y) != 1)
                lnbd = std::abs(f(x, y));
        }
    }

    SegmentSet out;
    out.method = "fcm";
    for (std::size_t n = 2; n < borders.size(); ++n) {
        out.segments.push_back(std::move(borders[n].points));
        out.hierarchy.push_back(borders[n].parent <= 1 ? -1 : borders[n].parent - 2);
    }
    return out;
}

} // namespace edgetrace
