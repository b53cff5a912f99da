#include "edgetrace/metrics.hpp"

#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "edgetrace/grid.hpp"
#include "edgetrace/patterns.hpp"

namespace edgetrace {

namespace {

MetricsReport metricsFromSegments(const BinaryImage& image,
                                  const std::vector<std::vector<Point>>& segments) {
    MetricsReport report;
    report.setPixels = image.countSetPixels();
    report.segmentCount = static_cast<int>(segments.size());
    report.componentCount = static_cast<int>(ccl(image).segments.size());

    // Distinct segments per set pixel; a segment revisiting a pixel counts once.
    Grid<int> perPixel(image.width(), image.height(), 0);
    Grid<int> stamp(image.width(), image.height(), -1);
    for (std::size_t s = 0; s < segments.size(); ++s) {
        report.segmentPixels += static_cast<long long>(segments[s].size());
        for (const Point& p : segments[s]) {
            if (!image.inBounds(p))
                throw std::invalid_argument("computeMetrics: segment point outside the image");
            if (stamp(p) != static_cast<int>(s)) {
                stamp(p) = static_cast<int>(s);
                ++perPixel(p);
            }
        }
    }

    if (report.segmentCount > 0)
        report.avgPixelsPerSegment =
            static_cast<double>(report.segmentPixels) / report.segmentCount;
    if (report.componentCount > 0)
        report.segmentsPerComponent =
            static_cast<double>(report.segmentCount) / report.componentCount;
    if (report.setPixels > 0) {
        report.segmentPixelRatio = static_cast<double>(report.segmentPixels) / report.setPixels;
        for (const Point& p : image.setPixels()) {
            const int k = perPixel(p);
            ++report.assignmentHistogram[k > 3 ? 4 : k];
        }
        for (double& bin : report.assignmentHistogram)
            bin /= report.setPixels;
    }
    return report;
}

} // namespace

MetricsReport computeMetrics(const BinaryImage& image, const SegmentSet& segments) {
    return metricsFromSegments(image, segments.segments);
}

MetricsReport computeMetrics(const TraceResult& result) {
    std::vector<std::vector<Point>> segments;
    segments.reserve(result.edges.size());
    for (const Edge& edge : result.edges)
        segments.push_back(edge.points);
    return metricsFromSegments(result.image, segments);
}

const char* traceMethodName(TraceMethod m) {
    switch (m) {
    case TraceMethod::Ours: return "ours";
    case TraceMethod::Ccl: return "ccl";
    case TraceMethod::Mnt: return "mnt";
    case TraceMethod::Fcm: return "fcm";
    }
    return "?";
}

TraceMethod traceMethodFromName(const std::string& name) {
    if (name == "ours")
        return TraceMethod::Ours;
    if (name == "ccl")
        return TraceMethod::Ccl;
    if (name == "mnt")
        return TraceMethod::Mnt;
    if (name == "fcm")
        return TraceMethod::Fcm;
    throw std::invalid_argument("unknown method: " + name);
}

BenchmarkSeries runBenchmark(TraceMethod method, PatternLayout layout,
                             const std::vector<int>& sizes, int runs) {
    if (sizes.empty())
        throw std::invalid_argument("runBenchmark: sizes must be nonempty");
    if (runs < 1)
        throw std::invalid_argument("runBenchmark: runs must be >= 1");

    BenchmarkSeries series;
    series.method = method;
    series.layout = layout;
    series.sizes = sizes;
    series.runs = runs;

    volatile long long sink = 0; // keeps the timed calls observable
    for (int n : sizes) {
        const BinaryImage image = makeCrossPattern(n, layout);
        series.actualSizes.push_back(crossPatternActualCount(n, layout));
        const auto t0 = std::chrono::steady_clock::now();
        for (int r = 0; r < runs; ++r) {
            switch (method) {
            case TraceMethod::Ours:
                sink = sink + static_cast<long long>(traceAll(image).edges.size());
                break;
            case TraceMethod::Ccl:
                sink = sink + static_cast<long long>(ccl(image).segments.size());
                break;
            case TraceMethod::Mnt:
                sink = sink + static_cast<long long>(mooreTrace(image).segments.size());
                break;
            case TraceMethod::Fcm:
                sink = sink + static_cast<long long>(borderFollowingWithHierarchy(image).segments.size());
                break;
            }
        }
        const auto t1 = std::chrono::steady_clock::now();
        const double totalMs = std::chrono::duration<double, std::milli>(t1 - t0).count();
        series.meanMs.push_back(totalMs / runs);
    }
    (void)sink;
    return series;
}

std::string benchmarkCsv(const BenchmarkSeries& series) {
    std::string csv = "method,layout,n,mean_ms,runs\n";
    char line[160];
    for (std::size_t i = 0; i < series.sizes.size(); ++i) {
        std::snprintf(line, sizeof(line), "%s,%s,%d,%.6f,%d\n", traceMethodName(series.method),
                      series.layout == PatternLayout::Row ? "row" : "square",
                      series.actualSizes[i], series.meanMs[i], series.runs);
        csv += line;
    }
    return csv;
}

std::string metricsCsv(const std::string& method, const MetricsReport& r) {
    std::string csv =
        "method,avg_pixels_per_segment,segments_per_component,segment_pixel_ratio,"
        "assigned_0,assigned_1,assigned_2,assigned_3,assigned_gt3\n";
    char line[256];
    std::snprintf(line, sizeof(line), "%s,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f\n",
                  method.c_str(), r.avgPixelsPerSegment, r.segmentsPerComponent,
                  r.segmentPixelRatio, r.assignmentHistogram[0], r.assignmentHistogram[1],
                  r.assignmentHistogram[2], r.assignmentHistogram[3], r.assignmentHistogram[4]);
    csv += line;
    return csv;
}

double linearFitR2(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n != y.size() || n < 2)
        throw std::invalid_argument("linearFitR2: need >= 2 paired samples");
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (syy == 0)
        return 1.0; // constant y is fit exactly
    if (sxx == 0)
        return 0.0;
    const double slope = sxy / sxx;
    double ssRes = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double fit = my + slope * (x[i] - mx);
        ssRes += (y[i] - fit) * (y[i] - fit);
    }
    return 1.0 - ssRes / syy;
}

} // namespace edgetrace
