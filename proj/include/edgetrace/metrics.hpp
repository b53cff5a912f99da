#pragma once

#include <array>
#include <string>
#include <vector>

#include "edgetrace/baselines.hpp"
#include "edgetrace/binary_image.hpp"
#include "edgetrace/trace.hpp"

namespace edgetrace {

/// The four comparison metrics. Segment pixels are traversal entries (a
/// tracer revisiting a pixel counts it again); the assignment histogram
/// counts distinct segments per set pixel, as fractions of all set pixels.
/// All metrics are 0 for a blank image.
struct MetricsReport {
    double avgPixelsPerSegment = 0.0;
    double segmentsPerComponent = 0.0;
    double segmentPixelRatio = 0.0; // total segment pixels / total set pixels
    std::array<double, 5> assignmentHistogram{}; // assigned to 0,1,2,3,>3 segments

    // raw counts behind the ratios
    int segmentCount = 0;
    int componentCount = 0;
    long long segmentPixels = 0;
    int setPixels = 0;
};

MetricsReport computeMetrics(const BinaryImage& image, const SegmentSet& segments);

/// Trace-result metrics: edges are the segments; ambiguity points without
/// edges land in the 0-segment bin and are not segments themselves.
MetricsReport computeMetrics(const TraceResult& result);

enum class PatternLayout { Row, Square };

enum class TraceMethod { Ours, Ccl, Mnt, Fcm };

const char* traceMethodName(TraceMethod m);
TraceMethod traceMethodFromName(const std::string& name);

/// Mean wall-clock runtimes of one method over a series of cross-pattern sizes.
struct BenchmarkSeries {
    TraceMethod method = TraceMethod::Ours;
    PatternLayout layout = PatternLayout::Row;
    std::vector<int> sizes;       // requested ambiguity counts
    std::vector<int> actualSizes; // cross counts actually generated
    std::vector<double> meanMs;
    int runs = 1;
};

/// Times the algorithm call only; image generation and serialization are
/// excluded. Runs are strictly sequential.
BenchmarkSeries runBenchmark(TraceMethod method, PatternLayout layout,
                             const std::vector<int>& sizes, int runs);

/// CSV with header method,layout,n,mean_ms,runs; one row per size.
std::string benchmarkCsv(const BenchmarkSeries& series);

std::string metricsCsv(const std::string& method, const MetricsReport& report);

/// Least-squares line fit; returns R^2 (1 for a perfect fit, 0 when y does
/// not vary with x).
double linearFitR2(const std::vector<double>& x, const std::vector<double>& y);

} // namespace edgetrace
