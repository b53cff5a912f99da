#include <doctest.h>

#include <random>

#include "edgetrace/metrics.hpp"
#include "edgetrace/patterns.hpp"
#include "fixtures.hpp"

using namespace edgetrace;

TEST_CASE("metrics on the circle-plus-chord fixture") {
    // hand-traced golden values: 3 edges of 11+7+11 points over 25 set pixels,
    // both junction pixels shared by all three edges
    const TraceResult result = traceAll(fixtures::circleChord());
    const MetricsReport report = computeMetrics(result);
    CHECK(report.segmentCount == 3);
    CHECK(report.componentCount == 1);
    CHECK(report.segmentPixels == 29);
    CHECK(report.setPixels == 25);
    CHECK(report.avgPixelsPerSegment == doctest::Approx(29.0 / 3.0));
    CHECK(report.segmentsPerComponent == doctest::Approx(3.0));
    CHECK(report.segmentPixelRatio == doctest::Approx(29.0 / 25.0));
    CHECK(report.assignmentHistogram[0] == doctest::Approx(0.0));
    CHECK(report.assignmentHistogram[1] == doctest::Approx(23.0 / 25.0));
    CHECK(report.assignmentHistogram[2] == doctest::Approx(0.0));
    CHECK(report.assignmentHistogram[3] == doctest::Approx(2.0 / 25.0));
}

TEST_CASE("ccl metrics are exactly one across the corpus") {
    for (const BinaryImage& image : fixtures::corpus()) {
        const MetricsReport report = computeMetrics(image, ccl(image));
        CHECK(report.segmentPixelRatio == 1.0);
        CHECK(report.segmentsPerComponent == 1.0);
        CHECK(report.assignmentHistogram[1] == 1.0);
        CHECK(report.avgPixelsPerSegment * report.segmentCount ==
              doctest::Approx(report.setPixels));
    }
}

TEST_CASE("blank image metrics are all zero") {
    const BinaryImage blank(10, 10);
    const MetricsReport report = computeMetrics(blank, ccl(blank));
    CHECK(report.avgPixelsPerSegment == 0.0);
    CHECK(report.segmentsPerComponent == 0.0);
    CHECK(report.segmentPixelRatio == 0.0);
    for (double bin : report.assignmentHistogram)
        CHECK(bin == 0.0);
}

TEST_CASE("assignment histogram sums to one on nonempty images, all methods") {
    std::mt19937 rng(31);
    std::vector<BinaryImage> images = fixtures::corpus();
    images.push_back(fixtures::randomImage(40, 40, 0.3, rng));
    for (const BinaryImage& image : images) {
        const std::vector<MetricsReport> reports = {
            computeMetrics(traceAll(image)),
            computeMetrics(image, ccl(image)),
            computeMetrics(image, mooreTrace(image)),
            computeMetrics(image, borderFollowingWithHierarchy(image)),
        };
        for (const MetricsReport& report : reports) {
            double sum = 0;
            for (double bin : report.assignmentHistogram)
                sum += bin;
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("ambiguity-only pixels land in histogram bin zero") {
    const MetricsReport report = computeMetrics(traceAll(fixtures::block2x2()));
    CHECK(report.segmentCount == 0);
    CHECK(report.assignmentHistogram[0] == doctest::Approx(1.0));
}

TEST_CASE("cross pattern: one plus, one ambiguity, four edges") {
    const BinaryImage image = makeCrossPattern(1, PatternLayout::Row);
    CHECK(image.countSetPixels() == 9);
    const TraceResult result = traceAll(image);
    CHECK(result.ambiguities.size() == 1);
    CHECK(result.edges.size() == 4);
}

TEST_CASE("row layout: exactly n ambiguities, width grows linearly") {
    for (int n : {2, 5, 9}) {
        const BinaryImage image = makeCrossPattern(n, PatternLayout::Row);
        CHECK(image.width() == 4 * n + 1);
        const TraceResult result = traceAll(image);
        CHECK(result.ambiguities.size() == n);
        CHECK(result.edges.size() == 3 * n + 1);
        for (const Ambiguity& amb : result.ambiguities.all())
            CHECK(amb.points.size() == 1);
    }
}

TEST_CASE("square layout rounds up to a full grid") {
    CHECK(crossPatternActualCount(5, PatternLayout::Square) == 9);
    const BinaryImage image = makeCrossPattern(5, PatternLayout::Square);
    const TraceResult result = traceAll(image);
    CHECK(result.ambiguities.size() == 9);
}

TEST_CASE("benchmark smoke run and CSV format") {
    const BenchmarkSeries series = runBenchmark(TraceMethod::Ours, PatternLayout::Row, {1, 2}, 1);
    REQUIRE(series.meanMs.size() == 2);
    CHECK(series.meanMs[0] >= 0.0);
    CHECK(series.actualSizes == std::vector<int>{1, 2});

    const std::string csv = benchmarkCsv(series);
    CHECK(csv.rfind("method,layout,n,mean_ms,runs\n", 0) == 0);
    CHECK(csv.find("ours,row,1,") != std::string::npos);
    CHECK(csv.find("ours,row,2,") != std::string::npos);
}

TEST_CASE("metrics CSV is deterministic and well-formed") {
    const MetricsReport report = computeMetrics(traceAll(fixtures::tJunction()));
    const std::string a = metricsCsv("ours", report);
    const std::string b = metricsCsv("ours", report);
    CHECK(a == b);
    CHECK(a.rfind("method,avg_pixels_per_segment,", 0) == 0);
    CHECK(a.find("\nours,3.000000,3.000000,") != std::string::npos);
}

TEST_CASE("linear fit R^2") {
    CHECK(linearFitR2({1, 2, 3, 4}, {2, 4, 6, 8}) == doctest::Approx(1.0));
    CHECK(linearFitR2({1, 2, 3, 4}, {5, 5, 5, 5}) == doctest::Approx(1.0));
    CHECK(linearFitR2({1, 2, 3, 4}, {1, -1, 1, -1}) < 0.5);
    CHECK_THROWS_AS(linearFitR2({1}, {1}), std::invalid_argument);
}

TEST_CASE("mismatched segments are rejected") {
    const BinaryImage small(4, 4);
    SegmentSet segments;
    segments.segments.push_back({{10, 10}});
    CHECK_THROWS_AS(computeMetrics(small, segments), std::invalid_argument);
}

TEST_CASE("doubling the cross count roughly doubles the runtime") {
    const BenchmarkSeries series =
        runBenchmark(TraceMethod::Ours, PatternLayout::Row, {100, 200}, 1500);
    const double ratio = series.meanMs[1] / series.meanMs[0];
    CHECK(ratio >= 1.5);
    CHECK(ratio <= 3.0);
}

TEST_CASE("our redundancy stays at or below border following on junction fixtures") {
    // holds on contour-like figures; a figure dominated by 2-px arms can
    // invert it because every junction pixel counts once per meeting edge
    const std::vector<BinaryImage> images = {
        fixtures::tJunction(),   fixtures::plusSign(),    fixtures::xJunctionDiagonal(),
        fixtures::yJunction(),   fixtures::circleChord(), fixtures::nestedRings(),
        fixtures::threeArmRing(), fixtures::cascadeTree(), fixtures::blobWithArms(),
        makeCrossPattern(4, PatternLayout::Row), makeCrossPattern(9, PatternLayout::Square)};
    for (const BinaryImage& image : images) {
        const double ours = computeMetrics(traceAll(image)).segmentPixelRatio;
        const double fcm =
            computeMetrics(image, borderFollowingWithHierarchy(image)).segmentPixelRatio;
        CHECK(ours <= fcm);
    }
}

TEST_CASE("histogram decomposition: bin 0 is untraced ambiguity points, bins >=2 are shared") {
    std::mt19937 rng(77);
    std::vector<BinaryImage> images = fixtures::corpus();
    for (int i = 0; i < 15; ++i)
        images.push_back(fixtures::randomImage(40, 40, 0.3, rng));
    for (const BinaryImage& image : images) {
        const int setPixels = image.countSetPixels();
        if (setPixels == 0)
            continue;
        const TraceResult result = traceAll(image);
        const MetricsReport report = computeMetrics(result);
        int untracedAmbiguityPoints = 0;
        for (const Ambiguity& amb : result.ambiguities.all())
            for (const Point& p : amb.points)
                if (result.edgeIdMap(p).empty())
                    ++untracedAmbiguityPoints;
        CHECK(report.assignmentHistogram[0] ==
              doctest::Approx(static_cast<double>(untracedAmbiguityPoints) / setPixels));
        for (const Point& p : image.setPixels())
            if (result.edgeIdMap(p).size() >= 2)
                CHECK(result.ambiguities.contains(p));
    }
}
