#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "edgetrace/io.hpp"
#include "edgetrace/metrics.hpp"
#include "edgetrace/patterns.hpp"
#include "edgetrace/pipeline.hpp"
#include "edgetrace/postprocess.hpp"
#include "edgetrace/trace.hpp"

namespace {

using namespace edgetrace;

struct GlobalOptions {
    int threshold = 128;
    unsigned seed = 0;
    bool quiet = false;
};

void say(const GlobalOptions& global, const std::string& message) {
    if (!global.quiet)
        std::printf("%s\n", message.c_str());
}

bool looksLikeDocument(const std::string& path) {
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0)
        return true;
    return false;
}

std::string describe(const TraceResult& result) {
    int spa = 0;
    for (const Ambiguity& a : result.ambiguities.all())
        if (a.points.size() == 1)
            ++spa;
    return std::to_string(result.edges.size()) + " edges, " +
           std::to_string(result.ambiguities.size()) + " ambiguities (" + std::to_string(spa) +
           " single-pixel), " + std::to_string(result.image.countSetPixels()) + " set pixels";
}

int runTrace(const GlobalOptions& global, const std::string& input, const std::string& outDoc,
             const std::string& renderPath, const std::string& methodName, int scale) {
    const TraceMethod method = traceMethodFromName(methodName);
    const BinaryImage image = loadBinaryImage(input, global.threshold);
    const RenderStyle style{scale, global.seed, {255, 255, 255}};
    if (method == TraceMethod::Ours) {
        const TraceResult result = traceAll(image);
        say(global, describe(result));
        if (!outDoc.empty())
            exportTraceDocument(result, outDoc, input);
        if (!renderPath.empty())
            renderOverlay(result, style, renderPath);
        return 0;
    }
    SegmentSet segments;
    switch (method) {
    case TraceMethod::Ccl: segments = ccl(image); break;
    case TraceMethod::Mnt: segments = mooreTrace(image); break;
    default: segments = borderFollowingWithHierarchy(image); break;
    }
    say(global, segments.method + ": " + std::to_string(segments.segments.size()) + " segments");
    if (!outDoc.empty()) {
        std::ofstream out(outDoc, std::ios::binary | std::ios::trunc);
        if (!out)
            throw InputError("cannot open '" + outDoc + "' for writing");
        out << segmentDocumentString(segments, image.width(), image.height(), input);
    }
    if (!renderPath.empty())
        renderSegments(segments, image.width(), image.height(), style, renderPath);
    return 0;
}

int runPost(const GlobalOptions& global, const std::string& input, const std::string& ops,
            const std::string& outDoc, const std::string& renderPath, int scale) {
    const std::vector<PostStep> steps = parsePipeline(ops);
    std::string source = input;
    TraceResult result;
    if (looksLikeDocument(input)) {
        std::string recorded;
        result = parseTraceDocument(input, &recorded);
        if (!recorded.empty())
            source = recorded; // keep the original image as the document source
    } else {
        result = traceAll(loadBinaryImage(input, global.threshold));
    }
    result = runPipeline(result, steps);
    say(global, describe(result));
    if (!outDoc.empty())
        exportTraceDocument(result, outDoc, source);
    if (!renderPath.empty())
        renderOverlay(result, {scale, global.seed, {255, 255, 255}}, renderPath);
    return 0;
}

int runMetrics(const GlobalOptions& global, const std::string& input,
               const std::string& methodName, const std::string& csvPath) {
    const TraceMethod method = traceMethodFromName(methodName);
    const BinaryImage image = loadBinaryImage(input, global.threshold);
    MetricsReport report;
    switch (method) {
    case TraceMethod::Ours: report = computeMetrics(traceAll(image)); break;
    case TraceMethod::Ccl: report = computeMetrics(image, ccl(image)); break;
    case TraceMethod::Mnt: report = computeMetrics(image, mooreTrace(image)); break;
    case TraceMethod::Fcm: report = computeMetrics(image, borderFollowingWithHierarchy(image)); break;
    }
    if (!global.quiet) {
        std::printf("method: %s\n", methodName.c_str());
        std::printf("segments: %d  components: %d  segment pixels: %lld  set pixels: %d\n",
                    report.segmentCount, report.componentCount, report.segmentPixels,
                    report.setPixels);
        std::printf("avg pixels/segment:     %.4f\n", report.avgPixelsPerSegment);
        std::printf("segments/component:     %.4f\n", report.segmentsPerComponent);
        std::printf("segment/edge px ratio:  %.4f\n", report.segmentPixelRatio);
        std::printf("pixel assignment (%%):   0:%.2f  1:%.2f  2:%.2f  3:%.2f  >3:%.2f\n",
                    100 * report.assignmentHistogram[0], 100 * report.assignmentHistogram[1],
                    100 * report.assignmentHistogram[2], 100 * report.assignmentHistogram[3],
                    100 * report.assignmentHistogram[4]);
    }
    if (!csvPath.empty()) {
        std::ofstream out(csvPath, std::ios::binary | std::ios::trunc);
        if (!out)
            throw InputError("cannot open '" + csvPath + "' for writing");
        out << metricsCsv(methodName, report);
    }
    (void)global;
    return 0;
}

int runBench(const GlobalOptions& global, const std::string& layoutName,
             const std::vector<int>& sizes, int runs, const std::string& methodName,
             const std::string& csvPath) {
    PatternLayout layout;
    if (layoutName == "row")
        layout = PatternLayout::Row;
    else if (layoutName == "square")
        layout = PatternLayout::Square;
    else
        throw UsageError("bench: layout must be row or square");
    const BenchmarkSeries series =
        runBenchmark(traceMethodFromName(methodName), layout, sizes, runs);
    const std::string csv = benchmarkCsv(series);
    if (!global.quiet)
        std::fputs(csv.c_str(), stdout);
    if (!csvPath.empty()) {
        std::ofstream out(csvPath, std::ios::binary | std::ios::trunc);
        if (!out)
            throw InputError("cannot open '" + csvPath + "' for writing");
        out << csv;
    }
    return 0;
}

int runGenerate(const GlobalOptions& global, const std::string& pattern, int n,
                const std::string& outPath) {
    BinaryImage image;
    if (pattern == "cross-row")
        image = makeCrossPattern(n > 0 ? n : 1, PatternLayout::Row);
    else if (pattern == "cross-square")
        image = makeCrossPattern(n > 0 ? n : 1, PatternLayout::Square);
    else if (pattern == "ring")
        image = makeRing(n > 0 ? n : 8);
    else if (pattern == "t-junction")
        image = makeTJunction(n > 0 ? n : 4);
    else if (pattern == "x-junction")
        image = makeXJunction(n > 0 ? n : 4);
    else
        throw UsageError("generate: unknown pattern '" + pattern + "'");
    saveBinaryImage(image, outPath);
    say(global, "wrote " + std::to_string(image.width()) + "x" + std::to_string(image.height()) +
                    " image with " + std::to_string(image.countSetPixels()) + " set pixels to " +
                    outPath);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"edgetrace: ambiguity-aware edge tracing for binary edge images"};
    app.require_subcommand(1);
    app.fallthrough(true);

    GlobalOptions global;
    app.add_option("--threshold", global.threshold, "gray threshold for PGM input (default 128)")
        ->check(CLI::Range(0, 255));
    app.add_option("--seed", global.seed, "palette seed for renders");
    app.add_flag("--quiet", global.quiet, "suppress informational output");

    std::string input, outDoc, renderPath, methodName = "ours", ops, csvPath;
    std::string layoutName, pattern;
    std::vector<int> sizes;
    int runs = 1000, scale = 1, n = 0;

    CLI::App* traceCmd = app.add_subcommand("trace", "decompose an image into edges + ambiguities");
    traceCmd->add_option("input", input, "binary edge image (PBM/PGM)")->required();
    traceCmd->add_option("--out", outDoc, "write the trace document (JSON)");
    traceCmd->add_option("--render", renderPath, "write a colored overlay (PPM)");
    traceCmd->add_option("--method", methodName, "ours|ccl|mnt|fcm (default ours)");
    traceCmd->add_option("--scale", scale, "render magnification")->check(CLI::PositiveNumber);

    CLI::App* postCmd = app.add_subcommand("post", "run postprocessing steps on a trace");
    postCmd->add_option("input", input, "trace document (.json) or image")->required();
    postCmd->add_option("--ops", ops, "pipeline, e.g. 'remove:dangling,<30,x2; connect:'")
        ->required();
    postCmd->add_option("--out", outDoc, "write the resulting trace document");
    postCmd->add_option("--render", renderPath, "write a colored overlay (PPM)");
    postCmd->add_option("--scale", scale, "render magnification")->check(CLI::PositiveNumber);

    CLI::App* metricsCmd = app.add_subcommand("metrics", "comparison metrics for one method");
    metricsCmd->add_option("input", input, "binary edge image (PBM/PGM)")->required();
    metricsCmd->add_option("--method", methodName, "ours|ccl|mnt|fcm (default ours)");
    metricsCmd->add_option("--csv", csvPath, "write metrics CSV");

    CLI::App* benchCmd = app.add_subcommand("bench", "runtime scaling on cross patterns");
    benchCmd->add_option("--layout", layoutName, "row|square")->required();
    benchCmd->add_option("--sizes", sizes, "ambiguity counts, e.g. 10,20,40")
        ->required()
        ->delimiter(',');
    benchCmd->add_option("--runs", runs, "repetitions per size (default 1000)")
        ->check(CLI::PositiveNumber);
    benchCmd->add_option("--method", methodName, "ours|ccl|mnt|fcm (default ours)");
    benchCmd->add_option("--csv", csvPath, "write benchmark CSV");

    CLI::App* generateCmd = app.add_subcommand("generate", "write a synthetic test pattern");
    generateCmd
        ->add_option("--pattern", pattern, "cross-row|cross-square|ring|t-junction|x-junction")
        ->required();
    generateCmd->add_option("--n", n, "cross count or size parameter");
    generateCmd->add_option("--out", outDoc, "output PBM path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (traceCmd->parsed())
            return runTrace(global, input, outDoc, renderPath, methodName, scale);
        if (postCmd->parsed())
            return runPost(global, input, ops, outDoc, renderPath, scale);
        if (metricsCmd->parsed())
            return runMetrics(global, input, methodName, csvPath);
        if (benchCmd->parsed())
            return runBench(global, layoutName, sizes, runs, methodName, csvPath);
        if (generateCmd->parsed())
            return runGenerate(global, pattern, n, outDoc);
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const InputError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
