#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "edgetrace/baselines.hpp"
#include "edgetrace/binary_image.hpp"
#include "edgetrace/trace.hpp"

namespace edgetrace {

/// Unreadable, corrupt or truncated input.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Readable file in a format this build does not handle.
struct UnsupportedFormatError : InputError {
    using InputError::InputError;
};

/// Bad flags, pipeline specs or parameter values.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Loads a PBM (P1/P4) or PGM (P2/P5) file. PBM set bits map to 1; PGM
/// pixels at or above the threshold map to 1.
BinaryImage loadBinaryImage(const std::string& path, int threshold = 128);

/// Writes binary PBM (P4).
void saveBinaryImage(const BinaryImage& image, const std::string& path);

/// Serializes a result as the version-1 trace document: image meta, edges
/// sorted by id with points in trace order and optional terminal ambiguity
/// ids, ambiguities with their connected edge ids. Deterministic bytes.
std::string traceDocumentString(const TraceResult& result, const std::string& sourcePath);
void exportTraceDocument(const TraceResult& result, const std::string& path,
                         const std::string& sourcePath);

/// Same document shape for a baseline's segments (no ambiguities).
std::string segmentDocumentString(const SegmentSet& segments, int width, int height,
                                  const std::string& sourcePath);

/// Parses a trace document back into a result; the working image is the
/// union of all recorded points. Round-trips with traceDocumentString.
/// sourceOut, when given, receives the document's recorded source path.
TraceResult parseTraceDocument(const std::string& path, std::string* sourceOut = nullptr);
TraceResult parseTraceDocumentString(const std::string& text, std::string* sourceOut = nullptr);

struct RenderStyle {
    int scale = 1;
    unsigned seed = 0; // palette rotation only
    std::array<std::uint8_t, 3> ambiguityColor = {255, 255, 255};
};

/// PPM (P6) overlay: one hue per edge, ambiguity points and pixels shared by
/// several edges in the highlight color, background black.
void renderOverlay(const TraceResult& result, const RenderStyle& style, const std::string& path);

/// PPM overlay for baseline segments (no highlight layer).
void renderSegments(const SegmentSet& segments, int width, int height, const RenderStyle& style,
                    const std::string& path);

} // namespace edgetrace
