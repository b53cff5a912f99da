#include "edgetrace/io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace edgetrace {

namespace {

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in.good() && !in.eof())
        throw InputError("read failure on '" + path + "'");
    return buf.str();
}

void writeFile(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw InputError("cannot open '" + path + "' for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out.good())
        throw InputError("write failure on '" + path + "'");
}

/// Token reader over netpbm headers/plain bodies; '#' starts a comment.
class PnmTokens {
public:
    PnmTokens(const std::string& bytes, std::size_t pos, const std::string& path)
        : bytes_(bytes), pos_(pos), path_(path) {}

    int nextInt() {
        skipSpaceAndComments();
        if (pos_ >= bytes_.size() || !std::isdigit(static_cast<unsigned char>(bytes_[pos_])))
            throw InputError("corrupt netpbm header/body in '" + path_ + "'");
        long value = 0;
        while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
            value = value * 10 + (bytes_[pos_] - '0');
            if (value > 1 << 30)
                throw InputError("absurd numeric value in '" + path_ + "'");
            ++pos_;
        }
        return static_cast<int>(value);
    }

    /// PBM plain bits may be packed without whitespace.
    int nextBit() {
        skipSpaceAndComments();
        if (pos_ >= bytes_.size() || (bytes_[pos_] != '0' && bytes_[pos_] != '1'))
            throw InputError("corrupt plain PBM data in '" + path_ + "'");
        return bytes_[pos_++] - '0';
    }

    std::size_t pos() const { return pos_; }

    void skipSingleWhitespace() {
        if (pos_ < bytes_.size() && std::isspace(static_cast<unsigned char>(bytes_[pos_])))
            ++pos_;
    }

private:
    void skipSpaceAndComments() {
        while (pos_ < bytes_.size()) {
            const char c = bytes_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n')
                    ++pos_;
            } else {
                break;
            }
        }
    }

    const std::string& bytes_;
    std::size_t pos_;
    std::string path_;
};

} // namespace

BinaryImage loadBinaryImage(const std::string& path, int threshold) {
    const std::string bytes = readFile(path);
    if (bytes.size() < 2 || bytes[0] != 'P')
        throw UnsupportedFormatError("'" + path + "' is not a netpbm file (PBM/PGM expected)");
    const char kind = bytes[1];
    if (kind == '3' || kind == '6')
        throw UnsupportedFormatError("'" + path + "': PPM input is not supported, use PBM or PGM");
    if (kind < '1' || kind > '6')
        throw UnsupportedFormatError("'" + path + "': unknown netpbm variant P" +
                                     std::string(1, kind));

    PnmTokens tokens(bytes, 2, path);
    const int width = tokens.nextInt();
    const int height = tokens.nextInt();
    if (width <= 0 || height <= 0)
        throw InputError("'" + path + "': invalid dimensions");

    BinaryImage image(width, height);
    if (kind == '1') {
        for (int y = 0; y < height; ++y)
            for (int x = 0; x < width; ++x)
                if (tokens.nextBit()) // PBM: 1 is ink
                    image.set({x, y});
        return image;
    }
    if (kind == '2' || kind == '5') {
        const int maxval = tokens.nextInt();
        if (maxval <= 0)
            throw InputError("'" + path + "': invalid maxval");
        if (maxval > 255)
            throw UnsupportedFormatError("'" + path + "': 16-bit PGM is not supported");
        if (kind == '2') {
            for (int y = 0; y < height; ++y)
                for (int x = 0; x < width; ++x)
                    if (tokens.nextInt() >= threshold)
                        image.set({x, y});
            return image;
        }
        tokens.skipSingleWhitespace();
        const std::size_t need = static_cast<std::size_t>(width) * height;
        if (bytes.size() - tokens.pos() < need)
            throw InputError("'" + path + "': truncated P5 pixel data");
        const unsigned char* data =
            reinterpret_cast<const unsigned char*>(bytes.data()) + tokens.pos();
        for (int y = 0; y < height; ++y)
            for (int x = 0; x < width; ++x)
                if (data[static_cast<std::size_t>(y) * width + x] >= threshold)
                    image.set({x, y});
        return image;
    }
    // P4: packed bits, rows padded to whole bytes
    tokens.skipSingleWhitespace();
    const std::size_t rowBytes = (static_cast<std::size_t>(width) + 7) / 8;
    if (bytes.size() - tokens.pos() < rowBytes * height)
        throw InputError("'" + path + "': truncated P4 pixel data");
    const unsigned char* data = reinterpret_cast<const unsigned char*>(bytes.data()) + tokens.pos();
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x)
            if (data[y * rowBytes + x / 8] & (0x80u >> (x % 8)))
                image.set({x, y});
    return image;
}

void saveBinaryImage(const BinaryImage& image, const std::string& path) {
    std::string bytes = "P4\n" + std::to_string(image.width()) + " " +
                        std::to_string(image.height()) + "\n";
    const std::size_t rowBytes = (static_cast<std::size_t>(image.width()) + 7) / 8;
    std::string data(rowBytes * image.height(), '\0');
    for (int y = 0; y < image.height(); ++y)
        for (int x = 0; x < image.width(); ++x)
            if (image.at(x, y))
                data[y * rowBytes + x / 8] |= static_cast<char>(0x80u >> (x % 8));
    writeFile(path, bytes + data);
}

namespace {

using Json = nlohmann::ordered_json;

Json pointsJson(const std::vector<Point>& points) {
    Json arr = Json::array();
    for (const Point& p : points)
        arr.push_back(Json::array({p.x, p.y}));
    return arr;
}

std::vector<Point> pointsFromJson(const Json& arr) {
    std::vector<Point> points;
    points.reserve(arr.size());
    for (const auto& pj : arr)
        points.push_back({pj.at(0).get<int>(), pj.at(1).get<int>()});
    return points;
}

Json documentJson(const TraceResult& result, const std::string& sourcePath) {
    Json doc;
    doc["version"] = 1;
    doc["image"] = {{"width", result.image.width()},
                    {"height", result.image.height()},
                    {"source", sourcePath},
                    {"setPixels", result.image.countSetPixels()}};
    Json edges = Json::array();
    for (EdgeId id = 0; id < static_cast<EdgeId>(result.edges.size()); ++id) {
        const Edge& edge = result.edges[id];
        Json e;
        e["id"] = id;
        e["points"] = pointsJson(edge.points);
        if (!edge.points.empty()) {
            const int startAmb = result.ambiguities.idAt(edge.front());
            const int endAmb = result.ambiguities.idAt(edge.back());
            if (startAmb >= 0)
                e["startAmbiguityId"] = startAmb;
            if (endAmb >= 0)
                e["endAmbiguityId"] = endAmb;
        }
        edges.push_back(std::move(e));
    }
    doc["edges"] = std::move(edges);
    Json ambiguities = Json::array();
    for (const Ambiguity& amb : result.ambiguities.all()) {
        Json a;
        a["id"] = amb.id;
        a["points"] = pointsJson(amb.points);
        Json connected = Json::array();
        for (EdgeId id = 0; id < static_cast<EdgeId>(result.edges.size()); ++id) {
            const Edge& edge = result.edges[id];
            if (edge.points.empty())
                continue;
            if (result.ambiguities.idAt(edge.front()) == amb.id ||
                result.ambiguities.idAt(edge.back()) == amb.id)
                connected.push_back(id);
        }
        a["connectedEdgeIds"] = std::move(connected);
        ambiguities.push_back(std::move(a));
    }
    doc["ambiguities"] = std::move(ambiguities);
    return doc;
}

} // namespace

std::string traceDocumentString(const TraceResult& result, const std::string& sourcePath) {
    return documentJson(result, sourcePath).dump(2) + "\n";
}

void exportTraceDocument(const TraceResult& result, const std::string& path,
                         const std::string& sourcePath) {
    writeFile(path, traceDocumentString(result, sourcePath));
}

std::string segmentDocumentString(const SegmentSet& segments, int width, int height,
                                  const std::string& sourcePath) {
    TraceResult result;
    result.image = BinaryImage(width, height);
    for (const auto& seg : segments.segments) {
        result.edges.push_back({seg});
        for (const Point& p : seg)
            result.image.set(p);
    }
    result.ambiguities = AmbiguityRegistry(width, height);
    result.edgeIdMap = buildEdgeIdMap(width, height, result.edges);
    return traceDocumentString(result, sourcePath);
}

TraceResult parseTraceDocumentString(const std::string& text, std::string* sourceOut) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const std::exception& e) {
        throw InputError(std::string("trace document is not valid JSON: ") + e.what());
    }
    try {
        if (doc.at("version").get<int>() != 1)
            throw InputError("unsupported trace document version");
        const int width = doc.at("image").at("width").get<int>();
        const int height = doc.at("image").at("height").get<int>();
        if (sourceOut != nullptr)
            *sourceOut = doc.at("image").value("source", std::string());
        TraceResult result;
        result.image = BinaryImage(width, height);
        result.ambiguities = AmbiguityRegistry(width, height);
        for (const auto& ej : doc.at("edges")) {
            Edge edge{pointsFromJson(ej.at("points"))};
            for (const Point& p : edge.points) {
                if (!result.image.inBounds(p))
                    throw InputError("trace document point outside image bounds");
                result.image.set(p);
            }
            result.edges.push_back(std::move(edge));
        }
        for (const auto& aj : doc.at("ambiguities")) {
            std::vector<Point> points = pointsFromJson(aj.at("points"));
            for (const Point& p : points) {
                if (!result.image.inBounds(p))
                    throw InputError("trace document point outside image bounds");
                result.image.set(p);
            }
            result.ambiguities.add(std::move(points));
        }
        result.edgeIdMap = buildEdgeIdMap(width, height, result.edges);
        return result;
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed trace document: ") + e.what());
    }
}

TraceResult parseTraceDocument(const std::string& path, std::string* sourceOut) {
    return parseTraceDocumentString(readFile(path), sourceOut);
}

namespace {

std::array<std::uint8_t, 3> hsvToRgb(double h, double s, double v) {
    const double c = v * s;
    const double hh = h * 6.0;
    const double x = c * (1.0 - std::fabs(std::fmod(hh, 2.0) - 1.0));
    double r = 0, g = 0, b = 0;
    switch (static_cast<int>(hh) % 6) {
    case 0: r = c; g = x; break;
    case 1: r = x; g = c; break;
    case 2: g = c; b = x; break;
    case 3: g = x; b = c; break;
    case 4: r = x; b = c; break;
    default: r = c; b = x; break;
    }
    const double m = v - c;
    return {static_cast<std::uint8_t>((r + m) * 255.0 + 0.5),
            static_cast<std::uint8_t>((g + m) * 255.0 + 0.5),
            static_cast<std::uint8_t>((b + m) * 255.0 + 0.5)};
}

std::array<std::uint8_t, 3> paletteColor(int id, unsigned seed) {
    // Golden-ratio hue stepping keeps adjacent ids far apart on the wheel.
    const double offset = (seed % 997u) / 997.0;
    const double hue = std::fmod(offset + id * 0.6180339887498949, 1.0);
    return hsvToRgb(hue, 0.85, 1.0);
}

void writePpm(const Grid<std::array<std::uint8_t, 3>>& pixels, int scale, const std::string& path) {
    const int w = pixels.width() * scale;
    const int h = pixels.height() * scale;
    std::string bytes = "P6\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
    bytes.reserve(bytes.size() + static_cast<std::size_t>(w) * h * 3);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const auto& rgb = pixels(x / scale, y / scale);
            bytes.push_back(static_cast<char>(rgb[0]));
            bytes.push_back(static_cast<char>(rgb[1]));
            bytes.push_back(static_cast<char>(rgb[2]));
        }
    }
    writeFile(path, bytes);
}

} // namespace

void renderOverlay(const TraceResult& result, const RenderStyle& style, const std::string& path) {
    if (style.scale < 1)
        throw UsageError("render scale must be >= 1");
    Grid<std::array<std::uint8_t, 3>> pixels(result.image.width(), result.image.height(),
                                             {0, 0, 0});
    for (EdgeId id = 0; id < static_cast<EdgeId>(result.edges.size()); ++id) {
        const auto rgb = paletteColor(id, style.seed);
        for (const Point& p : result.edges[id].points)
            if (pixels.inBounds(p))
                pixels(p) = rgb;
    }
    // Ambiguities and shared pixels on top.
    for (int y = 0; y < result.image.height(); ++y)
        for (int x = 0; x < result.image.width(); ++x)
            if (result.edgeIdMap(x, y).size() > 1)
                pixels(x, y) = style.ambiguityColor;
    for (const Ambiguity& amb : result.ambiguities.all())
        for (const Point& p : amb.points)
            if (pixels.inBounds(p))
                pixels(p) = style.ambiguityColor;
    writePpm(pixels, style.scale, path);
}

void renderSegments(const SegmentSet& segments, int width, int height, const RenderStyle& style,
                    const std::string& path) {
    if (style.scale < 1)
        throw UsageError("render scale must be >= 1");
    Grid<std::array<std::uint8_t, 3>> pixels(width, height, {0, 0, 0});
    for (std::size_t id = 0; id < segments.segments.size(); ++id) {
        const auto rgb = paletteColor(static_cast<int>(id), style.seed);
        for (const Point& p : segments.segments[id])
            if (pixels.inBounds(p))
                pixels(p) = rgb;
    }
    writePpm(pixels, style.scale, path);
}

} // namespace edgetrace
