#include "edgetrace/pipeline.hpp"

#include <algorithm>
#include <cctype>

#include "edgetrace/io.hpp"

namespace edgetrace {

namespace {

std::string trimmed(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

std::vector<std::string> splitList(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t end = s.find(sep, start);
        if (end == std::string::npos) {
            parts.push_back(trimmed(s.substr(start)));
            break;
        }
        parts.push_back(trimmed(s.substr(start, end - start)));
        start = end + 1;
    }
    return parts;
}

int parseInt(const std::string& token, const std::string& context) {
    try {
        std::size_t used = 0;
        const int value = std::stoi(token, &used);
        if (used != token.size())
            throw UsageError("");
        return value;
    } catch (const std::exception&) {
        throw UsageError("pipeline: expected an integer in '" + context + "', got '" + token + "'");
    }
}

double parseDouble(const std::string& token, const std::string& context) {
    try {
        std::size_t used = 0;
        const double value = std::stod(token, &used);
        if (used != token.size())
            throw UsageError("");
        return value;
    } catch (const std::exception&) {
        throw UsageError("pipeline: expected a number in '" + context + "', got '" + token + "'");
    }
}

PostStep parseRemove(const std::string& args, const std::string& stepText) {
    PostStep step;
    step.kind = PostStep::Kind::Remove;
    const std::vector<std::string> parts = splitList(args, ',');
    if (parts.empty() || parts[0].empty())
        throw UsageError("pipeline: remove needs a class in '" + stepText + "'");
    const std::string& cls = parts[0];
    if (cls == "free")
        step.classFilter = EdgeClass::Free;
    else if (cls == "dangling")
        step.classFilter = EdgeClass::Dangling;
    else if (cls == "bridged")
        step.classFilter = EdgeClass::Bridged;
    else if (cls == "any")
        step.classFilter = std::nullopt;
    else
        throw UsageError("pipeline: unknown edge class '" + cls + "' in '" + stepText + "'");
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const std::string& tok = parts[i];
        if (tok.empty())
            throw UsageError("pipeline: empty token in '" + stepText + "'");
        if (tok[0] == '<')
            step.length.shorterThan = parseInt(tok.substr(1), stepText);
        else if (tok[0] == '>')
            step.length.longerThan = parseInt(tok.substr(1), stepText);
        else if (tok == "xfix") {
            step.iterate = true;
            step.rounds = std::nullopt;
        } else if (tok[0] == 'x') {
            step.iterate = true;
            step.rounds = parseInt(tok.substr(1), stepText);
        }
        else
            throw UsageError("pipeline: unknown remove option '" + tok + "' in '" + stepText + "'");
    }
    if (step.rounds && *step.rounds < 1)
        throw UsageError("pipeline: repeat count must be >= 1 in '" + stepText + "'");
    return step;
}

PostStep parseConnect(const std::string& args, const std::string& stepText) {
    PostStep step;
    step.kind = PostStep::Kind::Connect;
    if (trimmed(args).empty())
        return step;
    for (const std::string& tok : splitList(args, ',')) {
        const std::size_t eq = tok.find('=');
        if (eq == std::string::npos)
            throw UsageError("pipeline: expected key=value in '" + stepText + "', got '" + tok + "'");
        const std::string key = trimmed(tok.substr(0, eq));
        const std::string value = trimmed(tok.substr(eq + 1));
        if (key == "aw")
            step.params.angleWeight = parseDouble(value, stepText);
        else if (key == "dw")
            step.params.distanceWeight = parseDouble(value, stepText);
        else if (key == "th")
            step.params.costThreshold = parseDouble(value, stepText);
        else if (key == "n")
            step.params.fitLength = parseInt(value, stepText);
        else
            throw UsageError("pipeline: unknown connect key '" + key + "' in '" + stepText + "'");
    }
    if (step.params.fitLength < 2)
        throw UsageError("pipeline: connect fit length must be >= 2 in '" + stepText + "'");
    return step;
}

} // namespace

std::vector<PostStep> parsePipeline(const std::string& spec) {
    std::vector<PostStep> steps;
    for (const std::string& stepText : splitList(spec, ';')) {
        if (stepText.empty())
            continue;
        const std::size_t colon = stepText.find(':');
        const std::string name = trimmed(stepText.substr(0, colon));
        const std::string args =
            colon == std::string::npos ? std::string() : stepText.substr(colon + 1);
        if (name == "remove") {
            steps.push_back(parseRemove(args, stepText));
        } else if (name == "merge-amb") {
            PostStep step;
            step.kind = PostStep::Kind::MergeAmbiguities;
            step.maxConnectorLen = parseInt(trimmed(args), stepText);
            if (step.maxConnectorLen < 0)
                throw UsageError("pipeline: merge-amb length must be >= 0 in '" + stepText + "'");
            steps.push_back(step);
        } else if (name == "connect") {
            steps.push_back(parseConnect(args, stepText));
        } else if (name == "retrace") {
            PostStep step;
            step.kind = PostStep::Kind::Retrace;
            steps.push_back(step);
        } else if (name == "reverse") {
            PostStep step;
            step.kind = PostStep::Kind::Reverse;
            const std::string arg = trimmed(args);
            if (arg.empty() || arg == "all")
                step.reverseId = std::nullopt;
            else
                step.reverseId = parseInt(arg, stepText);
            steps.push_back(step);
        } else {
            throw UsageError("pipeline: unknown step '" + name + "'");
        }
    }
    return steps;
}

TraceResult runPipelineStep(const TraceResult& result, const PostStep& step) {
    switch (step.kind) {
    case PostStep::Kind::Remove:
        if (step.iterate)
            return removeIterative(result, step.classFilter, step.length, step.rounds);
        return removeEdgesWhere(result, step.classFilter, step.length);
    case PostStep::Kind::MergeAmbiguities:
        return mergeNearbyAmbiguities(result, step.maxConnectorLen);
    case PostStep::Kind::Connect:
        return connectAllAmbiguities(result, step.params);
    case PostStep::Kind::Retrace:
        return traceAll(result.image);
    case PostStep::Kind::Reverse:
        return reverseEdges(result, step.reverseId);
    }
    return result;
}

TraceResult runPipeline(const TraceResult& result, const std::vector<PostStep>& steps) {
    TraceResult current = result;
    for (const PostStep& step : steps)
        current = runPipelineStep(current, step);
    return current;
}

} // namespace edgetrace
