#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edgetrace/postprocess.hpp"
#include "edgetrace/trace.hpp"

namespace edgetrace {

/// One step of the `post` pipeline mini-language. Steps are flat and run in
/// order, e.g.:
///   remove:free,<20; remove:dangling,<30,x2; merge-amb:3; connect:aw=1,dw=0.25,th=1.57
/// Step forms:
///   remove:<class>[,<N][,>N][,xK|xfix]   class = free|dangling|bridged|any;
///                                        xK repeats {remove; retrace} K times,
///                                        xfix until nothing changes
///   merge-amb:<len>                      absorb bridges with <= len interior pixels
///   connect:[aw=..][,dw=..][,th=..][,n=..]  cost-based pairing at every ambiguity
///   retrace                              re-run the two-pass trace on the working image
///   reverse:all|<edge id>
struct PostStep {
    enum class Kind { Remove, MergeAmbiguities, Connect, Retrace, Reverse };
    Kind kind = Kind::Retrace;

    std::optional<EdgeClass> classFilter; // nullopt = any (Remove)
    LengthFilter length;
    bool iterate = false;          // an xK/xfix token: {remove; retrace} rounds
    std::optional<int> rounds = 1; // nullopt = until fixpoint
    int maxConnectorLen = 3;
    ConnectionCostParams params;
    std::optional<EdgeId> reverseId; // nullopt = all
};

/// Parses a pipeline spec; throws UsageError with the offending token.
std::vector<PostStep> parsePipeline(const std::string& spec);

TraceResult runPipelineStep(const TraceResult& result, const PostStep& step);
TraceResult runPipeline(const TraceResult& result, const std::vector<PostStep>& steps);

} // namespace edgetrace
