#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

// Base for everything the pipeline can throw on purpose.  CLI maps these to
// exit code 1; anything else escaping is a bug.
struct PipelineError : std::runtime_error {
    explicit PipelineError(const std::string& what) : std::runtime_error(what) {}
};

// k-th root of a series whose leading coefficient is not a perfect k-th
// power, or whose offset is not divisible by k.  Tripwire for the
// experimental rationality of the normalized expansions.
struct IrrationalRootError : PipelineError {
    explicit IrrationalRootError(const std::string& what) : PipelineError(what) {}
};

// Forward differences failed to vanish before the sample budget ran out:
// the falsification signal for the interpolation conjectures.
struct NotPolynomialError : PipelineError {
    explicit NotPolynomialError(const std::string& what) : PipelineError(what) {}
};

// Malformed series operation: bad offsets, empty known range, out-of-range
// coefficient access, division by zero series.
struct SeriesError : PipelineError {
    explicit SeriesError(const std::string& what) : PipelineError(what) {}
};

} // namespace hecke
