#pragma once

#include <cstdint>
#include <string>

#include "csketch/sketch.hpp"

namespace csketch {

struct CptConfig {
    int m = 3;                     // perturbation rounds per transform
    double alpha = 0.5;            // bbox width = alpha * primitive extent
    std::uint64_t seed = 0;
    int max_attempts = 10;         // retries per round before skipping it
    double min_param_delta = 1e-3; // novelty threshold vs the source sketch
    bool renormalize = true;       // rescale instead of rejecting off-canvas results
};

enum class CptReason { Ok, SolverFailed, OutOfCanvas, NotNovel };
const char* reason_name(CptReason reason);

struct CptResult {
    SketchGraph sketch;
    bool accepted = false;
    CptReason reason = CptReason::Ok;
    double max_residual = 0.0;
};

/// One constraint-preserving transform: m rounds of (sample a point-valued
/// subreference, sample a displacement inside a square of width
/// alpha * extent centered on it, pin it there, re-solve). Failed rounds
/// are retried with fresh samples up to max_attempts, then skipped.
/// The constraint set of the result is identical to the source's.
/// Requires a valid sketch with check() <= 1e-6.
CptResult generate_cpt(const SketchGraph& sketch, const CptConfig& config);

/// Rotation about the canvas center (0.5, 0.5). For nonzero angles the
/// horizontal/vertical constraints are removed (they do not survive
/// rotation); everything else is kept and re-verified. Result is
/// re-normalized.
SketchGraph generate_rotated(const SketchGraph& sketch, double angle);

/// Constructive sketch generator: starts from one random primitive and
/// appends pattern-sampled primitives (parallel/perpendicular/chained
/// lines, concentric circles, line-circle tangencies, midpoints) until
/// n_prims. The emitted sketch is valid and exactly satisfied.
SketchGraph generate_synthetic(std::uint64_t seed, int n_prims);

struct AugmentStats {
    long total_in = 0;
    long total_out = 0;
    long rejects_solver_failed = 0;
    long rejects_out_of_canvas = 0;
    long rejects_not_novel = 0;
    long line_errors = 0;
};

enum class AugmentStrategy { Cpt, Rotate, Synthetic };

/// Streamed corpus augmentation: for each input line emits up to k accepted
/// augmentations on the output stream and returns the manifest counts.
/// Unparseable lines are reported and skipped. Deterministic for a fixed
/// seed, independent of the job count.
AugmentStats augment_corpus(const std::string& input_path, const std::string& output_path,
                            AugmentStrategy strategy, int k, const CptConfig& config,
                            int jobs = 1);

const char* strategy_name(AugmentStrategy strategy);

}  // namespace csketch
