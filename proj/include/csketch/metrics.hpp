#pragma once

#include <array>
#include <vector>

#include "csketch/sketch.hpp"
#include "csketch/tokens.hpp"

namespace csketch {

/// Perfect matching between predicted rows and ground-truth rows.
/// perm[pred_row] = gt_row.
struct Matching {
    std::vector<int> perm;
    double total_cost = 0.0;
};

/// Minimum-cost perfect matching on a square cost matrix (n <= 64).
/// Ties are broken toward the lexicographically smallest permutation.
/// Throws on non-square or non-finite input.
Matching hungarian(const std::vector<std::vector<double>>& cost);

/// Correspondence recovery on token rows. Pair cost = number of unequal
/// tokens among {t1, parameter slots used by the gt kind, t8}; 8 when the
/// types differ.
Matching match_primitives(const TokenSequence& pred, const TokenSequence& gt);

/// Fraction of equal tokens over matched rows. t1 and t8 always count;
/// parameter tokens count on the slots used by the gt kind, or on all six
/// when include_padding is set.
double token_accuracy(const TokenSequence& pred, const TokenSequence& gt,
                      const Matching& matching, bool include_padding = false);

struct Pf1Result {
    double f1 = 1.0;
    int tp = 0, fp = 0, fn = 0;
    /// Indexed by gt row: true when the matched pair is a true positive.
    std::array<bool, kMaxPrimitives> tp_by_gt_row{};
};

/// Primitive F1. A matched pair is a true positive iff the types agree
/// (and are not "no primitive") and every used parameter token differs by
/// at most `tol_bins` (inclusive; default 5).
Pf1Result pf1(const TokenSequence& pred, const TokenSequence& gt, const Matching& matching,
              int tol_bins = 5);

/// Bidirectional Chamfer distance in 64-grid units: points are sampled on
/// every primitive at arc-length spacing <= 1/64 (>= 8 per primitive;
/// a point primitive contributes one sample). Returns +infinity when
/// either side has no primitives.
double chamfer(const SketchGraph& pred, const SketchGraph& gt);

struct Cf1Result {
    double f1 = 1.0;
    int tp = 0, fp = 0, fn = 0;
};

/// Constraint F1. A predicted constraint is a true positive iff both of
/// its endpoint primitives are PF1 true positives and an unconsumed gt
/// constraint exists with the same kind and the same matched endpoints
/// (subreference indices included iff use_subrefs).
Cf1Result cf1(const SketchGraph& pred, const SketchGraph& gt, const Matching& matching,
              const Pf1Result& prim_tp, bool use_subrefs = true);

struct EvalReport {
    double acc = 0.0;
    double cd = 0.0;     // +inf when undefined (one side empty)
    double pf1 = 0.0;
    double cf1 = 0.0;           // with subreferences
    double cf1_no_subref = 0.0;
    int prim_tp = 0, prim_fp = 0, prim_fn = 0;
    int constr_tp = 0, constr_fp = 0, constr_fn = 0;
};

/// Full metric suite for one (pred, gt) pair: recovers the correspondence,
/// then Acc / CD / PF1 / CF1 (both variants).
EvalReport evaluate(const SketchGraph& pred, const SketchGraph& gt,
                    bool include_padding = false);

}  // namespace csketch
