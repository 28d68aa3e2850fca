#pragma once

#include <array>
#include <map>
#include <tuple>
#include <vector>

#include "csketch/metrics.hpp"
#include "csketch/sketch.hpp"
#include "csketch/tokens.hpp"

namespace csketch {

/// Subreference pair admitted by the primitive types. Canonical:
/// i <= j, and si <= sj when i == j. Indices are 0-based slots.
struct SubrefPair {
    int i, si, j, sj;
    auto operator<=>(const SubrefPair&) const = default;
};

/// All valid (slot, subref, slot, subref) combinations for a row of type
/// tokens (1..5). Slots with type 5 contribute nothing.
std::vector<SubrefPair> valid_pairs(const std::vector<int>& type_tokens);

/// Swap-invariant pair feature [a + b, |a - b|]. With `literal` set the
/// raw difference is kept instead of its absolute value (not
/// swap-invariant; the difference negates).
std::vector<double> pair_feature(const std::vector<double>& a, const std::vector<double>& b,
                                 bool literal = false);

/// Per-slot embedding banks: 8 per slot for token heads, 4 per slot for
/// subreference pairing. Storage is linear in the slot count; pair
/// features are only ever formed over a valid-pair set.
struct EmbeddingSet {
    int n = 0;
    int dim = 0;
    std::vector<std::vector<double>> prim;    // n*8 embeddings
    std::vector<std::vector<double>> constr;  // n*4 embeddings

    static EmbeddingSet zeros(int n, int dim);
    const std::vector<double>& constr_at(int slot, int subref) const;
};

std::vector<std::vector<double>> pair_features(const EmbeddingSet& embeddings,
                                               const std::vector<SubrefPair>& pairs,
                                               bool literal = false);

/// Constraint-class simplex layout: classes 0..12 follow ConstraintKind
/// order (coincident, concentric, equal, fix, horizontal, midpoint,
/// normal, offset, parallel, perpendicular, quadrant, tangent, vertical);
/// class 13 is the no-constraint class.
constexpr int kConstraintClasses = kConstraintKindCount + 1;
constexpr int kNoConstraintClass = kConstraintKindCount;

/// Probability arrays an external model would emit, on which the loss
/// oracle operates. Every row must be a simplex (sum 1 within 1e-9).
struct PredictionBundle {
    std::vector<std::array<double, 5>> type_probs;                    // n x 5
    std::vector<std::array<std::array<double, kQuantBins>, 6>> param_probs;  // n x 6 x 64
    std::vector<std::array<double, 2>> constr_flag_probs;             // n x 2
    /// Keyed by canonical predicted-slot pairs.
    std::map<SubrefPair, std::array<double, kConstraintClasses>> constraint_probs;

    int n() const { return int(type_probs.size()); }
    void validate() const;  // throws on malformed simplex rows

    static PredictionBundle uniform(int n, const std::vector<SubrefPair>& pairs);
    /// One-hot-correct bundle for a ground truth (probability 1 on every
    /// correct class), with pairs taken from the gt types.
    static PredictionBundle one_hot(const TokenSequence& gt,
                                    const std::vector<Constraint>& gt_constraints);
};

struct LossResult {
    double loss = 0.0;
    bool clamped = false;  // some target-class probability hit the 1e-12 floor
};

struct LossOptions {
    bool include_padding = false;  // count pad parameter slots in the token part
};

/// Total loss under a given matching (perm[pred_row] = gt_row):
/// per gt row, -log p of the correct type token, plus -log p of the
/// construction flag and of each used parameter token when the row holds a
/// primitive; plus, for every pair in S built from the gt types, -log p of
/// the correct constraint class (the no-constraint class where no gt
/// constraint exists), read from the prediction at the matched slots.
LossResult total_loss(const PredictionBundle& pred, const TokenSequence& gt,
                      const std::vector<Constraint>& gt_constraints, const Matching& matching,
                      const LossOptions& opts = {});

/// Hungarian matching on the 8-head token cross-entropy cost matrix,
/// then total_loss under it.
struct MatchedLoss {
    LossResult result;
    Matching matching;
};
MatchedLoss matched_loss(const PredictionBundle& pred, const TokenSequence& gt,
                         const std::vector<Constraint>& gt_constraints,
                         const LossOptions& opts = {});

/// Token-part cost of assigning pred slot `pred_row` to gt row `gt_row`
/// (the matrix entry matched_loss minimizes).
double token_pair_cost(const PredictionBundle& pred, const TokenSequence& gt, int pred_row,
                       int gt_row, const LossOptions& opts = {});

}  // namespace csketch
