#pragma once

#include <array>

#include "csketch/sketch.hpp"

namespace csketch {

constexpr int kQuantBins = 64;
constexpr int kPadToken = 1;
constexpr int kTokensPerRow = 8;

/// Bin index in {1..64}; x is clamped to [0,1] first.
/// quantize(x) = min(64, floor(x*64) + 1)
int quantize(double x);

/// Bin center (b - 0.5) / 64. Throws when b is outside {1..64}.
double dequantize(int b);

/// Fixed 16x8 token grid. Row layout: t1 type (1..5), t2..t7 quantized
/// parameters in declaration order (pad = 1 on unused slots), t8
/// construction flag. t1 = 5 rows are all-pad with t8 = 0.
struct TokenSequence {
    std::array<std::array<int, kTokensPerRow>, kMaxPrimitives> rows;

    static TokenSequence empty();
    bool operator==(const TokenSequence&) const = default;
};

/// Number of parameter slots used by a type token (0 for t1 = 5).
int used_param_slots(int type_token);

/// Sketch must be valid (validate() empty) with coordinates in [0,1].
TokenSequence tokenize(const SketchGraph& sketch);

/// Inverse of tokenize up to quantization (error <= 1/128 per parameter).
/// Constraints are not represented in token rows, so the result has none.
/// Throws on out-of-range tokens or non-pad parameters in unused slots.
SketchGraph detokenize(const TokenSequence& tokens);

}  // namespace csketch
