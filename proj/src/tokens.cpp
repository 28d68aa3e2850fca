#include "csketch/tokens.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace csketch {

int quantize(double x) {
    x = std::clamp(x, 0.0, 1.0);
    return std::min(kQuantBins, int(std::floor(x * kQuantBins)) + 1);
}

double dequantize(int b) {
    if (b < 1 || b > kQuantBins) throw std::out_of_range("parameter token outside 1..64");
    return (b - 0.5) / kQuantBins;
}

TokenSequence TokenSequence::empty() {
    TokenSequence t;
    for (auto& row : t.rows) {
        row.fill(kPadToken);
        row[0] = kNoPrimitiveToken;
        row[7] = 0;
    }
    return t;
}

int used_param_slots(int type_token) {
    switch (type_token) {
        case 1: return 6;
        case 2: return 3;
        case 3: return 4;
        case 4: return 2;
        case 5: return 0;
    }
    throw std::out_of_range("type token outside 1..5");
}

TokenSequence tokenize(const SketchGraph& sketch) {
    auto violations = validate(sketch);
    if (!violations.empty())
        throw std::invalid_argument("cannot tokenize an invalid sketch: " + violations[0].locus +
                                    ": " + violations[0].message);
    TokenSequence t = TokenSequence::empty();
    for (int i = 0; i < int(sketch.primitives.size()); ++i) {
        const Primitive& p = sketch.primitives[i];
        auto& row = t.rows[i];
        row[0] = int(p.kind);
        for (int k = 0; k < int(p.params.size()); ++k) row[1 + k] = quantize(p.params[k]);
        row[7] = p.construction ? 1 : 0;
    }
    return t;
}

SketchGraph detokenize(const TokenSequence& tokens) {
    SketchGraph out;
    for (int i = 0; i < kMaxPrimitives; ++i) {
        const auto& row = tokens.rows[i];
        int type = row[0];
        if (type < 1 || type > 5) throw std::out_of_range("type token outside 1..5");
        if (row[7] != 0 && row[7] != 1) throw std::out_of_range("construction token outside 0..1");
        int used = used_param_slots(type);
        for (int k = 1; k <= 6; ++k) {
            if (row[k] < 1 || row[k] > kQuantBins)
                throw std::out_of_range("parameter token outside 1..64");
            if (k > used && row[k] != kPadToken)
                throw std::invalid_argument("non-pad token in unused parameter slot");
        }
        if (type == kNoPrimitiveToken) {
            if (row[7] != 0)
                throw std::invalid_argument("construction flag set on a no-primitive row");
            continue;
        }
        Primitive p;
        p.kind = PrimitiveKind(type);
        p.params.resize(used);
        for (int k = 0; k < used; ++k) p.params[k] = dequantize(row[1 + k]);
        p.construction = row[7] == 1;
        out.primitives.push_back(std::move(p));
    }
    return out;
}

}  // namespace csketch
