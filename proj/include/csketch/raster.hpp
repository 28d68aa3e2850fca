#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "csketch/sketch.hpp"

namespace csketch {

/// Binary image, row-major, row 0 at the top (y grows downward).
struct SketchImage {
    int width = 128;
    int height = 128;
    std::vector<std::uint8_t> pixels;  // 0 or 1

    SketchImage() = default;
    SketchImage(int w, int h) : width(w), height(h), pixels(std::size_t(w) * h, 0) {}

    std::uint8_t at(int x, int y) const { return pixels[std::size_t(y) * width + x]; }
    void set(int x, int y) {
        if (x >= 0 && x < width && y >= 0 && y < height) pixels[std::size_t(y) * width + x] = 1;
    }
    long lit_count() const;
    bool operator==(const SketchImage&) const = default;
};

struct RenderConfig {
    int size = 128;
    int stroke_width = 1;
    int dash_on = 4;   // construction-primitive dash pattern, in pixels
    int dash_off = 4;
};

/// Deterministic 1-px rasterization: integer line stroking, adaptive
/// arc/circle flattening (chord error <= 0.25 px), 3x3 crosses for points,
/// dashed strokes for construction primitives. Coordinates must be inside
/// [0,1]; throws otherwise.
SketchImage render(const SketchGraph& sketch, const RenderConfig& config = {});

struct HanddrawConfig {
    double jitter_sigma = 0.01;  // endpoint noise, canvas units
    double bow = 0.02;           // max perpendicular sag of straight strokes
    double overshoot = 0.015;    // max extension past endpoints
    std::uint64_t seed = 0;
};

/// Hand-drawn-style degraded render: jittered endpoints, straight segments
/// bent into quadratic Beziers, strokes extended past their endpoints,
/// then rasterized exactly as render(). With all noise parameters at zero
/// the output equals render() byte for byte.
SketchImage render_handdrawn(const SketchGraph& sketch, const HanddrawConfig& hd,
                             const RenderConfig& config = {});

/// P5 PGM bytes, maxval 255 (lit = 255).
std::vector<std::uint8_t> encode_pgm(const SketchImage& image);

/// 8-bit grayscale PNG bytes.
std::vector<std::uint8_t> encode_png(const SketchImage& image);

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes);

}  // namespace csketch
