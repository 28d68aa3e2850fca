#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "csketch/geometry.hpp"

namespace csketch {

// Type-token values. 5 ("no primitive") only appears in token rows, never
// as the kind of a stored primitive.
enum class PrimitiveKind : int {
    Arc = 1,
    Circle = 2,
    Line = 3,
    Point = 4,
};

constexpr int kNoPrimitiveToken = 5;
constexpr int kMaxPrimitives = 16;

int param_count(PrimitiveKind kind);
const char* kind_name(PrimitiveKind kind);
std::optional<PrimitiveKind> kind_from_name(const std::string& name);

/// One parametric entity. Parameter layout:
///   Arc    (x_s, y_s, x_m, y_m, x_e, y_e)
///   Circle (x_c, y_c, r)
///   Line   (x_s, y_s, x_e, y_e)
///   Point  (x_p, y_p)
struct Primitive {
    PrimitiveKind kind = PrimitiveKind::Line;
    std::vector<double> params;
    bool construction = false;

    static Primitive arc(Point2 s, Point2 m, Point2 e, bool construction = false);
    static Primitive circle(Point2 c, double r, bool construction = false);
    static Primitive line(Point2 s, Point2 e, bool construction = false);
    static Primitive point(Point2 p, bool construction = false);

    Point2 at(int first_param) const { return {params[first_param], params[first_param + 1]}; }
};

enum class ConstraintKind : int {
    Coincident = 0,
    Concentric,
    Equal,
    Fix,
    Horizontal,
    Midpoint,
    Normal,
    Offset,
    Parallel,
    Perpendicular,
    Quadrant,
    Tangent,
    Vertical,
};

constexpr int kConstraintKindCount = 13;

const char* kind_name(ConstraintKind kind);
std::optional<ConstraintKind> constraint_kind_from_name(const std::string& name);

/// Undirected typed edge between (primitive, subreference) pairs.
/// Endpoints are kept in canonical order: (i, si) <= (j, sj)
/// lexicographically. Self-edges (i == j) are allowed.
///
/// `datum` carries the captured value for residuals that are otherwise
/// underdetermined: offset distance (signed, normalized units), tangency
/// branch sign (+1/-1) for circle-circle tangent, quadrant anchor index
/// (0..3 for +x,+y,-x,-y).
struct Constraint {
    int i = 0;
    int si = 1;
    int j = 0;
    int sj = 1;
    ConstraintKind kind = ConstraintKind::Coincident;
    std::optional<double> datum;

    Constraint() = default;
    Constraint(int i, int si, int j, int sj, ConstraintKind kind,
               std::optional<double> datum = std::nullopt);

    bool same_edge(const Constraint& o) const {
        return i == o.i && si == o.si && j == o.j && sj == o.sj && kind == o.kind;
    }
};

struct SketchGraph {
    std::vector<Primitive> primitives;
    std::vector<Constraint> constraints;
};

/// Subreference validity sets per kind:
///   Arc {1:start, 2:mid, 3:end, 4:whole}
///   Circle {2:center, 3:whole}
///   Line {1:start, 2:end, 4:whole}
///   Point {4:the point}
std::span<const int> valid_subrefs(PrimitiveKind kind);
bool subref_valid(PrimitiveKind kind, int subref);

/// True when the subref names a concrete point (i.e. not a whole-entity
/// marker). Point's subref 4 is its own coordinate, so it counts.
bool subref_is_point(PrimitiveKind kind, int subref);

/// Concrete location of a subreference; empty for whole-entity markers.
/// Throws std::invalid_argument when the subref is not valid for the kind.
std::optional<Point2> subref_point(const Primitive& p, int subref);

/// Circumcenter + radius of an arc's three points.
/// Throws std::invalid_argument on collinear points.
CircleFit arc_center(const Primitive& arc);

/// Center/radius of a circle or arc.
CircleFit curve_center(const Primitive& p);

struct Violation {
    std::string locus;    // "primitive[3]" / "constraint[1]" / "sketch"
    std::string message;
};

/// Every invariant violation in the sketch; empty means valid.
std::vector<Violation> validate(const SketchGraph& sketch);

/// Uniform scale + translation mapping the sketch bounding box into
/// [0.05, 0.95]^2, aspect preserved, centered. Offset datums are rescaled
/// by the same factor. Throws on zero-extent sketches.
SketchGraph normalize(const SketchGraph& sketch);

/// Axis-aligned bounding box of the sketch geometry (arc curves and circle
/// disks included, not just control points).
struct Bounds {
    double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
};
Bounds sketch_bounds(const SketchGraph& sketch);

/// True when every coordinate parameter is inside [0,1].
bool in_canvas(const SketchGraph& sketch);

/// Fill in missing datums (offset distance, tangent branch, quadrant
/// anchor) from the current geometry. Called on JSONL import and by the
/// fixture builders.
void capture_datums(SketchGraph& sketch);

}  // namespace csketch
