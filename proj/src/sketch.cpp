#include "csketch/sketch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace csketch {

double segment_dist(Point2 p, Point2 s, Point2 e) {
    Point2 d = e - s;
    double len2 = dot(d, d);
    if (len2 == 0.0) return dist(p, s);
    double t = std::clamp(dot(p - s, d) / len2, 0.0, 1.0);
    return dist(p, s + d * t);
}

std::optional<CircleFit> circumcircle(Point2 a, Point2 b, Point2 c) {
    double d = 2.0 * cross(b - a, c - a);
    if (std::abs(d) <= 1e-12) return std::nullopt;
    double a2 = dot(a, a), b2 = dot(b, b), c2 = dot(c, c);
    Point2 center{(a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d,
                  (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d};
    return CircleFit{center, dist(center, a)};
}

namespace {
double wrap_ccw(double a) {
    constexpr double tau = 6.283185307179586;
    a = std::fmod(a, tau);
    return a < 0 ? a + tau : a;
}
}  // namespace

std::optional<ArcSpan> arc_span(Point2 start, Point2 mid, Point2 end) {
    auto fit = circumcircle(start, mid, end);
    if (!fit) return std::nullopt;
    double as = std::atan2(start.y - fit->center.y, start.x - fit->center.x);
    double am = std::atan2(mid.y - fit->center.y, mid.x - fit->center.x);
    double ae = std::atan2(end.y - fit->center.y, end.x - fit->center.x);
    double ccw_to_end = wrap_ccw(ae - as);
    double ccw_to_mid = wrap_ccw(am - as);
    // The arc runs through mid; pick the rotational direction that does.
    double sweep = ccw_to_mid <= ccw_to_end ? ccw_to_end : ccw_to_end - 6.283185307179586;
    return ArcSpan{fit->center, fit->radius, as, sweep};
}

int param_count(PrimitiveKind kind) {
    switch (kind) {
        case PrimitiveKind::Arc: return 6;
        case PrimitiveKind::Circle: return 3;
        case PrimitiveKind::Line: return 4;
        case PrimitiveKind::Point: return 2;
    }
    throw std::invalid_argument("unknown primitive kind");
}

const char* kind_name(PrimitiveKind kind) {
    switch (kind) {
        case PrimitiveKind::Arc: return "arc";
        case PrimitiveKind::Circle: return "circle";
        case PrimitiveKind::Line: return "line";
        case PrimitiveKind::Point: return "point";
    }
    return "?";
}

std::optional<PrimitiveKind> kind_from_name(const std::string& name) {
    if (name == "arc") return PrimitiveKind::Arc;
    if (name == "circle") return PrimitiveKind::Circle;
    if (name == "line") return PrimitiveKind::Line;
    if (name == "point") return PrimitiveKind::Point;
    return std::nullopt;
}

Primitive Primitive::arc(Point2 s, Point2 m, Point2 e, bool construction) {
    return {PrimitiveKind::Arc, {s.x, s.y, m.x, m.y, e.x, e.y}, construction};
}
Primitive Primitive::circle(Point2 c, double r, bool construction) {
    return {PrimitiveKind::Circle, {c.x, c.y, r}, construction};
}
Primitive Primitive::line(Point2 s, Point2 e, bool construction) {
    return {PrimitiveKind::Line, {s.x, s.y, e.x, e.y}, construction};
}
Primitive Primitive::point(Point2 p, bool construction) {
    return {PrimitiveKind::Point, {p.x, p.y}, construction};
}

const char* kind_name(ConstraintKind kind) {
    static const char* names[] = {"coincident", "concentric", "equal",         "fix",
                                  "horizontal", "midpoint",   "normal",        "offset",
                                  "parallel",   "perpendicular", "quadrant",   "tangent",
                                  "vertical"};
    return names[int(kind)];
}

std::optional<ConstraintKind> constraint_kind_from_name(const std::string& name) {
    for (int k = 0; k < kConstraintKindCount; ++k)
        if (name == kind_name(ConstraintKind(k))) return ConstraintKind(k);
    return std::nullopt;
}

Constraint::Constraint(int i_, int si_, int j_, int sj_, ConstraintKind kind_,
                       std::optional<double> datum_)
    : i(i_), si(si_), j(j_), sj(sj_), kind(kind_), datum(datum_) {
    if (std::tie(j, sj) < std::tie(i, si)) {
        std::swap(i, j);
        std::swap(si, sj);
    }
}

std::span<const int> valid_subrefs(PrimitiveKind kind) {
    static constexpr int arc[] = {1, 2, 3, 4};
    static constexpr int circle[] = {2, 3};
    static constexpr int line[] = {1, 2, 4};
    static constexpr int point[] = {4};
    switch (kind) {
        case PrimitiveKind::Arc: return arc;
        case PrimitiveKind::Circle: return circle;
        case PrimitiveKind::Line: return line;
        case PrimitiveKind::Point: return point;
    }
    return {};
}

bool subref_valid(PrimitiveKind kind, int subref) {
    auto v = valid_subrefs(kind);
    return std::find(v.begin(), v.end(), subref) != v.end();
}

bool subref_is_point(PrimitiveKind kind, int subref) {
    if (!subref_valid(kind, subref)) return false;
    switch (kind) {
        case PrimitiveKind::Arc: return subref <= 3;
        case PrimitiveKind::Circle: return subref == 2;
        case PrimitiveKind::Line: return subref == 1 || subref == 2;
        case PrimitiveKind::Point: return true;
    }
    return false;
}

std::optional<Point2> subref_point(const Primitive& p, int subref) {
    if (!subref_valid(p.kind, subref))
        throw std::invalid_argument(std::string("invalid subref for ") + kind_name(p.kind));
    switch (p.kind) {
        case PrimitiveKind::Arc:
            if (subref == 1) return p.at(0);
            if (subref == 2) return p.at(2);
            if (subref == 3) return p.at(4);
            return std::nullopt;
        case PrimitiveKind::Circle:
            if (subref == 2) return p.at(0);
            return std::nullopt;
        case PrimitiveKind::Line:
            if (subref == 1) return p.at(0);
            if (subref == 2) return p.at(2);
            return std::nullopt;
        case PrimitiveKind::Point:
            return p.at(0);
    }
    return std::nullopt;
}

CircleFit arc_center(const Primitive& arc) {
    auto fit = circumcircle(arc.at(0), arc.at(2), arc.at(4));
    if (!fit) throw std::invalid_argument("arc points are collinear");
    return *fit;
}

CircleFit curve_center(const Primitive& p) {
    if (p.kind == PrimitiveKind::Circle) return {p.at(0), p.params[2]};
    if (p.kind == PrimitiveKind::Arc) return arc_center(p);
    throw std::invalid_argument("not a circle or arc");
}

namespace {

bool coords_finite(const Primitive& p) {
    return std::all_of(p.params.begin(), p.params.end(),
                       [](double v) { return std::isfinite(v); });
}

// Coordinate parameters (everything except a circle's radius slot).
bool coord_in_unit(const Primitive& p) {
    int n = p.kind == PrimitiveKind::Circle ? 2 : int(p.params.size());
    for (int k = 0; k < n; ++k)
        if (p.params[k] < 0.0 || p.params[k] > 1.0) return false;
    return true;
}

std::string prim_locus(int idx) { return "primitive[" + std::to_string(idx) + "]"; }
std::string constr_locus(int idx) { return "constraint[" + std::to_string(idx) + "]"; }

}  // namespace

std::vector<Violation> validate(const SketchGraph& sketch) {
    std::vector<Violation> out;
    if (int(sketch.primitives.size()) > kMaxPrimitives)
        out.push_back({"sketch", "more than 16 primitives"});

    for (int idx = 0; idx < int(sketch.primitives.size()); ++idx) {
        const Primitive& p = sketch.primitives[idx];
        if (int(p.params.size()) != param_count(p.kind)) {
            out.push_back({prim_locus(idx), "parameter count does not match kind"});
            continue;
        }
        if (!coords_finite(p)) {
            out.push_back({prim_locus(idx), "non-finite parameter"});
            continue;
        }
        if (!coord_in_unit(p))
            out.push_back({prim_locus(idx), "coordinate outside [0,1]"});
        switch (p.kind) {
            case PrimitiveKind::Circle:
                if (p.params[2] <= 0.0)
                    out.push_back({prim_locus(idx), "circle radius must be positive"});
                break;
            case PrimitiveKind::Arc:
                if (!circumcircle(p.at(0), p.at(2), p.at(4)))
                    out.push_back({prim_locus(idx), "arc points are collinear"});
                break;
            case PrimitiveKind::Line:
                if (p.at(0) == p.at(2))
                    out.push_back({prim_locus(idx), "line has zero length"});
                break;
            case PrimitiveKind::Point:
                break;
        }
    }

    std::vector<Constraint> seen;
    for (int idx = 0; idx < int(sketch.constraints.size()); ++idx) {
        const Constraint& c = sketch.constraints[idx];
        int n = int(sketch.primitives.size());
        if (c.i < 0 || c.i >= n || c.j < 0 || c.j >= n) {
            out.push_back({constr_locus(idx), "primitive index out of range"});
            continue;
        }
        if (!subref_valid(sketch.primitives[c.i].kind, c.si))
            out.push_back({constr_locus(idx),
                           std::string("subref ") + std::to_string(c.si) + " invalid for " +
                               kind_name(sketch.primitives[c.i].kind)});
        if (!subref_valid(sketch.primitives[c.j].kind, c.sj))
            out.push_back({constr_locus(idx),
                           std::string("subref ") + std::to_string(c.sj) + " invalid for " +
                               kind_name(sketch.primitives[c.j].kind)});
        for (const Constraint& s : seen)
            if (s.same_edge(c)) {
                out.push_back({constr_locus(idx), "duplicate constraint"});
                break;
            }
        seen.push_back(c);
    }
    return out;
}

Bounds sketch_bounds(const SketchGraph& sketch) {
    Bounds b{1e300, 1e300, -1e300, -1e300};
    auto grow = [&](double x, double y) {
        b.min_x = std::min(b.min_x, x);
        b.min_y = std::min(b.min_y, y);
        b.max_x = std::max(b.max_x, x);
        b.max_y = std::max(b.max_y, y);
    };
    for (const Primitive& p : sketch.primitives) {
        switch (p.kind) {
            case PrimitiveKind::Circle: {
                Point2 c = p.at(0);
                double r = p.params[2];
                grow(c.x - r, c.y - r);
                grow(c.x + r, c.y + r);
                break;
            }
            case PrimitiveKind::Arc: {
                grow(p.params[0], p.params[1]);
                grow(p.params[4], p.params[5]);
                if (auto span = arc_span(p.at(0), p.at(2), p.at(4))) {
                    // Cardinal extremes of the circle that lie on the arc.
                    for (int k = 0; k < 4; ++k) {
                        double a = k * 1.5707963267948966;
                        double off = wrap_ccw(a - span->start_angle);
                        bool on = span->sweep >= 0 ? off <= span->sweep
                                                   : off >= 6.283185307179586 + span->sweep;
                        if (on)
                            grow(span->center.x + span->radius * std::cos(a),
                                 span->center.y + span->radius * std::sin(a));
                    }
                } else {
                    grow(p.params[2], p.params[3]);
                }
                break;
            }
            default:
                for (int k = 0; k + 1 < int(p.params.size()); k += 2)
                    grow(p.params[k], p.params[k + 1]);
        }
    }
    return b;
}

SketchGraph normalize(const SketchGraph& sketch) {
    if (sketch.primitives.empty()) throw std::invalid_argument("cannot normalize an empty sketch");
    Bounds b = sketch_bounds(sketch);
    double extent = std::max(b.max_x - b.min_x, b.max_y - b.min_y);
    if (!(extent > 0.0)) throw std::invalid_argument("sketch has zero extent");
    double s = 0.9 / extent;
    Point2 center{(b.min_x + b.max_x) / 2, (b.min_y + b.max_y) / 2};

    SketchGraph out = sketch;
    for (Primitive& p : out.primitives) {
        int ncoord = p.kind == PrimitiveKind::Circle ? 2 : int(p.params.size());
        for (int k = 0; k < ncoord; k += 2) {
            p.params[k] = 0.5 + s * (p.params[k] - center.x);
            p.params[k + 1] = 0.5 + s * (p.params[k + 1] - center.y);
        }
        if (p.kind == PrimitiveKind::Circle) p.params[2] *= s;
    }
    for (Constraint& c : out.constraints)
        if (c.kind == ConstraintKind::Offset && c.datum) c.datum = *c.datum * s;
    return out;
}

bool in_canvas(const SketchGraph& sketch) {
    for (const Primitive& p : sketch.primitives) {
        int n = p.kind == PrimitiveKind::Circle ? 2 : int(p.params.size());
        for (int k = 0; k < n; ++k)
            if (p.params[k] < 0.0 || p.params[k] > 1.0) return false;
    }
    return true;
}

void capture_datums(SketchGraph& sketch) {
    for (Constraint& c : sketch.constraints) {
        if (c.datum) continue;
        int n = int(sketch.primitives.size());
        if (c.i >= n || c.j >= n) continue;
        const Primitive& a = sketch.primitives[c.i];
        const Primitive& b = sketch.primitives[c.j];
        switch (c.kind) {
            case ConstraintKind::Offset: {
                if (a.kind != PrimitiveKind::Line || b.kind != PrimitiveKind::Line) break;
                Point2 mid = (b.at(0) + b.at(2)) * 0.5;
                c.datum = signed_line_dist(mid, a.at(0), a.at(2));
                break;
            }
            case ConstraintKind::Tangent: {
                bool both_curves = a.kind != PrimitiveKind::Line && b.kind != PrimitiveKind::Line;
                if (!both_curves) break;
                if (a.kind == PrimitiveKind::Point || b.kind == PrimitiveKind::Point) break;
                CircleFit ca = curve_center(a);
                CircleFit cb = curve_center(b);
                double d = dist(ca.center, cb.center);
                // Branch whose residual is smaller at the current geometry.
                double ext = std::abs(d - (ca.radius + cb.radius));
                double in = std::abs(d - (ca.radius - cb.radius));
                c.datum = ext <= in ? 1.0 : -1.0;
                break;
            }
            case ConstraintKind::Quadrant: {
                const Primitive* pt = nullptr;
                const Primitive* curve = nullptr;
                int pt_sub = 0;
                if (a.kind == PrimitiveKind::Circle || a.kind == PrimitiveKind::Arc) {
                    curve = &a;
                    pt = &b;
                    pt_sub = c.sj;
                } else {
                    curve = &b;
                    pt = &a;
                    pt_sub = c.si;
                }
                if (curve->kind == PrimitiveKind::Line || curve->kind == PrimitiveKind::Point) break;
                if (!subref_is_point(pt->kind, pt_sub)) break;
                Point2 loc = *subref_point(*pt, pt_sub);
                CircleFit cf = curve_center(*curve);
                int best = 0;
                double best_d = 1e300;
                static const Point2 anchors[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
                for (int k = 0; k < 4; ++k) {
                    double d = dist(loc, cf.center + anchors[k] * cf.radius);
                    if (d < best_d) {
                        best_d = d;
                        best = k;
                    }
                }
                c.datum = double(best);
                break;
            }
            default:
                break;
        }
    }
}

}  // namespace csketch
