#pragma once

#include "riesz/kernel.hpp"

#include <vector>

namespace riesz {

/// Cartesian point in 3-space; the third coordinate runs along the rotation axis.
struct SurfacePoint3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

enum class CurveKind { Segment, Circle, CassinianOval, RectangleBoundary, Polyline };

/// Parametrized planar curve in the half-plane. All kinds use the normalized
/// parameter domain [0,1]; closed kinds identify t = 0 with t = 1.
class Curve {
public:
    static Curve segment(const HalfPlanePoint& z0, const HalfPlanePoint& z1);
    static Curve circle(const HalfPlanePoint& center, double radius);
    /// Cassinian oval |(z - translate)^2 - a^2| = b^2, traversed by polar
    /// angle about its center. For b < a only the right loop is exposed.
    static Curve cassinian(double a, double b, double translate);
    static Curve rectangle(const HalfPlanePoint& lower_left, const HalfPlanePoint& upper_right);
    static Curve polyline(std::vector<HalfPlanePoint> vertices);

    CurveKind kind() const { return kind_; }
    bool closed() const;

    // Accessors for the kind-specific data (throw domain_error on mismatch).
    const HalfPlanePoint& segment_start() const;
    const HalfPlanePoint& segment_end() const;
    const HalfPlanePoint& circle_center() const;
    double circle_radius() const;
    double cassinian_a() const;
    double cassinian_b() const;
    double cassinian_translate() const;
    const HalfPlanePoint& rectangle_lower_left() const;
    const HalfPlanePoint& rectangle_upper_right() const;
    const std::vector<HalfPlanePoint>& polyline_vertices() const;

private:
    Curve() = default;

    CurveKind kind_ = CurveKind::Segment;
    HalfPlanePoint p0_{}, p1_{};         // segment endpoints / rectangle corners / circle center
    double r_ = 0.0;                     // circle radius
    double a_ = 0.0, b_ = 0.0, tr_ = 0.0;  // cassinian parameters
    std::vector<HalfPlanePoint> verts_;  // polyline vertices
    std::vector<double> cumlen_;         // cumulative arc length (polyline)

    friend HalfPlanePoint curve_point(const Curve&, double);
};

/// Point of the curve at parameter t in [0,1].
HalfPlanePoint curve_point(const Curve& curve, double t);

/// Lift of a half-plane point onto the surface of revolution,
/// (x cos phi, x sin phi, y).
SurfacePoint3 lift_to_3d(const HalfPlanePoint& z, double phi);

}  // namespace riesz
