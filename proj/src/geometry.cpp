#include "riesz/geometry.hpp"

#include <cmath>
#include <algorithm>
#include <string>

namespace riesz {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;

HalfPlanePoint clamp_axis(HalfPlanePoint p) {
    // Absorb roundoff for curves that touch the axis.
    if (p.x < 0.0 && p.x > -1e-12) p.x = 0.0;
    if (p.x < 0.0) throw domain_error("curve point left the half-plane (x < 0)");
    return p;
}

HalfPlanePoint lerp(const HalfPlanePoint& a, const HalfPlanePoint& b, double t) {
    return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

double dist(const HalfPlanePoint& a, const HalfPlanePoint& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

/// Polar radius of the Cassinian |z^2 - a^2| = b^2 about its center:
/// rho^2 = a^2 cos 2theta + branch * sqrt(b^4 - a^4 sin^2 2theta).
double cassini_radius(double a, double b, double theta, double branch) {
    const double s2 = std::sin(2.0 * theta);
    const double disc = b * b * b * b - a * a * a * a * s2 * s2;
    const double rho2 = a * a * std::cos(2.0 * theta) + branch * std::sqrt(std::max(disc, 0.0));
    return std::sqrt(std::max(rho2, 0.0));
}

HalfPlanePoint walk_polyline(const std::vector<HalfPlanePoint>& verts,
                             const std::vector<double>& cumlen, double t) {
    const double target = t * cumlen.back();
    auto it = std::upper_bound(cumlen.begin(), cumlen.end(), target);
    size_t i = std::min<size_t>(it - cumlen.begin(), cumlen.size() - 1);
    if (i == 0) i = 1;
    const double seg = cumlen[i] - cumlen[i - 1];
    const double local = seg > 0.0 ? (target - cumlen[i - 1]) / seg : 0.0;
    return lerp(verts[i - 1], verts[i], std::clamp(local, 0.0, 1.0));
}

}  // namespace

Curve Curve::segment(const HalfPlanePoint& z0, const HalfPlanePoint& z1) {
    validate_half_plane(z0);
    validate_half_plane(z1);
    if (dist(z0, z1) == 0.0) throw domain_error("segment: endpoints must differ");
    Curve c;
    c.kind_ = CurveKind::Segment;
    c.p0_ = z0;
    c.p1_ = z1;
    return c;
}

Curve Curve::circle(const HalfPlanePoint& center, double radius) {
    validate_half_plane(center);
    if (!(radius > 0.0)) throw domain_error("circle: radius must be positive");
    if (center.x < radius) throw domain_error("circle: must stay in the half-plane");
    Curve c;
    c.kind_ = CurveKind::Circle;
    c.p0_ = center;
    c.r_ = radius;
    return c;
}

Curve Curve::cassinian(double a, double b, double translate) {
    if (!(a > 0.0) || !(b > 0.0)) throw domain_error("cassinian: requires a > 0 and b > 0");
    if (translate < 0.0) throw domain_error("cassinian: translate must be >= 0");
    if (b >= a && translate < std::sqrt(a * a + b * b) - 1e-12)
        throw domain_error("cassinian: single loop extends past the axis, increase translate");
    Curve c;
    c.kind_ = CurveKind::CassinianOval;
    c.a_ = a;
    c.b_ = b;
    c.tr_ = translate;
    return c;
}

Curve Curve::rectangle(const HalfPlanePoint& lower_left, const HalfPlanePoint& upper_right) {
    validate_half_plane(lower_left);
    validate_half_plane(upper_right);
    if (!(lower_left.x < upper_right.x && lower_left.y < upper_right.y))
        throw domain_error("rectangle: corners must satisfy ll < ur componentwise");
    Curve c;
    c.kind_ = CurveKind::RectangleBoundary;
    c.p0_ = lower_left;
    c.p1_ = upper_right;
    return c;
}

Curve Curve::polyline(std::vector<HalfPlanePoint> vertices) {
    if (vertices.size() < 2) throw domain_error("polyline: needs at least two vertices");
    std::vector<double> cum(vertices.size(), 0.0);
    for (size_t i = 0; i < vertices.size(); ++i) {
        validate_half_plane(vertices[i]);
        if (i > 0) {
            const double d = dist(vertices[i - 1], vertices[i]);
            if (d == 0.0) throw domain_error("polyline: consecutive vertices must differ");
            cum[i] = cum[i - 1] + d;
        }
    }
    Curve c;
    c.kind_ = CurveKind::Polyline;
    c.verts_ = std::move(vertices);
    c.cumlen_ = std::move(cum);
    return c;
}

bool Curve::closed() const {
    switch (kind_) {
        case CurveKind::Circle:
        case CurveKind::CassinianOval:
        case CurveKind::RectangleBoundary: return true;
        case CurveKind::Segment:
        case CurveKind::Polyline: return false;
    }
    return false;
}

namespace {
[[noreturn]] void kind_mismatch(const char* what) {
    throw domain_error(std::string("curve accessor mismatch: ") + what);
}
}  // namespace

const HalfPlanePoint& Curve::segment_start() const {
    if (kind_ != CurveKind::Segment) kind_mismatch("segment_start");
    return p0_;
}
const HalfPlanePoint& Curve::segment_end() const {
    if (kind_ != CurveKind::Segment) kind_mismatch("segment_end");
    return p1_;
}
const HalfPlanePoint& Curve::circle_center() const {
    if (kind_ != CurveKind::Circle) kind_mismatch("circle_center");
    return p0_;
}
double Curve::circle_radius() const {
    if (kind_ != CurveKind::Circle) kind_mismatch("circle_radius");
    return r_;
}
double Curve::cassinian_a() const {
    if (kind_ != CurveKind::CassinianOval) kind_mismatch("cassinian_a");
    return a_;
}
double Curve::cassinian_b() const {
    if (kind_ != CurveKind::CassinianOval) kind_mismatch("cassinian_b");
    return b_;
}
double Curve::cassinian_translate() const {
    if (kind_ != CurveKind::CassinianOval) kind_mismatch("cassinian_translate");
    return tr_;
}
const HalfPlanePoint& Curve::rectangle_lower_left() const {
    if (kind_ != CurveKind::RectangleBoundary) kind_mismatch("rectangle_lower_left");
    return p0_;
}
const HalfPlanePoint& Curve::rectangle_upper_right() const {
    if (kind_ != CurveKind::RectangleBoundary) kind_mismatch("rectangle_upper_right");
    return p1_;
}
const std::vector<HalfPlanePoint>& Curve::polyline_vertices() const {
    if (kind_ != CurveKind::Polyline) kind_mismatch("polyline_vertices");
    return verts_;
}

HalfPlanePoint curve_point(const Curve& curve, double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw domain_error("curve_point: t must lie in [0,1]");

    switch (curve.kind_) {
        case CurveKind::Segment:
            return lerp(curve.p0_, curve.p1_, t);

        case CurveKind::Circle: {
            const double th = 2.0 * kPi * (t == 1.0 ? 0.0 : t);
            return clamp_axis({curve.p0_.x + curve.r_ * std::cos(th),
                               curve.p0_.y + curve.r_ * std::sin(th)});
        }

        case CurveKind::CassinianOval: {
            const double a = curve.a_, b = curve.b_;
            double theta, branch;
            if (b >= a) {
                theta = 2.0 * kPi * (t == 1.0 ? 0.0 : t);
                branch = 1.0;
            } else {
                // Right loop: sweep the outer radius from -theta_m to +theta_m,
                // then the inner radius back; the branches meet at +-theta_m.
                const double theta_m = 0.5 * std::asin(std::min((b * b) / (a * a), 1.0));
                const double u = 2.0 * (t == 1.0 ? 0.0 : t);
                if (u <= 1.0) {
                    theta = theta_m * (2.0 * u - 1.0);
                    branch = 1.0;
                } else {
                    theta = theta_m * (3.0 - 2.0 * u);
                    branch = -1.0;
                }
            }
            const double rho = cassini_radius(a, b, theta, branch);
            return clamp_axis({curve.tr_ + rho * std::cos(theta), rho * std::sin(theta)});
        }

        case CurveKind::RectangleBoundary: {
            const double w = curve.p1_.x - curve.p0_.x;
            const double h = curve.p1_.y - curve.p0_.y;
            const double per = 2.0 * (w + h);
            double sarc = (t == 1.0 ? 0.0 : t) * per;
            // Counterclockwise from the lower-left corner.
            if (sarc <= w) return {curve.p0_.x + sarc, curve.p0_.y};
            sarc -= w;
            if (sarc <= h) return {curve.p1_.x, curve.p0_.y + sarc};
            sarc -= h;
            if (sarc <= w) return {curve.p1_.x - sarc, curve.p1_.y};
            sarc -= w;
            return {curve.p0_.x, curve.p1_.y - std::min(sarc, h)};
        }

        case CurveKind::Polyline:
            return walk_polyline(curve.verts_, curve.cumlen_, t);
    }
    throw domain_error("curve_point: unknown curve kind");
}

SurfacePoint3 lift_to_3d(const HalfPlanePoint& z, double phi) {
    return {z.x * std::cos(phi), z.x * std::sin(phi), z.y};
}

}  // namespace riesz
