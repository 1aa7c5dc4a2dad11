#include "sfkit/geom.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace sfkit {

namespace {

double cross(Complex u, Complex v) { return std::imag(std::conj(u) * v); }

Complex normalize_dir(Complex v) {
    double n = std::abs(v);
    if (n == 0.0) throw Error("zero direction vector");
    return v / n;
}

// Circumcenter of three non-collinear points.
Complex circumcenter(Complex w1, Complex w2, Complex w3) {
    Complex a = w2 - w1, b = w3 - w1;
    double denom = 2.0 * cross(a, b);
    Complex xi = -Complex(0, 1) * (std::norm(a) * b - std::norm(b) * a) / denom;
    return w1 + xi;
}

// True if the cyclic order (s1, s2, s3) is increasing, i.e. matches the
// traversal direction of a line visited at these parameters.
bool cyclically_increasing(double s1, double s2, double s3) {
    return (s1 < s2 && s2 < s3) || (s3 < s1 && s1 < s2) || (s2 < s3 && s3 < s1);
}

}  // namespace

double chordal(const ExtPoint& p, const ExtPoint& q) {
    if (p.is_infinity() && q.is_infinity()) return 0.0;
    if (p.is_infinity()) return 2.0 / std::sqrt(1.0 + std::norm(q.value()));
    if (q.is_infinity()) return 2.0 / std::sqrt(1.0 + std::norm(p.value()));
    return 2.0 * std::abs(p.value() - q.value()) /
           std::sqrt((1.0 + std::norm(p.value())) * (1.0 + std::norm(q.value())));
}

GenCircle GenCircle::circle(Complex center, double radius, int orientation) {
    if (!(radius > 0.0)) throw Error("GenCircle: radius must be positive");
    GenCircle c;
    c.is_line = false;
    c.center = center;
    c.radius = radius;
    c.orientation = orientation >= 0 ? +1 : -1;
    return c;
}

GenCircle GenCircle::line(Complex point, Complex tangent, int orientation) {
    GenCircle c;
    c.is_line = true;
    c.point = point;
    c.tangent = normalize_dir(tangent);
    if (orientation < 0) c.tangent = -c.tangent;
    c.orientation = +1;
    return c;
}

double GenCircle::scale() const {
    if (is_line) {
        Complex foot = point - tangent * std::real(std::conj(tangent) * point);
        return 1.0 + std::abs(foot);
    }
    return std::abs(center) + radius;
}

bool GenCircle::on_boundary(const ExtPoint& p, double eps) const {
    if (p.is_infinity()) return is_line;
    if (is_line) return std::abs(cross(tangent, p.value() - point)) <= eps;
    return std::abs(std::abs(p.value() - center) - radius) <= eps;
}

bool GenCircle::contains(const ExtPoint& p) const {
    if (p.is_infinity()) return !is_line && orientation < 0;
    if (is_line) return cross(tangent, p.value() - point) > 0.0;
    bool inside = std::abs(p.value() - center) < radius;
    return inside == (orientation > 0);
}

Complex GenCircle::boundary_point(double t) const {
    if (is_line) return point + t * tangent;
    return center + radius * Complex(std::cos(t), std::sin(t));
}

GenCircle GenCircle::reversed() const {
    GenCircle c = *this;
    if (is_line)
        c.tangent = -c.tangent;
    else
        c.orientation = -c.orientation;
    return c;
}

double circle_distance(const GenCircle& c1, const GenCircle& c2) {
    // Coefficients (A, B, C) of A|z|^2 + 2 Re(conj(B) z) + C = 0 with the
    // interior on the negative side, normalized to a unit 4-vector.
    auto coeffs = [](const GenCircle& c) -> std::array<double, 4> {
        double A, C;
        Complex B;
        if (c.is_line) {
            A = 0.0;
            B = -Complex(0, 1) * c.tangent * 0.5;
            C = std::imag(c.point * std::conj(c.tangent));
        } else {
            A = 1.0;
            B = -c.center;
            C = std::norm(c.center) - c.radius * c.radius;
            if (c.orientation < 0) {
                A = -A;
                B = -B;
                C = -C;
            }
        }
        double n = std::sqrt(A * A + 2.0 * std::norm(B) + C * C);
        return {A / n, std::real(B) / n, std::imag(B) / n, C / n};
    };
    auto u = coeffs(c1), v = coeffs(c2);
    double s = 0;
    for (int i = 0; i < 4; ++i) s += (u[i] - v[i]) * (u[i] - v[i]);
    return std::sqrt(s);
}

Complex Mobius::derivative(Complex z) const {
    Complex den = c * z + d;
    return det() / (den * den);
}

Mobius operator*(const Mobius& m, const Mobius& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

Mobius normalize_mobius(const Mobius& m) {
    double mag = std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)});
    Complex det = m.det();
    if (std::abs(det) < 1e-14 * mag * mag || mag == 0.0)
        throw SingularMatrix("normalize_mobius: determinant vanishes");
    Complex s = std::sqrt(det);
    Mobius r{m.a / s, m.b / s, m.c / s, m.d / s};
    // Parabolic representatives get the trace = +2 sign.
    if (std::abs(r.trace() + 2.0) < 1e-8) r = {-r.a, -r.b, -r.c, -r.d};
    return r;
}

ExtPoint apply_mobius(const Mobius& m, const ExtPoint& p) {
    if (p.is_infinity()) {
        if (std::abs(m.c) <= 1e-13 * std::abs(m.a)) return ExtPoint::infinity();
        return ExtPoint(m.a / m.c);
    }
    Complex z = p.value();
    Complex num = m.a * z + m.b;
    Complex den = m.c * z + m.d;
    double rel = std::abs(m.c * z) + std::abs(m.d);
    if (std::abs(den) <= 1e-13 * rel || (rel == 0.0)) return ExtPoint::infinity();
    return ExtPoint(num / den);
}

namespace {

// Matrix sending (z1, z2, z3) to (0, 1, infinity).
Mobius to_standard_triple(const ExtPoint& p1, const ExtPoint& p2, const ExtPoint& p3) {
    if (p1.is_infinity()) {
        Complex z2 = p2.value(), z3 = p3.value();
        return {Complex(0), z2 - z3, Complex(1), -z3};
    }
    if (p2.is_infinity()) {
        Complex z1 = p1.value(), z3 = p3.value();
        return {Complex(1), -z1, Complex(1), -z3};
    }
    if (p3.is_infinity()) {
        Complex z1 = p1.value(), z2 = p2.value();
        return {Complex(1), -z1, Complex(0), z2 - z1};
    }
    Complex z1 = p1.value(), z2 = p2.value(), z3 = p3.value();
    return {z2 - z3, -z1 * (z2 - z3), z2 - z1, -z3 * (z2 - z1)};
}

}  // namespace

Mobius mobius_from_points(const ExtPoint& z1, const ExtPoint& z2, const ExtPoint& z3,
                          const ExtPoint& w1, const ExtPoint& w2, const ExtPoint& w3) {
    const ExtPoint* zs[3] = {&z1, &z2, &z3};
    const ExtPoint* ws[3] = {&w1, &w2, &w3};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            if (chordal(*zs[i], *zs[j]) < 1e-12)
                throw DegenerateTriple("mobius_from_points: coincident source points");
            if (chordal(*ws[i], *ws[j]) < 1e-12)
                throw DegenerateTriple("mobius_from_points: coincident target points");
        }
    Mobius tz = to_standard_triple(z1, z2, z3);
    Mobius tw = to_standard_triple(w1, w2, w3);
    return normalize_mobius(tw.inverse() * tz);
}

GenCircle apply_mobius(const Mobius& m, const GenCircle& c) {
    // Pole of m (preimage of infinity).
    ExtPoint pole = apply_mobius(m.inverse(), ExtPoint::infinity());
    double eps_line = 1e-10 * c.scale();
    bool image_is_line = c.on_boundary(pole, eps_line);

    // Three boundary samples in positive traversal order, away from the pole.
    std::array<ExtPoint, 3> samples;
    if (c.is_line) {
        double L = std::max(1.0, std::abs(c.point));
        if (pole.is_infinity()) {
            samples = {ExtPoint(c.boundary_point(-L)), ExtPoint(c.boundary_point(0.0)),
                       ExtPoint(c.boundary_point(L))};
        } else {
            double tq = std::real(std::conj(c.tangent) * (pole.value() - c.point));
            samples = {ExtPoint(c.boundary_point(tq + L)), ExtPoint(c.boundary_point(tq + 2.0 * L)),
                       ExtPoint::infinity()};
        }
    } else {
        double base = 0.0;
        if (!pole.is_infinity()) base = std::arg(pole.value() - c.center);
        double step = (c.orientation > 0) ? kPi / 2.0 : -kPi / 2.0;
        samples = {ExtPoint(c.boundary_point(base + step)), ExtPoint(c.boundary_point(base + 2.0 * step)),
                   ExtPoint(c.boundary_point(base + 3.0 * step))};
    }

    std::array<Complex, 3> w;
    for (int i = 0; i < 3; ++i) {
        ExtPoint img = apply_mobius(m, samples[i]);
        if (img.is_infinity())
            throw Error("apply_mobius: sample hit the pole of the transformation");
        w[i] = img.value();
    }

    if (image_is_line) {
        // Direction from the farthest-apart image pair, oriented by the
        // cyclic order of the traversal.
        double d01 = std::abs(w[1] - w[0]), d02 = std::abs(w[2] - w[0]), d12 = std::abs(w[2] - w[1]);
        Complex dir;
        if (d01 >= d02 && d01 >= d12)
            dir = normalize_dir(w[1] - w[0]);
        else if (d02 >= d12)
            dir = normalize_dir(w[2] - w[0]);
        else
            dir = normalize_dir(w[2] - w[1]);
        double s1 = std::real(std::conj(dir) * (w[0] - w[0]));
        double s2 = std::real(std::conj(dir) * (w[1] - w[0]));
        double s3 = std::real(std::conj(dir) * (w[2] - w[0]));
        if (!cyclically_increasing(s1, s2, s3)) dir = -dir;
        // Anchor at the foot of the origin for a stable representative.
        Complex foot = w[0] + dir * std::real(std::conj(dir) * (-w[0]));
        return GenCircle::line(foot, dir);
    }

    Complex z0 = circumcenter(w[0], w[1], w[2]);
    double rho = (std::abs(w[0] - z0) + std::abs(w[1] - z0) + std::abs(w[2] - z0)) / 3.0;
    int orient = cross(w[1] - w[0], w[2] - w[0]) > 0.0 ? +1 : -1;
    return GenCircle::circle(z0, rho, orient);
}

ExtPoint tangency_point(const GenCircle& c1, const GenCircle& c2, double tol) {
    double eps = tol * std::max(c1.scale(), c2.scale());

    if (c1.is_line && c2.is_line) {
        if (std::abs(cross(c1.tangent, c2.tangent)) <= 1e-12) {
            double sep = std::abs(cross(c1.tangent, c2.point - c1.point));
            if (sep <= eps)
                throw NotTangent("tangency_point: coincident lines", 0.0);
            return ExtPoint::infinity();
        }
        double sep = std::abs(cross(c1.tangent, c2.point - c1.point));
        throw NotTangent("tangency_point: lines cross", sep);
    }

    if (c1.is_line || c2.is_line) {
        const GenCircle& ln = c1.is_line ? c1 : c2;
        const GenCircle& ci = c1.is_line ? c2 : c1;
        Complex foot = ln.point + ln.tangent * std::real(std::conj(ln.tangent) * (ci.center - ln.point));
        double dist = std::abs(ci.center - foot);
        double gap = dist - ci.radius;
        if (std::abs(gap) > eps)
            throw NotTangent("tangency_point: circle and line are not tangent", gap);
        return ExtPoint(foot);
    }

    Complex delta = c2.center - c1.center;
    double dist = std::abs(delta);
    if (dist <= eps)
        throw NotTangent("tangency_point: concentric circles", dist - std::abs(c1.radius - c2.radius));
    Complex u = delta / dist;
    double ext_gap = dist - (c1.radius + c2.radius);
    double int_gap = std::abs(c1.radius - c2.radius) - dist;
    if (std::abs(ext_gap) <= eps)
        return ExtPoint(c1.center + c1.radius * u);
    if (std::abs(int_gap) <= eps) {
        if (c1.radius >= c2.radius) return ExtPoint(c1.center + c1.radius * u);
        return ExtPoint(c2.center - c2.radius * u);
    }
    double gap = std::abs(ext_gap) < std::abs(int_gap) ? ext_gap : -int_gap;
    throw NotTangent("tangency_point: circles are not tangent", gap);
}

}  // namespace sfkit
