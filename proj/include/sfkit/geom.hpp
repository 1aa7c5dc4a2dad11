#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace sfkit {

using Complex = std::complex<double>;

inline constexpr double kSqrt3 = 1.7320508075688772935274463;
inline constexpr double kPi = 3.1415926535897932384626434;

/// Base class for all sfkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularMatrix : Error { using Error::Error; };
struct DegenerateTriple : Error { using Error::Error; };

struct NotTangent : Error {
    double gap;  // signed: positive = separated, negative = overlapping
    NotTangent(const std::string& msg, double g) : Error(msg), gap(g) {}
};

/// A point on the Riemann sphere: a finite complex value or the point at
/// infinity. Infinity is an explicit variant, never a large float.
class ExtPoint {
public:
    ExtPoint() : v_(0.0, 0.0), inf_(false) {}
    ExtPoint(Complex z) : v_(z), inf_(false) {}
    ExtPoint(double x) : v_(x, 0.0), inf_(false) {}

    static ExtPoint infinity() {
        ExtPoint p;
        p.inf_ = true;
        return p;
    }

    bool is_infinity() const { return inf_; }

    /// Finite value; only valid when !is_infinity().
    Complex value() const {
        if (inf_) throw Error("ExtPoint: value() on the point at infinity");
        return v_;
    }

private:
    Complex v_;
    bool inf_;
};

/// Chordal (spherical) distance between two points, in [0, 2].
double chordal(const ExtPoint& p, const ExtPoint& q);

/// A circle or an oriented line on the Riemann sphere. Lines model circles
/// through infinity; with an orientation they denote half planes. Positive
/// traversal is counterclockwise for circles and along `tangent` for lines;
/// the interior lies on the left of positive traversal. Lines are
/// canonicalized to orientation +1 by flipping the tangent.
struct GenCircle {
    bool is_line = false;
    Complex center;    // circle only
    double radius = 0; // circle only, > 0
    Complex point;     // line only
    Complex tangent;   // line only, |tangent| = 1
    int orientation = +1;

    static GenCircle circle(Complex center, double radius, int orientation = +1);
    static GenCircle line(Complex point, Complex tangent, int orientation = +1);

    /// Rough magnitude of the configuration: |center|+radius for circles,
    /// 1 + distance of the line from the origin for lines.
    double scale() const;

    /// True if p lies on the boundary within eps (infinity lies on every line).
    bool on_boundary(const ExtPoint& p, double eps) const;

    /// True if p lies in the open interior.
    bool contains(const ExtPoint& p) const;

    /// A boundary point: circles are parameterized by angle, lines by
    /// signed arclength from `point`.
    Complex boundary_point(double t) const;

    /// Same oriented circle with the interior swapped to the other side.
    GenCircle reversed() const;
};

/// Metric on oriented generalized circles: Euclidean distance between their
/// normalized Hermitian coefficient vectors. Zero iff the oriented circles
/// coincide; used for holonomy/placement discrepancies.
double circle_distance(const GenCircle& c1, const GenCircle& c2);

/// Moebius transformation z -> (az+b)/(cz+d) as a 2x2 complex matrix.
struct Mobius {
    Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

    Mobius() = default;
    Mobius(Complex a_, Complex b_, Complex c_, Complex d_) : a(a_), b(b_), c(c_), d(d_) {}

    static Mobius identity() { return {}; }

    Complex det() const { return a * d - b * c; }
    Complex trace() const { return a + d; }

    /// Matrix inverse up to a scalar: (d, -b, -c, a).
    Mobius inverse() const { return {d, -b, -c, a}; }

    /// Derivative at a finite point: det / (cz+d)^2.
    Complex derivative(Complex z) const;
};

Mobius operator*(const Mobius& m, const Mobius& n);

/// Scale to det = 1. If the result is parabolic (|trace| = 2) the sign is
/// chosen so trace = +2. Throws SingularMatrix when det vanishes relative to
/// the entry magnitudes.
Mobius normalize_mobius(const Mobius& m);

/// The unique normalized Moebius transformation with M(z_i) = w_i. Either
/// triple may contain infinity. Throws DegenerateTriple on coincident inputs.
Mobius mobius_from_points(const ExtPoint& z1, const ExtPoint& z2, const ExtPoint& z3,
                          const ExtPoint& w1, const ExtPoint& w2, const ExtPoint& w3);

/// Apply to a point; c*z+d ~ 0 (relative threshold 1e-13) maps to infinity.
ExtPoint apply_mobius(const Mobius& m, const ExtPoint& p);

/// Apply to a generalized circle. The image is computed from three
/// well-separated boundary samples kept away from the pole of m, then refit;
/// it is a line exactly when the preimage of infinity lies on the boundary
/// (tolerance 1e-10 relative). Orientation carries over.
GenCircle apply_mobius(const Mobius& m, const GenCircle& c);

/// The single common point of two externally tangent generalized circles.
/// Two parallel lines meet at infinity. Throws NotTangent (with the signed
/// gap) when the circles are not tangent within tol * scale.
ExtPoint tangency_point(const GenCircle& c1, const GenCircle& c2, double tol = 1e-9);

}  // namespace sfkit
