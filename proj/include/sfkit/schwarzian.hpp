#pragma once

#include <array>
#include <utility>

#include "sfkit/geom.hpp"

namespace sfkit {

struct NotParabolic : Error { using Error::Error; };
struct NonRealSchwarzian : Error { using Error::Error; };
struct NonRealIncrement : Error { using Error::Error; };
struct SchwarzianOutOfRange : Error { using Error::Error; };

/// Ordered triple of mutually tangent circles with pairwise disjoint
/// interiors: the Moebius transformation sending the base tangencies
/// (1, omega, omega^2) to this triple's tangencies must carry the base
/// circles onto these oriented circles. (A planar cross product of the
/// tangency points is not Moebius invariant — faces whose interstice wraps
/// through infinity flip its sign — so validity is checked through that map.)
/// Tangency i sits between circles i and i+1 (mod 3).
class FaceTriple {
public:
    FaceTriple(const GenCircle& c1, const GenCircle& c2, const GenCircle& c3, double tol = 1e-9);

    const GenCircle& circle(int i) const { return circles_[i]; }
    const ExtPoint& tangency(int i) const { return tangencies_[i]; }

    /// Normalized Moebius from the base face onto this face.
    const Mobius& from_base() const { return from_base_; }

private:
    std::array<GenCircle, 3> circles_;
    std::array<ExtPoint, 3> tangencies_;
    Mobius from_base_;
};

/// Four circles {c_v, c_w | c_a, c_b} forming faces f = (c_v, c_w, c_a) and
/// g = (c_w, c_v, c_b) that share the edge (c_v, c_w).
struct Patch {
    GenCircle c_v, c_w, c_a, c_b;

    FaceTriple face_f(double tol = 1e-9) const { return FaceTriple(c_v, c_w, c_a, tol); }
    FaceTriple face_g(double tol = 1e-9) const { return FaceTriple(c_w, c_v, c_b, tol); }

    /// Tangency point of the shared edge.
    ExtPoint edge_tangency(double tol = 1e-9) const { return tangency_point(c_v, c_w, tol); }

    /// Edge orientation swap: {c_w, c_v | c_b, c_a}.
    Patch reversed_edge() const { return {c_w, c_v, c_b, c_a}; }
};

/// The base patch: two contiguous equilateral tangent triples of radius
/// sqrt(3), with distinguished edge tangency at z = 1 and the fourth circle
/// centered at x = 4. Face tangencies of base_face_f() are the cube roots of
/// unity.
const GenCircle& base_circle_v();
const GenCircle& base_circle_w();
const GenCircle& base_circle_a();
const GenCircle& base_circle_b();
const FaceTriple& base_face_f();
const FaceTriple& base_face_g();
const Patch& base_patch();

/// M_s = I + s [[1,-1],[1,-1]].
Mobius schwarzian_matrix(double s);

/// Normalized Moebius transformation carrying `from` onto `to` (tangency
/// points to tangency points, hence circles to circles).
Mobius face_mobius(const FaceTriple& from, const FaceTriple& to);

FaceTriple apply_mobius(const Mobius& m, const FaceTriple& f);
Patch apply_mobius(const Mobius& m, const Patch& p);

/// The edge derivative of a map between two patches: the parabolic
/// M = m_g^{-1} m_f normalized to trace +2, written as
/// M = I + sigma [[t, -t^2], [1, -t]] at the domain edge tangency t. eta is
/// the outward unit tangent of the domain edge at t (sigma is a real multiple
/// of conj(eta)).
struct EdgeDerivative {
    Mobius M;
    Complex sigma;
    ExtPoint t_e;
    Complex eta;
};

EdgeDerivative edge_derivative(const Patch& domain, const Patch& image);

/// The real Moebius invariant s of a patch, measured against the base patch:
/// m_g^{-1} m_f = M_s where m_f(base f) = f and m_g(base g) = g. Throws
/// NonRealSchwarzian when the extracted entry has imaginary residue > 1e-8.
double intrinsic_schwarzian(const Patch& p);

/// The unique circle tangent to f's first two circles, opposite the third,
/// whose patch has the given schwarzian: c_b = (m_f M_s^{-1})(C_b).
/// Requires s < 1.
GenCircle place_by_schwarzian(const FaceTriple& f, double s);

/// s' = s + sigma / (c+d)^2 for the face Moebius m (normalized det 1) from
/// the base face onto the domain face. The increment must be real to 1e-9.
double schwarzian_transfer(double s, Complex sigma, const Mobius& m);

/// Both sides of the discrete chain rule for precomposition by m:
/// lhs = edge derivative of (m^{-1}(domain) -> image); rhs = sigma * m'(tau)
/// with tau = m^{-1}(t_e). They agree to 1e-8 on valid inputs.
std::pair<Complex, Complex> chain_rule_check(const Patch& domain, const Patch& image,
                                             const Mobius& m);

}  // namespace sfkit
