#include "sfkit/schwarzian.hpp"

#include <cmath>

namespace sfkit {

namespace {

const Complex kOmega(-0.5, kSqrt3 / 2.0);   // primitive cube root of unity
const Complex kOmega2(-0.5, -kSqrt3 / 2.0);

const GenCircle& raw_base_v() {
    static const GenCircle c = GenCircle::circle(Complex(1.0, -kSqrt3), kSqrt3);
    return c;
}
const GenCircle& raw_base_w() {
    static const GenCircle c = GenCircle::circle(Complex(1.0, kSqrt3), kSqrt3);
    return c;
}
const GenCircle& raw_base_a() {
    static const GenCircle c = GenCircle::circle(Complex(-2.0, 0.0), kSqrt3);
    return c;
}

}  // namespace

FaceTriple::FaceTriple(const GenCircle& c1, const GenCircle& c2, const GenCircle& c3, double tol)
    : circles_{c1, c2, c3},
      tangencies_{tangency_point(c1, c2, tol), tangency_point(c2, c3, tol),
                  tangency_point(c3, c1, tol)} {
    from_base_ = mobius_from_points(ExtPoint(Complex(1.0, 0.0)), ExtPoint(kOmega), ExtPoint(kOmega2),
                                    tangencies_[0], tangencies_[1], tangencies_[2]);
    // Interior-consistency gate: a flipped or overlapping interior moves the
    // mapped base circles by O(1); fit conditioning on extreme patches stays
    // orders of magnitude below this threshold.
    const GenCircle* bases[3] = {&raw_base_v(), &raw_base_w(), &raw_base_a()};
    for (int i = 0; i < 3; ++i) {
        if (circle_distance(apply_mobius(from_base_, *bases[i]), circles_[i]) > 1e-3)
            throw DegenerateTriple("FaceTriple: triple is not a Moebius image of the base face");
    }
}

namespace {

struct BaseData {
    GenCircle cv, cw, ca, cb;
    FaceTriple f, g;
    Patch patch;

    BaseData()
        : cv(raw_base_v()),
          cw(raw_base_w()),
          ca(raw_base_a()),
          cb(GenCircle::circle(Complex(4.0, 0.0), kSqrt3)),
          f(cv, cw, ca),
          g(cw, cv, cb),
          patch{cv, cw, ca, cb} {}
};

const BaseData& base() {
    static const BaseData data;
    return data;
}

}  // namespace

const GenCircle& base_circle_v() { return base().cv; }
const GenCircle& base_circle_w() { return base().cw; }
const GenCircle& base_circle_a() { return base().ca; }
const GenCircle& base_circle_b() { return base().cb; }
const FaceTriple& base_face_f() { return base().f; }
const FaceTriple& base_face_g() { return base().g; }
const Patch& base_patch() { return base().patch; }

Mobius schwarzian_matrix(double s) {
    return {Complex(1.0 + s), Complex(-s), Complex(s), Complex(1.0 - s)};
}

Mobius face_mobius(const FaceTriple& from, const FaceTriple& to) {
    return normalize_mobius(to.from_base() * from.from_base().inverse());
}

FaceTriple apply_mobius(const Mobius& m, const FaceTriple& f) {
    return FaceTriple(apply_mobius(m, f.circle(0)), apply_mobius(m, f.circle(1)),
                      apply_mobius(m, f.circle(2)));
}

Patch apply_mobius(const Mobius& m, const Patch& p) {
    return {apply_mobius(m, p.c_v), apply_mobius(m, p.c_w), apply_mobius(m, p.c_a),
            apply_mobius(m, p.c_b)};
}

EdgeDerivative edge_derivative(const Patch& domain, const Patch& image) {
    Mobius m_f = face_mobius(domain.face_f(), image.face_f());
    Mobius m_g = face_mobius(domain.face_g(), image.face_g());
    Mobius M = normalize_mobius(m_g.inverse() * m_f);

    Complex tr = M.trace();
    if (std::abs(tr * tr - 4.0) > 1e-8)
        throw NotParabolic("edge_derivative: edge map is not parabolic");

    ExtPoint t_e = domain.edge_tangency();
    Complex sigma;
    if (t_e.is_infinity()) {
        // Fixed point at infinity: M = [[1, beta], [0, 1]]. Conjugate by
        // z -> -1/z, which moves the tangency to 0 and sigma to -beta.
        sigma = -M.b;
    } else {
        sigma = M.c;
    }

    // Outward unit tangent of the domain edge, carried from the base edge.
    Mobius mu_f = face_mobius(base_face_f(), domain.face_f());
    Complex deriv = mu_f.derivative(Complex(1.0, 0.0));
    Complex eta = deriv / std::abs(deriv);

    return {M, sigma, t_e, eta};
}

double intrinsic_schwarzian(const Patch& p) {
    Mobius mu_f = face_mobius(base_face_f(), p.face_f());
    Mobius mu_g = face_mobius(base_face_g(), p.face_g());
    Mobius M = normalize_mobius(mu_g.inverse() * mu_f);

    Complex s = M.c;
    if (std::abs(std::imag(s)) > 1e-8 * std::max(1.0, std::abs(s)))
        throw NonRealSchwarzian("intrinsic_schwarzian: extracted entry is not real");
    // Structural check against M_s.
    double sr = std::real(s);
    Mobius ms = schwarzian_matrix(sr);
    double resid = std::abs(M.a - ms.a) + std::abs(M.b - ms.b) + std::abs(M.c - ms.c) +
                   std::abs(M.d - ms.d);
    if (resid > 1e-7 * (1.0 + std::abs(sr)))
        throw NonRealSchwarzian("intrinsic_schwarzian: edge map is not of schwarzian form");
    return sr;
}

GenCircle place_by_schwarzian(const FaceTriple& f, double s) {
    if (!(s < 1.0))
        throw SchwarzianOutOfRange("place_by_schwarzian: requires s < 1");
    Mobius m_f = face_mobius(base_face_f(), f);
    Mobius ms_inv{Complex(1.0 - s), Complex(s), Complex(-s), Complex(1.0 + s)};
    return apply_mobius(m_f * ms_inv, base_circle_b());
}

double schwarzian_transfer(double s, Complex sigma, const Mobius& m) {
    Mobius n = normalize_mobius(m);
    Complex cd = n.c + n.d;
    Complex inc = sigma / (cd * cd);
    if (std::abs(std::imag(inc)) > 1e-9 * std::max(1.0, std::abs(inc)))
        throw NonRealIncrement("schwarzian_transfer: increment is not real");
    return s + std::real(inc);
}

std::pair<Complex, Complex> chain_rule_check(const Patch& domain, const Patch& image,
                                             const Mobius& m) {
    Mobius n = normalize_mobius(m);
    Patch pulled = apply_mobius(n.inverse(), domain);
    Complex lhs = edge_derivative(pulled, image).sigma;

    EdgeDerivative ed = edge_derivative(domain, image);
    ExtPoint tau = apply_mobius(n.inverse(), ed.t_e);
    if (tau.is_infinity())
        throw Error("chain_rule_check: pulled-back tangency at infinity");
    Complex rhs = ed.sigma * n.derivative(tau.value());
    return {lhs, rhs};
}

}  // namespace sfkit
