#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "sfkit/schwarzian.hpp"

namespace sfkit {

struct NonPositiveU : Error { using Error::Error; };
struct LayoutFailA : Error { using Error::Error; };  // penultimate petal is a half plane
struct LayoutFailB : Error { using Error::Error; };  // computed s0 >= 1
struct NoSolution : Error { using Error::Error; };
struct PoleOnCircle : Error { using Error::Error; };

struct ConstraintViolated : Error {
    int j;  // index of the first failing constraint polynomial
    ConstraintViolated(const std::string& msg, int j_) : Error(msg), j(j_) {}
};

/// Cyclic label of n positive values u_j = 1 - s_j, indexed modulo n.
class ULabel {
public:
    ULabel() = default;
    explicit ULabel(std::vector<double> u);
    static ULabel from_schwarzians(const std::vector<double>& s);

    int n() const { return static_cast<int>(u_.size()); }
    double u(int j) const { return u_[mod(j)]; }
    double s(int j) const { return 1.0 - u_[mod(j)]; }
    const std::vector<double>& values() const { return u_; }
    std::vector<double> schwarzians() const;

    /// Cyclic shift moving entry k to position 0.
    ULabel shifted(int k) const;
    /// Order reversal fixing entry 0.
    ULabel reversed() const;

private:
    int mod(int j) const {
        int m = j % n();
        return m < 0 ? m + n() : m;
    }
    std::vector<double> u_;
};

enum class Situation { S1, S2, S3, S4, HP };

struct LayoutStep {
    Situation situation;
    double delta;    // displacement to the new tangency (0 when a half plane appears)
    bool negative;   // the displacement is negative (wrapping)
};

/// One petal of a normalized flower. Petals are tangent to the center line
/// y = 0 from below; a half-plane petal is { y <= -2*level }.
struct Petal {
    bool half_plane = false;
    double t = 0;      // tangency with the center line
    double r = 0;      // euclidean radius
    double level = 0;  // half-plane petals only
};

/// An n-flower in normalized position: the center circle C is the upper half
/// plane, petal c_0 is the half plane y <= -2, and c_1 is the unit circle
/// tangent to C at 0. Consecutive petals are tangent.
struct NormalizedFlower {
    int n = 0;
    std::vector<Petal> petals;       // size n; petals[0] is c_0
    ULabel label;                    // full u label, set on completion
    std::vector<LayoutStep> trace;   // steps that placed c_2 .. c_{n-1}

    GenCircle center_circle() const;
    GenCircle petal_circle(int j) const;  // j modulo n

    /// The patch {c_j, C | c_{j-1}, c_{j+1}} for the spoke edge of petal j.
    Patch spoke_patch(int j) const;

    double tangency(int j) const { return petals[j].t; }
    double radius(int j) const { return petals[j].r; }
};

// Elementary placement formulas for the normalized layout. r_init may be
// infinity (a half-plane initial petal).

/// Petal adjacent to both half planes: tangency 2*sqrt(3)*u0, radius 1.
double end_petal_tangency(double u0);

struct SecondPetal {
    double t2, r2;
};
/// Petal after the unit petal c_1: t2 = 2/(sqrt(3) u1), r2 = t2^2/4.
SecondPetal second_petal(double u1);

struct StepResult {
    enum Outcome { Forward, HalfPlane, Backward } outcome;
    double delta = 0;  // displacement from the current petal's tangency
    double rho = 0;    // radius of the placed petal
};

/// Generic placement: current petal radius R (tangent at the local origin),
/// initial petal radius r_init behind it. delta = 2R/(sqrt(3)u - sqrt(R/r)),
/// rho = (sqrt(3)u/sqrt(R) - 1/sqrt(r))^{-2}. A vanishing denominator
/// (relative threshold 1e-9) yields a half plane; a negative one starts a
/// wrap.
StepResult petal_step(double u, double r_init, double R);

/// Placement when the previous displacement was negative: sqrt(R) -> -sqrt(R),
/// so delta = 2R/(sqrt(3)u + sqrt(R/r)) > 0.
StepResult wrapped_petal_step(double u, double r_init, double R);

/// Next tangency displacement after a half-plane petal: the new petal has
/// radius r_prev and lands at t_prev - 2*sqrt(3)*u_next*r_prev.
double half_plane_advance(double u_next, double r_prev);

/// Inverse placement: the u value of the spoke whose step, from a petal of
/// radius R with initial radius r_init, lands a petal of radius 1 at positive
/// displacement.
double closing_u(double r_init, double R);
/// Same when the step that produced R had a negative displacement.
double closing_u_wrapped(double r_init, double R);

/// Constraint polynomial C_j evaluated on the j-1 leading parameters:
/// C_2 = sqrt(3) u_1, C_3 = 3 u_1 u_2 - 1, C_{j+1} = sqrt(3) u_j C_j - C_{j-1}.
/// Equals 1/sqrt(r_j) while all constraints before it are positive.
double constraint_C(int j, const std::vector<double>& u_prefix);

/// Label completion function: U_n = (1 + C_{n-3}) / (sqrt(3) C_{n-2}) for
/// n >= 5 and U_4(x) = 2/(3x). Requires C_j > 0 for j = 2..n-2; throws
/// ConstraintViolated naming the first failure.
double u_fn(int n, const std::vector<double>& u_args);

/// The normalized Layout Process: petals c_2..c_{n-2} placed from the n-3
/// given parameters, closure forced with r_{n-1} = 1, and the remaining three
/// labels computed (u_{n-2} by the closing formulas, u_{n-1} and u_0 from the
/// closing patches). Throws LayoutFailA / LayoutFailB on the two exceptional
/// configurations.
NormalizedFlower layout_flower(int n, const std::vector<double>& u_params);

/// Full cyclic label from n-3 parameters: the closed-form completion when all
/// constraints hold, the forced-layout completion otherwise.
ULabel complete_label(int n, const std::vector<double>& u_params);

struct LabelVerdict {
    bool valid = false;
    bool fail_a = false;  // r_{n-1} != 1
    bool fail_b = false;  // s_{n-1} not realized
    bool fail_c = false;  // s_0 not realized
    std::string describe() const;
};

/// Lays out a full candidate s-label and reports which of the closure
/// conditions (a), (b), (c) fail. Throws SchwarzianOutOfRange if any s >= 1.
LabelVerdict verify_packing_label(const std::vector<double>& s_label);

struct FlowerClass {
    enum Kind { Univalent, UnBranched, Branched } kind = Univalent;
    int degree = 1;  // wrap count; >= 2 only for Branched
    std::vector<std::string> violations;
};

/// Classification per the flower criteria: un-branched iff all C_j > 0 for
/// j = 2..n-2; univalent iff additionally 1/sqrt(3) <= u_j <= (n-2)/sqrt(3)
/// for all j and r_j <= 1 in every cyclic normalization (closed comparisons,
/// tolerance 1e-9).
FlowerClass classify_flower(const NormalizedFlower& fl);

/// Number of times the petal chain wraps around the center: the flower is
/// mapped into the unit disc and the angles subtended by consecutive
/// tangency points are summed; d = total / 2*pi.
int wrap_count(const NormalizedFlower& fl);

struct RadiiFlower {
    double center_radius = 0;  // euclidean center radius before normalization
    NormalizedFlower flower;
};

/// Forward construction: euclidean flower with the given petal radii around a
/// center circle whose radius is solved by bisection so the angles sum to
/// 2*pi*d, then normalized; the full label is measured geometrically.
RadiiFlower flower_from_radii(const std::vector<double>& petal_radii, int wrap = 1);

/// Seeded log-uniform petal radii in [lo, hi]; the generator for every
/// randomized construction in the kit.
std::vector<double> random_radii(int n, std::mt19937_64& rng, double lo = 0.2, double hi = 5.0);

}  // namespace sfkit
