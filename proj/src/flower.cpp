#include "sfkit/flower.hpp"

#include <algorithm>
#include <cmath>

namespace sfkit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

GenCircle upper_half_plane() { return GenCircle::line(Complex(0, 0), Complex(1, 0)); }

GenCircle petal_as_circle(const Petal& p) {
    if (p.half_plane)
        return GenCircle::line(Complex(0, -2.0 * p.level), Complex(-1, 0));
    return GenCircle::circle(Complex(p.t, -p.r), p.r);
}

}  // namespace

ULabel::ULabel(std::vector<double> u) : u_(std::move(u)) {
    if (u_.size() < 3) throw Error("ULabel: need at least 3 entries");
    for (double v : u_)
        if (!(v > 0.0)) throw NonPositiveU("ULabel: entries must be positive");
}

ULabel ULabel::from_schwarzians(const std::vector<double>& s) {
    std::vector<double> u(s.size());
    for (size_t i = 0; i < s.size(); ++i) u[i] = 1.0 - s[i];
    return ULabel(std::move(u));
}

std::vector<double> ULabel::schwarzians() const {
    std::vector<double> s(u_.size());
    for (size_t i = 0; i < u_.size(); ++i) s[i] = 1.0 - u_[i];
    return s;
}

ULabel ULabel::shifted(int k) const {
    std::vector<double> v(u_.size());
    for (int j = 0; j < n(); ++j) v[j] = u_[mod(k + j)];
    return ULabel(std::move(v));
}

ULabel ULabel::reversed() const {
    std::vector<double> v(u_.size());
    for (int j = 0; j < n(); ++j) v[j] = u_[mod(-j)];
    return ULabel(std::move(v));
}

GenCircle NormalizedFlower::center_circle() const { return upper_half_plane(); }

GenCircle NormalizedFlower::petal_circle(int j) const {
    int m = ((j % n) + n) % n;
    return petal_as_circle(petals[m]);
}

Patch NormalizedFlower::spoke_patch(int j) const {
    return {petal_circle(j), center_circle(), petal_circle(j - 1), petal_circle(j + 1)};
}

double end_petal_tangency(double u0) {
    if (!(u0 > 0.0)) throw NonPositiveU("end_petal_tangency: u must be positive");
    return 2.0 * kSqrt3 * u0;
}

SecondPetal second_petal(double u1) {
    if (!(u1 > 0.0)) throw NonPositiveU("second_petal: u must be positive");
    double t2 = 2.0 / (kSqrt3 * u1);
    return {t2, t2 * t2 / 4.0};
}

StepResult petal_step(double u, double r_init, double R) {
    if (!(u > 0.0)) throw NonPositiveU("petal_step: u must be positive");
    if (!(R > 0.0) || !(r_init > 0.0)) throw Error("petal_step: invalid radii");
    double q = std::sqrt(R / r_init);  // 0 when the initial petal is a half plane
    double denom = kSqrt3 * u - q;
    if (std::abs(denom) <= 1e-9 * q) return {StepResult::HalfPlane, 0.0, 0.0};
    StepResult res;
    res.outcome = denom > 0.0 ? StepResult::Forward : StepResult::Backward;
    res.delta = 2.0 * R / denom;
    res.rho = R / (denom * denom);
    return res;
}

StepResult wrapped_petal_step(double u, double r_init, double R) {
    if (!(u > 0.0)) throw NonPositiveU("wrapped_petal_step: u must be positive");
    if (!(R > 0.0) || !(r_init > 0.0)) throw Error("wrapped_petal_step: invalid radii");
    double q = std::sqrt(R / r_init);
    double denom = kSqrt3 * u + q;
    return {StepResult::Forward, 2.0 * R / denom, R / (denom * denom)};
}

double half_plane_advance(double u_next, double r_prev) {
    if (!(u_next > 0.0)) throw NonPositiveU("half_plane_advance: u must be positive");
    return -2.0 * kSqrt3 * u_next * r_prev;
}

double closing_u(double r_init, double R) {
    if (!(R > 0.0) || !(r_init > 0.0)) throw Error("closing_u: invalid radii");
    return (std::sqrt(R) + std::sqrt(R / r_init)) / kSqrt3;
}

double closing_u_wrapped(double r_init, double R) {
    if (!(R > 0.0) || !(r_init > 0.0)) throw Error("closing_u_wrapped: invalid radii");
    return (std::sqrt(R) - std::sqrt(R / r_init)) / kSqrt3;
}

double constraint_C(int j, const std::vector<double>& u_prefix) {
    if (j < 2 || static_cast<int>(u_prefix.size()) < j - 1)
        throw Error("constraint_C: need j >= 2 and j-1 parameters");
    double prev = 0.0, cur = 1.0;  // C_0 = 0 (r_0 infinite), C_1 = 1 (r_1 = 1)
    for (int k = 1; k <= j - 1; ++k) {
        double next = kSqrt3 * u_prefix[k - 1] * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double u_fn(int n, const std::vector<double>& u_args) {
    if (n < 4) throw Error("u_fn: need n >= 4");
    if (static_cast<int>(u_args.size()) != n - 3) throw Error("u_fn: need n-3 arguments");
    // Run the recurrence once, checking positivity along the way.
    double prev = 0.0, cur = 1.0;
    double c_nm3 = 1.0;  // C_{n-3}; for n = 4 this is C_1 = 1
    for (int j = 2; j <= n - 2; ++j) {
        double next = kSqrt3 * u_args[j - 2] * cur - prev;
        prev = cur;
        cur = next;
        if (!(cur > 0.0))
            throw ConstraintViolated("u_fn: constraint polynomial not positive at j=" +
                                         std::to_string(j),
                                     j);
        if (j == n - 3) c_nm3 = cur;
    }
    return (1.0 + c_nm3) / (kSqrt3 * cur);
}

namespace {

// Shared engine: places petals c_2 .. c_last from spoke parameters
// u_1 .. u_{last-1} starting from the normalized c_0, c_1.
struct LayoutEngine {
    std::vector<Petal> petals;
    std::vector<LayoutStep> trace;       // aligned with petals 2..
    std::vector<bool> step_negative;     // per petal index, displacement sign

    LayoutEngine() {
        petals.push_back({true, 0, 0, 1.0});  // c_0: half plane y <= -2
        petals.push_back({false, 0.0, 1.0, 0});
        step_negative = {false, false};
    }

    void place(double u) {
        int j = static_cast<int>(petals.size());
        const Petal shaded = petals[j - 1];  // copies: push_back reallocates
        const Petal init = petals[j - 2];
        if (shaded.half_plane) {
            // Petal beyond a half plane: same radius as the petal before it.
            double t = init.t + half_plane_advance(u, init.r);
            petals.push_back({false, t, init.r, 0});
            trace.push_back({Situation::S1, t - init.t, true});
            step_negative.push_back(true);
            return;
        }
        double r_init = init.half_plane ? kInf : init.r;
        double R = shaded.r;
        bool wrapped = step_negative[j - 1];
        StepResult res = wrapped ? wrapped_petal_step(u, r_init, R) : petal_step(u, r_init, R);
        Situation sit = wrapped ? Situation::S4 : (j == 2 ? Situation::S2 : Situation::S3);
        if (res.outcome == StepResult::HalfPlane) {
            petals.push_back({true, 0, 0, R});
            trace.push_back({Situation::HP, 0.0, true});
            step_negative.push_back(true);
            return;
        }
        petals.push_back({false, shaded.t + res.delta, res.rho, 0});
        trace.push_back({sit, res.delta, res.delta < 0.0});
        step_negative.push_back(res.delta < 0.0);
    }
};

NormalizedFlower finish_flower(int n, LayoutEngine&& eng, const std::vector<double>& u_params) {
    // Force closure: c_{n-1} has radius 1 tangent to c_{n-2}.
    if (eng.petals[n - 2].half_plane)
        throw LayoutFailA("layout_flower: c_{n-2} is tangent to the center at infinity");
    double r_pen = eng.petals[n - 2].r;
    double t_last = eng.petals[n - 2].t + 2.0 * std::sqrt(r_pen);
    eng.petals.push_back({false, t_last, 1.0, 0});
    eng.trace.push_back({Situation::S3, 2.0 * std::sqrt(r_pen), false});
    if (!(t_last > 0.0))
        throw LayoutFailB("layout_flower: computed s0 is not below 1");

    NormalizedFlower fl;
    fl.n = n;
    fl.petals = std::move(eng.petals);
    fl.trace = std::move(eng.trace);

    // u_{n-2} by the closing formula (wrapped variant when the step that
    // produced r_{n-2} wrapped), u_{n-1} and u_0 from the closing patches.
    double r_init = fl.petals[n - 3].half_plane ? kInf : fl.petals[n - 3].r;
    bool wrapped = eng.step_negative[n - 2];
    double u_pen = wrapped ? closing_u_wrapped(r_init, r_pen) : closing_u(r_init, r_pen);

    double u_last = 1.0 - intrinsic_schwarzian(fl.spoke_patch(n - 1));
    double u_zero = 1.0 - intrinsic_schwarzian(fl.spoke_patch(0));

    std::vector<double> u(n);
    u[0] = u_zero;
    for (int j = 1; j <= n - 3; ++j) u[j] = u_params[j - 1];
    u[n - 2] = u_pen;
    u[n - 1] = u_last;
    fl.label = ULabel(std::move(u));
    return fl;
}

}  // namespace

NormalizedFlower layout_flower(int n, const std::vector<double>& u_params) {
    if (n < 4) throw Error("layout_flower: need n >= 4");
    if (static_cast<int>(u_params.size()) != n - 3)
        throw Error("layout_flower: need n-3 parameters");
    for (double v : u_params)
        if (!(v > 0.0)) throw NonPositiveU("layout_flower: parameters must be positive");

    LayoutEngine eng;
    for (int j = 2; j <= n - 2; ++j) eng.place(u_params[j - 2]);
    return finish_flower(n, std::move(eng), u_params);
}

ULabel complete_label(int n, const std::vector<double>& u_params) {
    if (n < 4) throw Error("complete_label: need n >= 4");
    if (static_cast<int>(u_params.size()) != n - 3)
        throw Error("complete_label: need n-3 parameters");
    bool closed_form = true;
    for (int j = 2; j <= n - 2 && closed_form; ++j)
        if (!(constraint_C(j, u_params) > 0.0)) closed_form = false;
    if (!closed_form) return layout_flower(n, u_params).label;

    std::vector<double> u(n);
    for (int j = 1; j <= n - 3; ++j) u[j] = u_params[j - 1];
    auto args_before = [&](int target) {
        std::vector<double> a(n - 3);
        for (int i = 0; i < n - 3; ++i) a[i] = u[((target - (n - 3) + i) % n + n) % n];
        return a;
    };
    u[n - 2] = u_fn(n, args_before(n - 2));
    u[n - 1] = u_fn(n, args_before(n - 1));
    u[0] = u_fn(n, args_before(0));
    return ULabel(std::move(u));
}

std::string LabelVerdict::describe() const {
    if (valid) return "valid";
    std::string out = "fails";
    if (fail_a) out += " (a)";
    if (fail_b) out += " (b)";
    if (fail_c) out += " (c)";
    return out;
}

LabelVerdict verify_packing_label(const std::vector<double>& s_label) {
    int n = static_cast<int>(s_label.size());
    if (n < 3) throw Error("verify_packing_label: need at least 3 entries");
    for (double s : s_label)
        if (!(s < 1.0))
            throw SchwarzianOutOfRange("verify_packing_label: label entry s >= 1");
    std::vector<double> u(n);
    for (int j = 0; j < n; ++j) u[j] = 1.0 - s_label[j];

    // Lay out c_2..c_{n-1} from u_1..u_{n-2}; nothing is forced.
    LayoutEngine eng;
    for (int j = 2; j <= n - 1; ++j) eng.place(u[j - 1]);

    LabelVerdict v;
    const Petal& last = eng.petals[n - 1];
    const Petal& pen = eng.petals[n - 2];
    constexpr double tol = 1e-8;

    if (last.half_plane) {
        v.fail_a = v.fail_b = v.fail_c = true;
        return v;
    }
    v.fail_a = std::abs(last.r - 1.0) > tol;
    if (pen.half_plane) {
        // Patch-level check; needs the closed flower to be near-legitimate.
        if (std::abs(last.r - 1.0) < 1e-6) {
            NormalizedFlower fl;
            fl.n = n;
            fl.petals = eng.petals;
            double s_geom = intrinsic_schwarzian(fl.spoke_patch(n - 1));
            v.fail_b = std::abs(s_geom - s_label[n - 1]) > tol;
        } else {
            v.fail_b = true;
        }
    } else {
        v.fail_b = std::abs((last.t - pen.t) - 2.0 / (kSqrt3 * u[n - 1])) > tol;
    }
    v.fail_c = std::abs(last.t - 2.0 * kSqrt3 * u[0]) > tol;
    v.valid = !(v.fail_a || v.fail_b || v.fail_c);
    return v;
}

int wrap_count(const NormalizedFlower& fl) {
    // Chart carrying the upper half plane onto the unit disc.
    Mobius chart;
    bool found = false;
    for (int k = 0; k < 8 && !found; ++k) {
        Complex p(0.0, std::ldexp(1.0, k));
        bool clear = true;
        for (const Petal& pet : fl.petals) {
            if (pet.half_plane) continue;
            if (std::abs(Complex(pet.t, -pet.r) - p) <= pet.r) clear = false;
        }
        if (clear) {
            chart = Mobius{Complex(1, 0), -p, Complex(1, 0), -std::conj(p)};
            found = true;
        }
    }
    if (!found) throw PoleOnCircle("wrap_count: no admissible pole");

    // Tangency points of C with c_0, c_1, ..., c_{n-1} in chain order.
    std::vector<double> angle;
    angle.reserve(fl.n);
    for (int j = 0; j < fl.n; ++j) {
        ExtPoint t = (j == 0 || fl.petals[j].half_plane) ? ExtPoint::infinity()
                                                         : ExtPoint(Complex(fl.petals[j].t, 0.0));
        ExtPoint img = apply_mobius(chart, t);
        angle.push_back(std::arg(img.value()));
    }
    double total = 0.0;
    for (int j = 0; j < fl.n; ++j) {
        double d = angle[(j + 1) % fl.n] - angle[j];
        d -= 2.0 * kPi * std::floor(d / (2.0 * kPi));
        if (d <= 1e-12) d += 2.0 * kPi;
        total += d;
    }
    double ratio = total / (2.0 * kPi);
    int d = static_cast<int>(std::lround(ratio));
    if (std::abs(ratio - d) > 1e-6 || d < 1)
        throw Error("wrap_count: angle total is not a multiple of 2*pi");
    return d;
}

FlowerClass classify_flower(const NormalizedFlower& fl) {
    const int n = fl.n;
    const ULabel& lab = fl.label;
    FlowerClass out;
    constexpr double tol = 1e-9;

    std::vector<double> params(n - 3);
    for (int j = 1; j <= n - 3; ++j) params[j - 1] = lab.u(j);
    for (int j = 2; j <= n - 2; ++j) {
        if (!(constraint_C(j, params) > 0.0)) {
            out.kind = FlowerClass::Branched;
            out.degree = wrap_count(fl);
            out.violations.push_back("constraint C_" + std::to_string(j) + " <= 0");
            return out;
        }
    }

    out.kind = FlowerClass::Univalent;
    out.degree = 1;
    double lo = 1.0 / kSqrt3, hi = (n - 2) / kSqrt3;
    for (int j = 0; j < n; ++j) {
        if (lab.u(j) < lo - tol)
            out.violations.push_back("(A): u_" + std::to_string(j) + " < 1/sqrt(3)");
        if (lab.u(j) > hi + tol)
            out.violations.push_back("(A): u_" + std::to_string(j) + " > (n-2)/sqrt(3)");
    }
    for (int k = 0; k < n; ++k) {
        ULabel shifted = lab.shifted(k);
        std::vector<double> sp(n - 3);
        for (int j = 1; j <= n - 3; ++j) sp[j - 1] = shifted.u(j);
        for (int j = 2; j <= n - 2; ++j) {
            double c = constraint_C(j, sp);
            if (!(c > 0.0)) {
                out.violations.push_back("shift " + std::to_string(k) + ": constraint C_" +
                                         std::to_string(j) + " <= 0");
                continue;
            }
            if (c < 1.0 - tol)  // r_j = 1/C_j^2 > 1
                out.violations.push_back("(B): r_" + std::to_string(j) + "(shift " +
                                         std::to_string(k) + ") > 1");
        }
    }
    if (!out.violations.empty()) out.kind = FlowerClass::UnBranched;
    return out;
}

RadiiFlower flower_from_radii(const std::vector<double>& petal_radii, int wrap) {
    const int n = static_cast<int>(petal_radii.size());
    if (n < 3) throw Error("flower_from_radii: need at least 3 petals");
    if (wrap < 1) throw Error("flower_from_radii: wrap must be >= 1");
    if (wrap >= 2 && n < 2 * wrap + 1)
        throw Error("flower_from_radii: a flower wrapping d times needs >= 2d+1 petals");
    double rmin = kInf, rmax = 0;
    for (double r : petal_radii) {
        if (!(r > 0.0)) throw Error("flower_from_radii: radii must be positive");
        rmin = std::min(rmin, r);
        rmax = std::max(rmax, r);
    }

    auto angle_sum = [&](double R) {
        double total = 0;
        for (int j = 0; j < n; ++j) {
            double r1 = petal_radii[j], r2 = petal_radii[(j + 1) % n];
            total += 2.0 * std::asin(std::sqrt(r1 * r2 / ((R + r1) * (R + r2))));
        }
        return total;
    };

    double target = 2.0 * kPi * wrap;
    double lo = 1e-6 * rmin, hi = 1e6 * rmax;
    if (angle_sum(lo) < target || angle_sum(hi) > target)
        throw NoSolution("flower_from_radii: angle sum cannot reach 2*pi*d");
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        (angle_sum(mid) > target ? lo : hi) = mid;
    }
    double R = 0.5 * (lo + hi);

    // Euclidean flower around the origin, petals in counterclockwise order.
    std::vector<double> phi(n + 1);
    for (int j = 0; j < n; ++j) {
        double r1 = petal_radii[j], r2 = petal_radii[(j + 1) % n];
        phi[j + 1] = phi[j] + 2.0 * std::asin(std::sqrt(r1 * r2 / ((R + r1) * (R + r2))));
    }
    auto dir = [](double a) { return Complex(std::cos(a), std::sin(a)); };
    Complex t_c0 = R * dir(phi[0]);
    Complex t_c1 = R * dir(phi[1]);
    Complex ctr0 = (R + petal_radii[0]) * dir(phi[0]);
    Complex ctr1 = (R + petal_radii[1]) * dir(phi[1]);
    Complex t_01 = ctr0 + petal_radii[0] * (ctr1 - ctr0) / std::abs(ctr1 - ctr0);

    Mobius norm = mobius_from_points(ExtPoint(t_c0), ExtPoint(t_c1), ExtPoint(t_01),
                                     ExtPoint::infinity(), ExtPoint(Complex(0, 0)),
                                     ExtPoint(Complex(0, -2)));

    NormalizedFlower fl;
    fl.n = n;
    fl.petals.resize(n);
    fl.petals[0] = {true, 0, 0, 1.0};
    for (int j = 1; j < n; ++j) {
        GenCircle img = apply_mobius(
            norm, GenCircle::circle((R + petal_radii[j]) * dir(phi[j]), petal_radii[j]));
        if (img.is_line) {
            fl.petals[j] = {true, 0, 0, std::abs(std::imag(img.point)) / 2.0};
        } else {
            ExtPoint t = apply_mobius(norm, ExtPoint(R * dir(phi[j])));
            fl.petals[j] = {false, std::real(t.value()), img.radius, 0};
        }
    }

    std::vector<double> u(n);
    for (int j = 0; j < n; ++j) u[j] = 1.0 - intrinsic_schwarzian(fl.spoke_patch(j));
    fl.label = ULabel(std::move(u));
    return {R, std::move(fl)};
}

std::vector<double> random_radii(int n, std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> unif(std::log(lo), std::log(hi));
    std::vector<double> r(n);
    for (double& x : r) x = std::exp(unif(rng));
    return r;
}

}  // namespace sfkit
