#include "sfkit/families.hpp"

#include <algorithm>
#include <cmath>

namespace sfkit {

double uniform_schwarzian(int n, int wrap) {
    if (n < 3) throw Error("uniform_schwarzian: need n >= 3");
    if (wrap < 1) throw Error("uniform_schwarzian: wrap must be >= 1");
    double alpha = wrap * kPi / n;
    if (!(alpha < kPi / 2.0))
        throw AlphaOutOfRange("uniform_schwarzian: requires wrap < n/2");
    return 1.0 - 2.0 * std::cos(alpha) / kSqrt3;
}

NormalizedFlower uniform_flower(int n, int wrap) {
    double u = 1.0 - uniform_schwarzian(n, wrap);
    if (n == 3) {
        NormalizedFlower fl;
        fl.n = 3;
        fl.petals = {{true, 0, 0, 1.0}, {false, 0.0, 1.0, 0}, {false, 2.0, 1.0, 0}};
        fl.label = ULabel({u, u, u});
        return fl;
    }
    return layout_flower(n, std::vector<double>(n - 3, u));
}

ULabel extremal_label(int n) {
    if (n < 3) throw Error("extremal_label: need n >= 3");
    std::vector<double> u(n, 2.0 / kSqrt3);
    u[0] = (n - 2) / kSqrt3;
    u[1] = 1.0 / kSqrt3;
    u[n - 1] = 1.0 / kSqrt3;
    return ULabel(std::move(u));
}

ULabel doyle_label(double u1, double u2) {
    if (!(u1 > 0.0) || !(u2 > 0.0)) throw NonPositiveU("doyle_label: u must be positive");
    double denom = 3.0 * u1 * u2 - 1.0;
    if (!(denom > 0.0))
        throw ConstraintViolated("doyle_label: 3 u1 u2 - 1 must be positive", 3);
    double u3 = (u1 + u2) / denom;
    return ULabel({u1, u2, u3, u1, u2, u3});
}

std::vector<double> doyle_radii(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) throw Error("doyle_radii: parameters must be positive");
    return {a, b, b / a, 1.0 / a, 1.0 / b, a / b};
}

NormalizedFlower ring_flower(int n) {
    if (n < 3) throw Error("ring_flower: need n >= 3");
    // Petal j (insertion order) has radius 1/F_{j+1}^2 and tangency
    // 2 F_j / F_{j+1}; the flower order interleaves them by position.
    std::vector<double> fib = {0.0, 1.0};  // F_0, F_1
    while (fib.size() < static_cast<std::size_t>(n) + 1) {
        std::size_t m = fib.size();
        fib.push_back(fib[m - 1] + fib[m - 2]);
    }
    std::vector<Petal> placed;
    for (int j = 0; j <= n - 2; ++j) {
        double t = 2.0 * fib[j] / fib[j + 1];
        double r = 1.0 / (fib[j + 1] * fib[j + 1]);
        placed.push_back({false, t, r, 0});
    }
    std::sort(placed.begin(), placed.end(), [](const Petal& a, const Petal& b) { return a.t < b.t; });

    NormalizedFlower fl;
    fl.n = n;
    fl.petals.resize(n);
    fl.petals[0] = {true, 0, 0, 1.0};
    for (int j = 1; j < n; ++j) fl.petals[j] = placed[j - 1];

    std::vector<double> u(n);
    for (int j = 0; j < n; ++j) u[j] = 1.0 - intrinsic_schwarzian(fl.spoke_patch(j));
    fl.label = ULabel(std::move(u));
    return fl;
}

ULabel ring_label(int n) { return ring_flower(n).label; }

std::vector<Rational> ring_tangencies(int k) {
    if (k < 1) throw Error("ring_tangencies: need k >= 1");
    std::vector<Rational> t;
    t.push_back({0, 1});
    if (k >= 2) t.push_back({1, 1});
    while (static_cast<int>(t.size()) < k) {
        const Rational& a = t[t.size() - 1];
        const Rational& b = t[t.size() - 2];
        t.push_back({a.num + b.num, a.den + b.den});
    }
    return t;
}

SoccerballPair soccerball_labels(bool branched) {
    double alpha = branched ? 2.0 * kPi / 5.0 : kPi / 5.0;
    double u = 2.0 * std::cos(alpha) / kSqrt3;
    return {1.0 - u, 1.0 - 1.0 / u};
}

}  // namespace sfkit
