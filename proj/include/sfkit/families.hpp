#pragma once

#include "sfkit/flower.hpp"

namespace sfkit {

struct AlphaOutOfRange : Error { using Error::Error; };

/// Schwarzian of the uniform n-flower wrapping `wrap` times:
/// s = 1 - (2/sqrt(3)) cos(wrap * pi / n). Requires wrap*pi/n < pi/2.
double uniform_schwarzian(int n, int wrap = 1);

/// Normalized layout of the constant label (n = 3 is the unique 3-flower).
NormalizedFlower uniform_flower(int n, int wrap = 1);

/// The unique univalent n-flower attaining the label bounds: u_0 = (n-2)/sqrt(3),
/// u_1 = u_{n-1} = 1/sqrt(3), all other entries 2/sqrt(3).
ULabel extremal_label(int n);

/// Period-3 hex flower label {u1, u2, u3, u1, u2, u3} with
/// u3 = (u1 + u2)/(3 u1 u2 - 1). Requires 3 u1 u2 > 1.
ULabel doyle_label(double u1, double u2);

/// Petal radii {a, b, b/a, 1/a, 1/b, a/b}; they close around a unit circle
/// for every a, b > 0.
std::vector<double> doyle_radii(double a, double b);

/// Nested ring flower: starting from the unique 3-flower, each step plugs the
/// largest possible petal into the interstice of the two most recent petals
/// (keeping the branch with rescaled tangency 2/3). In insertion order petal
/// j has radius 1/F_{j+1}^2 and tangency 2 F_j / F_{j+1} (Fibonacci numbers).
NormalizedFlower ring_flower(int n);

/// Label of ring_flower(n); every entry is one of 1/sqrt(3), 2/sqrt(3), sqrt(3).
ULabel ring_label(int n);

struct Rational {
    long long num, den;
};

/// Rescaled tangencies of the first k inserted ring petals as exact
/// rationals: 0/1, 1/1, then Farey mediants, i.e. F_j / F_{j+1}.
std::vector<Rational> ring_tangencies(int k);

struct SoccerballPair {
    double s;        // 5-6 edges
    double s_prime;  // 6-6 edges; (1-s)(1-s') = 1
};

/// The two soccerball schwarzians: the maximal packing (branched = false)
/// or the simply branched packing (branched = true).
SoccerballPair soccerball_labels(bool branched);

}  // namespace sfkit
