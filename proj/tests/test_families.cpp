#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "oracles.hpp"
#include "sfkit/families.hpp"

using namespace sfkit;
using namespace sfkit::testing;

TEST_CASE("uniform schwarzians") {
    const int ns[] = {3, 4, 5, 6, 9, 12, 20, 50};
    const double table[] = {0.422650, 0.183503, 0.065828, 0.0,
                            -0.085064, -0.115355, -0.140485, -0.152422};
    for (int i = 0; i < 8; ++i)
        CHECK(std::abs(uniform_schwarzian(ns[i]) - table[i]) < 1e-6);
    CHECK(uniform_schwarzian(3) == doctest::Approx(1.0 - 1.0 / kSqrt3).epsilon(1e-14));
    CHECK(uniform_schwarzian(4) == doctest::Approx(1.0 - std::sqrt(2.0 / 3.0)).epsilon(1e-14));
    CHECK(std::abs(uniform_schwarzian(5, 2) - 0.643178) < 1e-6);
    CHECK_THROWS_AS(uniform_schwarzian(4, 2), AlphaOutOfRange);

    // Monotone decreasing in n with limit 1 - 2/sqrt(3).
    double prev = uniform_schwarzian(3);
    for (int n = 4; n <= 60; ++n) {
        double cur = uniform_schwarzian(n);
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK(std::abs(uniform_schwarzian(100000) - (1.0 - 2.0 / kSqrt3)) < 1e-8);
}

TEST_CASE("uniform flowers") {
    // n = 4: constant label sqrt(2/3).
    NormalizedFlower f4 = uniform_flower(4);
    for (int j = 0; j < 4; ++j)
        CHECK(f4.label.u(j) == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-11));

    // n = 10: the hidden circle tangent to all ten petals.
    NormalizedFlower f10 = uniform_flower(10);
    double t_end = f10.tangency(9);
    double rho = t_end * t_end / 16.0;
    Complex hidden_center(t_end / 2.0, -2.0 + rho);
    for (int j = 1; j < 10; ++j) {
        double dist = std::abs(Complex(f10.tangency(j), -f10.radius(j)) - hidden_center);
        CHECK(std::abs(dist - (rho + f10.radius(j))) < 1e-8);
    }
    // Branched uniform flower.
    NormalizedFlower f52 = uniform_flower(5, 2);
    FlowerClass c = classify_flower(f52);
    CHECK(c.kind == FlowerClass::Branched);
    CHECK(c.degree == 2);
}

TEST_CASE("extremal flowers") {
    ULabel lab = extremal_label(7);
    CHECK(lab.u(0) == doctest::Approx(5.0 / kSqrt3));
    CHECK(lab.u(1) == doctest::Approx(1.0 / kSqrt3));
    CHECK(lab.u(6) == doctest::Approx(1.0 / kSqrt3));
    for (int j = 2; j <= 5; ++j) CHECK(lab.u(j) == doctest::Approx(2.0 / kSqrt3));
    CHECK(verify_packing_label(lab.schwarzians()).valid);

    std::vector<double> params(lab.values().begin() + 1, lab.values().begin() + 5);
    NormalizedFlower fl = layout_flower(7, params);
    CHECK(fl.tangency(6) == doctest::Approx(10.0).epsilon(1e-12));
    for (int j = 1; j <= 6; ++j) CHECK(fl.radius(j) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(classify_flower(fl).kind == FlowerClass::Univalent);
    CHECK(petals_disjoint(fl));

    // n = 4 coincides with a boundary label of the 4-flower law.
    ULabel l4 = extremal_label(4);
    CHECK(l4.u(0) * l4.u(1) == doctest::Approx(2.0 / 3.0));
    CHECK(l4.u(0) == doctest::Approx(2.0 / kSqrt3));

    // The label attains both bounds of the univalence interval.
    for (int n = 4; n <= 10; ++n) {
        ULabel l = extremal_label(n);
        double lo = 1.0 / kSqrt3, hi = (n - 2) / kSqrt3;
        double minu = 1e9, maxu = 0;
        for (int j = 0; j < n; ++j) {
            minu = std::min(minu, l.u(j));
            maxu = std::max(maxu, l.u(j));
        }
        CHECK(minu == doctest::Approx(lo));
        CHECK(maxu == doctest::Approx(hi));
    }
}

TEST_CASE("doyle flowers") {
    ULabel one = doyle_label(1.0, 1.0);
    for (int j = 0; j < 6; ++j) CHECK(one.u(j) == doctest::Approx(1.0));

    ULabel lab = doyle_label(1.0, 2.0);
    CHECK(lab.u(2) == doctest::Approx(0.6));
    CHECK(u_fn(6, {1.0, 2.0, 0.6}) == doctest::Approx(1.0));
    CHECK(verify_packing_label(lab.schwarzians()).valid);

    CHECK_THROWS_AS(doyle_label(0.5, 0.5), ConstraintViolated);

    // Validity across a grid of the parameter region.
    for (int i = 1; i <= 10; ++i)
        for (int j = 1; j <= 10; ++j) {
            double u1 = 0.3 * i, u2 = 0.3 * j;
            if (3.0 * u1 * u2 - 1.0 < 0.05) continue;
            CHECK(verify_packing_label(doyle_label(u1, u2).schwarzians()).valid);
        }

    // Radii {a, b, b/a, 1/a, 1/b, a/b} close around a unit circle, and the
    // label has exactly three distinct schwarzians in a period-3 pattern.
    RadiiFlower rf = flower_from_radii(doyle_radii(2.0, 3.0));
    CHECK(rf.center_radius == doctest::Approx(1.0).epsilon(1e-10));
    for (int j = 0; j < 3; ++j)
        CHECK(rf.flower.label.u(j) == doctest::Approx(rf.flower.label.u(j + 3)).epsilon(1e-10));
    double u1 = rf.flower.label.u(1), u2 = rf.flower.label.u(2);
    CHECK(rf.flower.label.u(3) == doctest::Approx((u1 + u2) / (3 * u1 * u2 - 1)).epsilon(1e-9));
    std::set<long long> distinct;
    for (int j = 0; j < 6; ++j)
        distinct.insert(std::llround(rf.flower.label.u(j) * 1e9));
    CHECK(distinct.size() == 3);
}

TEST_CASE("ring flowers") {
    // Tangencies follow the Fibonacci / Farey pattern.
    std::vector<Rational> t = ring_tangencies(9);
    long long expect[][2] = {{0, 1}, {1, 1}, {1, 2}, {2, 3}, {3, 5}, {5, 8}, {8, 13}, {13, 21}, {21, 34}};
    for (int j = 0; j < 9; ++j) {
        CHECK(t[j].num == expect[j][0]);
        CHECK(t[j].den == expect[j][1]);
    }

    // Independent construction: insert petals into the interstice of the two
    // most recent ones via the Descartes relation, and compare.
    NormalizedFlower fl = ring_flower(9);
    std::vector<Petal> chron = {{false, 0.0, 1.0, 0}, {false, 2.0, 1.0, 0}};
    for (int j = 2; j <= 7; ++j) chron.push_back(descartes_between(chron[j - 1], chron[j - 2]));
    for (const Petal& p : chron) {
        bool found = false;
        for (int j = 1; j < 9; ++j)
            if (std::abs(fl.tangency(j) - p.t) < 1e-9 && std::abs(fl.radius(j) - p.r) < 1e-9)
                found = true;
        CHECK(found);
    }

    // Reciprocal-root recurrence, exactly Fibonacci.
    for (std::size_t j = 2; j < chron.size(); ++j)
        CHECK(1.0 / std::sqrt(chron[j].r) ==
              doctest::Approx(1.0 / std::sqrt(chron[j - 1].r) + 1.0 / std::sqrt(chron[j - 2].r))
                  .epsilon(1e-12));

    // Labels take only the three closed-form values and verify as packing
    // labels; cyclic shifts stay valid.
    for (int n : {5, 6, 7, 8, 9}) {
        ULabel lab = ring_label(n);
        int c1 = 0, c2 = 0, c3 = 0;
        for (int j = 0; j < n; ++j) {
            double u = lab.u(j);
            if (std::abs(u - 1.0 / kSqrt3) < 1e-9)
                ++c1;
            else if (std::abs(u - 2.0 / kSqrt3) < 1e-9)
                ++c2;
            else if (std::abs(u - kSqrt3) < 1e-9)
                ++c3;
        }
        CHECK(c1 + c2 + c3 == n);
        CHECK(c1 >= 1);
        CHECK(c2 >= 1);
        if (n >= 5) CHECK(c3 >= 1);
        CHECK(verify_packing_label(lab.schwarzians()).valid);
    }
    CHECK(verify_packing_label(ring_label(8).shifted(3).schwarzians()).valid);

    // The completion functions reproduce ring labels from their parameters.
    for (int n : {6, 7, 8}) {
        ULabel lab = ring_label(n);
        std::vector<double> params(lab.values().begin() + 1, lab.values().begin() + (n - 2));
        ULabel completed = complete_label(n, params);
        for (int j = 0; j < n; ++j)
            CHECK(completed.u(j) == doctest::Approx(lab.u(j)).epsilon(1e-9));
    }

    // New-petal radius ratios approach the squared golden ratio.
    double tau = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(chron[7].r / descartes_between(chron[7], chron[6]).r ==
          doctest::Approx(tau * tau).epsilon(1e-2));
}

TEST_CASE("soccerball label pairs") {
    SoccerballPair pk = soccerball_labels(false);
    CHECK(std::abs(pk.s - 0.065828) < 1e-6);
    CHECK(std::abs(pk.s_prime - (-0.070466)) < 1e-6);
    CHECK((1.0 - pk.s) * (1.0 - pk.s_prime) == doctest::Approx(1.0).epsilon(1e-12));

    SoccerballPair p = soccerball_labels(true);
    CHECK(std::abs(p.s - 0.643178) < 1e-6);
    CHECK(std::abs(p.s_prime - (-1.802517)) < 1e-6);
    CHECK((1.0 - p.s) * (1.0 - p.s_prime) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p.s == doctest::Approx(uniform_schwarzian(5, 2)).epsilon(1e-12));

    // Alternating labels with uu' = 1: the middle petal has radius exactly
    // 1/4; for u < 1/sqrt(3) univalence fails (the end petals overlap).
    for (double u : {0.45, 0.55, 1.0 / kSqrt3, 0.8, 1.0, 1.3}) {
        double up = 1.0 / u;
        NormalizedFlower fl = layout_flower(6, {up, u, up});
        CHECK(fl.radius(3) == doctest::Approx(0.25).epsilon(1e-9));
        CHECK(verify_packing_label(fl.label.schwarzians()).valid);
        bool univalent = classify_flower(fl).kind == FlowerClass::Univalent;
        CHECK(univalent == (u >= 1.0 / kSqrt3 - 1e-12));
        CHECK(univalent == petals_disjoint(fl));
        // End petals touch exactly at the 3-flower threshold.
        double gap = fl.tangency(5) - fl.tangency(1) - 2.0;
        if (std::abs(u - 1.0 / kSqrt3) < 1e-12)
            CHECK(std::abs(gap) < 1e-9);
        else
            CHECK((gap > 0) == (u > 1.0 / kSqrt3));
    }
}
