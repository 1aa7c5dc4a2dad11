#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "sfkit/flower.hpp"

using namespace sfkit;
using namespace sfkit::testing;

TEST_CASE("placement formulas") {
    CHECK(end_petal_tangency(1.0 / kSqrt3) == doctest::Approx(2.0));
    CHECK(end_petal_tangency(5.0 / kSqrt3) == doctest::Approx(10.0));  // n = 7 extremal
    CHECK(end_petal_tangency(1.0) == doctest::Approx(2.0 * kSqrt3));
    CHECK_THROWS_AS(end_petal_tangency(-0.1), NonPositiveU);

    SecondPetal p = second_petal(1.0);
    CHECK(p.t2 == doctest::Approx(2.0 / kSqrt3));
    CHECK(p.r2 == doctest::Approx(1.0 / 3.0));
    SecondPetal q = second_petal(2.0 / kSqrt3);
    CHECK(q.t2 == doctest::Approx(1.0));
    CHECK(q.r2 == doctest::Approx(0.25));
    CHECK(second_petal(50.0).r2 < second_petal(10.0).r2);  // monotone to 0

    StepResult s1 = petal_step(1.0, 1.0, 1.0 / 3.0);
    CHECK(s1.outcome == StepResult::Forward);
    CHECK(s1.delta == doctest::Approx(1.0 / kSqrt3));
    CHECK(s1.rho == doctest::Approx(0.25));
    StepResult s2 = petal_step(1.0, 1.0, 1.0);
    CHECK(s2.delta == doctest::Approx(2.0 / (kSqrt3 - 1.0)));
    CHECK(s2.rho == doctest::Approx(1.0 / ((kSqrt3 - 1.0) * (kSqrt3 - 1.0))));
    // Vanishing denominator: half plane.
    double u_hp = std::sqrt(0.25) / kSqrt3;
    CHECK(petal_step(u_hp, 1.0, 0.25).outcome == StepResult::HalfPlane);
    // Negative denominator: wrapping.
    CHECK(petal_step(0.3, 1.0, 4.0).outcome == StepResult::Backward);

    StepResult s4 = wrapped_petal_step(1.0, 1.0, 1.0);
    CHECK(s4.delta == doctest::Approx(2.0 / (kSqrt3 + 1.0)));
    CHECK(s4.rho == doctest::Approx(1.0 / ((kSqrt3 + 1.0) * (kSqrt3 + 1.0))));
    // u -> 0+ limit: delta -> 2 sqrt(r R).
    CHECK(wrapped_petal_step(1e-12, 0.7, 1.3).delta ==
          doctest::Approx(2.0 * std::sqrt(0.7 * 1.3)).epsilon(1e-6));
    // The wrapped step is the generic formula with sqrt(R) negated.
    {
        double u = 0.9, r = 0.6, R = 1.7;
        double q_ = std::sqrt(R / r);
        CHECK(wrapped_petal_step(u, r, R).delta == doctest::Approx(2.0 * R / (kSqrt3 * u + q_)));
    }

    CHECK(half_plane_advance(1.0 / kSqrt3, 1.0) == doctest::Approx(-2.0));
    CHECK(std::abs(half_plane_advance(1e-12, 1.0)) < 1e-10);
    CHECK(half_plane_advance(1.0, 0.25) == doctest::Approx(-kSqrt3 / 2.0));

    CHECK(closing_u(0.25, 1.0 / 3.0) == doctest::Approx(1.0));
    CHECK(closing_u(1.0, 1.0) == doctest::Approx(2.0 / kSqrt3));
    CHECK(closing_u(1e14, 1.0) == doctest::Approx(1.0 / kSqrt3).epsilon(1e-6));
}

TEST_CASE("constraint polynomials and completion functions") {
    CHECK(constraint_C(3, {1, 1}) == doctest::Approx(2.0));
    CHECK(constraint_C(4, {1, 1, 1}) == doctest::Approx(kSqrt3));
    CHECK(constraint_C(5, {1, 1, 1, 1}) == doctest::Approx(1.0));
    CHECK(constraint_C(2, {0.7}) == doctest::Approx(kSqrt3 * 0.7));

    double fix4 = std::sqrt(2.0 / 3.0);
    CHECK(u_fn(4, {fix4}) == doctest::Approx(fix4));
    double gold = 2.0 * std::cos(kPi / 5.0) / kSqrt3;
    CHECK(u_fn(5, {gold, gold}) == doctest::Approx(gold));
    CHECK(3.0 * gold * gold - 1.0 == doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0));
    CHECK(u_fn(6, {1.0, 2.0, 0.6}) == doctest::Approx(1.0));
    try {
        u_fn(6, {0.2, 0.2, 0.2});
        CHECK(false);
    } catch (const ConstraintViolated& e) {
        CHECK(e.j == 3);  // 3*0.04 - 1 < 0
    }
}

TEST_CASE("layout_flower known flowers") {
    NormalizedFlower fl = layout_flower(6, {1, 1, 1});
    double t_expect[] = {0, 2 / kSqrt3, kSqrt3, 4 / kSqrt3, 2 * kSqrt3};
    double r_expect[] = {1, 1.0 / 3, 0.25, 1.0 / 3, 1};
    for (int j = 1; j < 6; ++j) {
        CHECK(fl.tangency(j) == doctest::Approx(t_expect[j - 1]).epsilon(1e-12));
        CHECK(fl.radius(j) == doctest::Approx(r_expect[j - 1]).epsilon(1e-12));
        CHECK(fl.label.u(j) == doctest::Approx(1.0).epsilon(1e-12));
    }

    double fix4 = std::sqrt(2.0 / 3.0);
    NormalizedFlower f4 = layout_flower(4, {fix4});
    for (int j = 0; j < 4; ++j) CHECK(f4.label.u(j) == doctest::Approx(fix4).epsilon(1e-12));

    double u5 = 2.0 * std::cos(kPi / 5.0) / kSqrt3;
    NormalizedFlower f5 = layout_flower(5, {u5, u5});
    for (int j = 0; j < 5; ++j) CHECK(f5.label.u(j) == doctest::Approx(u5).epsilon(1e-11));
}

TEST_CASE("layout exceptions") {
    // The penultimate petal degenerates to a half plane when
    // sqrt(3) u_2 = sqrt(r_2), i.e. u_1 u_2 = 1/3.
    CHECK_THROWS_AS(layout_flower(5, {1.0, 1.0 / 3.0}), LayoutFailA);
    // Deep wrap pushing the forced petal left of the first one.
    CHECK_THROWS_AS(layout_flower(5, {0.4, 0.83}), LayoutFailB);
}

TEST_CASE("verify_packing_label") {
    CHECK(verify_packing_label({0, 0, 0, 0, 0, 0}).valid);
    LabelVerdict v = verify_packing_label({0, 0, 0, 0, 0, 0.1});
    CHECK(!v.valid);
    CHECK((v.fail_b || v.fail_c));

    // 4-flower law: {s, s', s, s'} with (1-s)(1-s') = 2/3.
    double s = -0.5, sp = 1.0 - (2.0 / 3.0) / (1.0 - s);
    CHECK(verify_packing_label({s, sp, s, sp}).valid);
    CHECK(!verify_packing_label({s, sp + 0.02, s, sp}).valid);

    // The unique 3-flower label.
    double s3 = 1.0 - 1.0 / kSqrt3;
    CHECK(verify_packing_label({s3, s3, s3}).valid);
    CHECK(!verify_packing_label({s3, s3, s3 - 0.01}).valid);

    CHECK_THROWS_AS(verify_packing_label({0.0, 1.0, 0.0, 0.0}), SchwarzianOutOfRange);
}

TEST_CASE("classification") {
    NormalizedFlower hexa = layout_flower(6, {1, 1, 1});
    FlowerClass c = classify_flower(hexa);
    CHECK(c.kind == FlowerClass::Univalent);
    CHECK(c.degree == 1);
    CHECK(wrap_count(hexa) == 1);

    double ub = 2.0 * std::cos(2.0 * kPi / 5.0) / kSqrt3;
    NormalizedFlower br = layout_flower(5, {ub, ub});
    FlowerClass cb = classify_flower(br);
    CHECK(cb.kind == FlowerClass::Branched);
    CHECK(cb.degree == 2);
    CHECK(wrap_count(br) == 2);
    CHECK(verify_packing_label(br.label.schwarzians()).valid);

    double u7 = 2.0 * std::cos(2.0 * kPi / 7.0) / kSqrt3;
    NormalizedFlower br7 = layout_flower(7, {u7, u7, u7, u7});
    CHECK(wrap_count(br7) == 2);
    CHECK(classify_flower(br7).kind == FlowerClass::Branched);
    CHECK(verify_packing_label(br7.label.schwarzians()).valid);
    // The trace alternates generic and wrapped steps.
    bool has_backward = false, has_s4 = false;
    for (const LayoutStep& st : br7.trace) {
        if (st.situation == Situation::S3 && st.negative) has_backward = true;
        if (st.situation == Situation::S4) has_s4 = true;
    }
    CHECK(has_backward);
    CHECK(has_s4);

    // Un-branched but not univalent: two giants separated by a tiny petal
    // overlap; the verdict names a (B) inequality and the geometric oracle
    // agrees.
    RadiiFlower rf = flower_from_radii({4.0, 0.05, 4.0, 1.0, 1.0, 1.0, 1.0});
    FlowerClass cu = classify_flower(rf.flower);
    CHECK(cu.kind == FlowerClass::UnBranched);
    CHECK(!petals_disjoint(rf.flower));
    bool has_b = false;
    for (const auto& viol : cu.violations)
        if (viol.find("(B)") != std::string::npos) has_b = true;
    CHECK(has_b);
}

TEST_CASE("flower_from_radii") {
    RadiiFlower hexa = flower_from_radii({1, 1, 1, 1, 1, 1});
    CHECK(hexa.center_radius == doctest::Approx(1.0).epsilon(1e-12));
    for (int j = 0; j < 6; ++j) CHECK(hexa.flower.label.u(j) == doctest::Approx(1.0).epsilon(1e-10));

    RadiiFlower three = flower_from_radii({0.7, 0.7, 0.7});
    for (int j = 0; j < 3; ++j)
        CHECK(three.flower.label.s(j) == doctest::Approx(1.0 - 1.0 / kSqrt3).epsilon(1e-10));

    CHECK_THROWS_AS(flower_from_radii({1, 1, 1, 1}, 2), Error);  // needs >= 2d+1 petals
}

TEST_CASE("round trip radii -> label -> layout") {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + static_cast<int>(rng() % 9);
        RadiiFlower rf = flower_from_radii(random_radii(n, rng));
        std::vector<double> params(n - 3);
        for (int j = 1; j <= n - 3; ++j) params[j - 1] = rf.flower.label.u(j);
        NormalizedFlower again = layout_flower(n, params);
        for (int j = 1; j < n; ++j) {
            CHECK(std::abs(again.tangency(j) - rf.flower.tangency(j)) <
                  1e-8 * (1.0 + std::abs(rf.flower.tangency(j))));
            CHECK(std::abs(again.radius(j) - rf.flower.radius(j)) <
                  1e-8 * (1.0 + rf.flower.radius(j)));
        }
        for (int j = 0; j < n; ++j)
            CHECK(std::abs(again.label.u(j) - rf.flower.label.u(j)) < 1e-8);
    }
}

TEST_CASE("layout recurrences") {
    std::mt19937_64 rng(505);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 5 + static_cast<int>(rng() % 7);
        RadiiFlower rf = flower_from_radii(random_radii(n, rng));
        const NormalizedFlower& fl = rf.flower;
        // 1/sqrt(r_j) = sqrt(3) u_{j-1} / sqrt(r_{j-1}) - 1/sqrt(r_{j-2}),
        // with r_0 infinite and r_1 = 1.
        for (int j = 2; j <= n - 1; ++j) {
            double inv_prev2 = (j == 2) ? 0.0 : 1.0 / std::sqrt(fl.radius(j - 2));
            double lhs = 1.0 / std::sqrt(fl.radius(j));
            double rhs = kSqrt3 * fl.label.u(j - 1) / std::sqrt(fl.radius(j - 1)) - inv_prev2;
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
        }
        // u_j from neighboring radii.
        for (int j = 2; j <= n - 3; ++j) {
            double rhs = (std::sqrt(fl.radius(j) / fl.radius(j - 1)) +
                          std::sqrt(fl.radius(j) / fl.radius(j + 1))) /
                         kSqrt3;
            CHECK(fl.label.u(j) == doctest::Approx(rhs).epsilon(1e-8));
        }
        // delta_j = 2 sqrt(r_j r_{j+1}).
        for (int j = 1; j <= n - 2; ++j) {
            double delta = fl.tangency(j + 1) - fl.tangency(j);
            CHECK(delta == doctest::Approx(2.0 * std::sqrt(fl.radius(j) * fl.radius(j + 1)))
                               .epsilon(1e-8));
        }
        // Every cyclic position satisfies the completion identity.
        for (int j = 0; j < n; ++j) {
            std::vector<double> pre(n - 3);
            for (int i = 0; i < n - 3; ++i) pre[i] = fl.label.u(j - (n - 3) + i);
            CHECK(fl.label.u(j) == doctest::Approx(u_fn(n, pre)).epsilon(1e-9));
        }
    }
}

TEST_CASE("complete_label") {
    ULabel lab = complete_label(6, {1, 1, 1});
    for (int j = 0; j < 6; ++j) CHECK(lab.u(j) == doctest::Approx(1.0));

    ULabel l5 = complete_label(5, {1.0, 1.0});
    CHECK(l5.u(3) == doctest::Approx((1.0 + 1.0 / kSqrt3) / 2.0));

    // The algebraic and forced-layout paths agree wherever both apply.
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 4 + static_cast<int>(rng() % 8);
        RadiiFlower rf = flower_from_radii(random_radii(n, rng));
        std::vector<double> params(n - 3);
        for (int j = 1; j <= n - 3; ++j) params[j - 1] = rf.flower.label.u(j);
        ULabel algebraic = complete_label(n, params);
        ULabel geometric = layout_flower(n, params).label;
        for (int j = 0; j < n; ++j)
            CHECK(std::abs(algebraic.u(j) - geometric.u(j)) < 1e-9 * (1 + algebraic.u(j)));
    }

    // Nesting identities for the completion functions, n = 5..9.
    for (int n = 5; n <= 9; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            RadiiFlower rf = flower_from_radii(random_radii(n, rng, 0.5, 2.0));
            std::vector<double> u(rf.flower.label.values());
            std::vector<double> head(u.begin() + 1, u.begin() + (n - 2));
            double u_n2 = u_fn(n, head);
            std::vector<double> mid(u.begin() + 2, u.begin() + (n - 2));
            mid.push_back(u_n2);
            double u_n1 = u_fn(n, mid);
            std::vector<double> tail(u.begin() + 3, u.begin() + (n - 2));
            tail.push_back(u_n2);
            tail.push_back(u_n1);
            double u_0 = u_fn(n, tail);
            CHECK(u_n2 == doctest::Approx(u[n - 2]).epsilon(1e-8));
            CHECK(u_n1 == doctest::Approx(u[n - 1]).epsilon(1e-8));
            CHECK(u_0 == doctest::Approx(u[0]).epsilon(1e-8));
        }
    }
}

TEST_CASE("cyclic label operations") {
    std::mt19937_64 rng(707);
    RadiiFlower rf = flower_from_radii(random_radii(8, rng));
    const ULabel& lab = rf.flower.label;

    ULabel full_shift = lab.shifted(8);
    ULabel rev2 = lab.reversed().reversed();
    for (int j = 0; j < 8; ++j) {
        CHECK(full_shift.u(j) == lab.u(j));
        CHECK(rev2.u(j) == lab.u(j));
    }

    // Shifts and reversals of packing labels are packing labels.
    for (int k = 0; k < 8; ++k) {
        CHECK(verify_packing_label(lab.shifted(k).schwarzians()).valid);
        CHECK(verify_packing_label(lab.shifted(k).reversed().schwarzians()).valid);
    }
}

TEST_CASE("half-plane petals mid-layout") {
    // u_1 u_2 = 1/3 makes c_3 a half plane in a 6-flower; the layout passes
    // it and closes.
    NormalizedFlower fl = layout_flower(6, {1.0, 1.0 / 3.0, 1.0});
    CHECK(fl.petals[3].half_plane);
    bool saw_hp = false;
    for (const LayoutStep& st : fl.trace) saw_hp |= st.situation == Situation::HP;
    CHECK(saw_hp);
    CHECK(verify_packing_label(fl.label.schwarzians()).valid);
    CHECK(wrap_count(fl) == 2);
}
