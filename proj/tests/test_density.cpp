#include <doctest.h>

#include "farey/density.hpp"

using namespace farey;

namespace {

Rat rq(long n, long d = 1) { return make_rat(Int(n), Int(d)); }

RatFunc vertex(std::initializer_list<Digit> label) {
    return vertex_from_label(VertexLabel{std::vector<Digit>(label)}, TreeVariant::Forward);
}

}  // namespace

TEST_CASE("b_digit") {
    RatFunc root = vertex({2});
    CHECK(b_digit(root, rq(-3)).b == 3);
    CHECK(b_digit(root, rq(-2)).b == 1);  // alpha + v(alpha) = 0, boundary case
    CHECK(b_digit(vertex({2, 2}), rq(-2)).b == 5);
    CHECK(b_digit(root, rq(-1)).exact_pole_hit);
    CHECK_THROWS(b_digit(root, rq(1)));
}

TEST_CASE("extend_path from the root toward -10") {
    PathState state{vertex({2}), {}, std::nullopt};
    Rat alpha = rq(-10);
    PathStepOutcome out = extend_path(state, alpha, rq(1, 1 << 20));
    REQUIRE(out == PathStepOutcome::Continued);
    CHECK(state.b_history == std::vector<Digit>{10});
    REQUIRE(state.zeta.has_value());
    // zeta_1 = (-11 - sqrt(85))/2 = -10.1097722...
    CHECK(state.zeta->midpoint().get_d() == doctest::Approx(-10.10977223).epsilon(1e-6));
    CHECK(state.zeta->hi <= alpha);
}

TEST_CASE("exact pole hit from [2,2] at alpha = -2") {
    // b = 5 and (x+4)q + p vanishes at -2 exactly
    PathState state{vertex({2, 2}), {}, std::nullopt};
    PathStepOutcome out = extend_path(state, rq(-2), rq(1, 1024));
    CHECK(out == PathStepOutcome::ExactPoleHit);
    CHECK(state.b_history == std::vector<Digit>{5});
}

TEST_CASE("run_density converges toward -3/2") {
    DensityTrace trace =
        run_density(VertexLabel{{2, 2}}, rq(-3, 2), 200, rq(1, 100000000));
    REQUIRE(trace.status == DensityStatus::Converged);
    CHECK(trace.zetas_increasing);
    CHECK(trace.b_tail_ge_two);
    CHECK(trace.final_gap_upper < rq(1, 100000000));
    for (std::size_t i = 1; i < trace.steps.size(); ++i)
        CHECK(trace.steps[i].gap_upper <= trace.steps[i - 1].gap_upper);
}

TEST_CASE("run_density holds up at tighter tolerances near the boundary") {
    DensityTrace t1 =
        run_density(VertexLabel{{2, 2}}, rq(-5, 4), 300, rq(1, 10000000000L));
    CHECK(t1.status == DensityStatus::Converged);
    CHECK(t1.zetas_increasing);
    CHECK(t1.b_tail_ge_two);

    DensityTrace t2 =
        run_density(VertexLabel{{2, 2}}, rq(-101, 100), 400, rq(1, 100000000));
    CHECK(t2.status == DensityStatus::Converged);
    CHECK(t2.zetas_increasing);
}

TEST_CASE("run_density at the boundary alpha = -1") {
    DensityTrace trace = run_density(VertexLabel{{2, 2}}, rq(-1), 300, rq(1, 1000000));
    CHECK((trace.status == DensityStatus::Converged ||
           trace.status == DensityStatus::ExactPoleHit));
}

TEST_CASE("run_density pre-applies the normalizing round when p(0) != 0") {
    // [1,2] has numerator x+1
    DensityTrace trace = run_density(VertexLabel{{1, 2}}, rq(-5, 2), 200, rq(1, 1000000));
    CHECK((trace.status == DensityStatus::Converged ||
           trace.status == DensityStatus::ExactPoleHit));
    CHECK(trace.b_tail_ge_two);
}

TEST_CASE("experimental range runs without asserting") {
    CHECK_THROWS(run_density(VertexLabel{{2, 2}}, rq(-1, 2), 50, rq(1, 1000)));
    DensityTrace trace =
        run_density(VertexLabel{{2, 2}}, rq(-1, 2), 50, rq(1, 100000000), true);
    CHECK(trace.steps.size() >= 1);
    for (const DensityStep& s : trace.steps) {
        CHECK(s.fractional_part >= 0);
        CHECK(s.fractional_part < 1);
    }
}

TEST_CASE("prepended digit drives the smallest pole below -N") {
    RatFunc v = vertex({2});
    PrependPoleReport rep = prepend_digit_poles(v, 5);
    CHECK(rep.smallest_below_minus_n);
    REQUIRE(rep.poles.size() == 2);
    // x^2 + 6x + 4: roots -3 +- sqrt(5)
    CHECK(rep.poles.front().midpoint().get_d() == doctest::Approx(-5.23606).epsilon(1e-4));

    for (Digit n : {1, 2, 10, 50}) CHECK(prepend_digit_poles(v, n).smallest_below_minus_n);
}

TEST_CASE("largest pole creeps toward zero, slower than halving") {
    RatFunc v = vertex({2});
    std::vector<HalvingStep> steps = halving_iterate(v, 6);
    REQUIRE(steps.size() == 6);
    // after one round from x/(x+1): poles of x^2+3x+1, largest (-3+sqrt(5))/2
    CHECK(steps[0].largest_pole.midpoint().get_d() == doctest::Approx(-0.381966).epsilon(1e-4));
    CHECK(steps[0].at_least_half_of_s1);  // -0.382 > -1/2
    // round 2 lands on (x+1)(x^2+4x+1): largest pole -2+sqrt(3) < -1/4, so the
    // geometric bound is already violated while the drift stays monotone
    CHECK(steps[1].largest_pole.midpoint().get_d() == doctest::Approx(-0.267949).epsilon(1e-4));
    CHECK(!steps[1].at_least_half_of_s1);
    for (const HalvingStep& st : steps) {
        CHECK(st.negative);
        CHECK(st.increased);
    }

    // a vertex whose numerator misses the root at zero gets normalized first
    std::vector<HalvingStep> steps2 = halving_iterate(vertex({1, 2}), 4);
    for (const HalvingStep& st : steps2) {
        CHECK(st.negative);
        CHECK(st.increased);
    }
}
