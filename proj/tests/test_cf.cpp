#include <doctest.h>

#include "farey/cf.hpp"

using namespace farey;

namespace {

Rat rq(long n, long d = 1) { return make_rat(Int(n), Int(d)); }

std::vector<Digit> dg(std::initializer_list<Digit> v) { return std::vector<Digit>(v); }

}  // namespace

TEST_CASE("forward digit expansions") {
    DigitExpansion e1 = forward_digits(rq(3, 7), rq(1));
    CHECK(e1.digits == dg({2, 3}));
    CHECK(e1.status == ExpansionStatus::Finite);

    DigitExpansion e2 = forward_digits(rq(5, 7), rq(2));
    CHECK(e2.digits == dg({1, 1, 3}));
    CHECK(e2.status == ExpansionStatus::Finite);

    DigitExpansion e3 = forward_digits(rq(1, 2), rq(1, 2));
    CHECK(e3.status == ExpansionStatus::CertifiedInfinite);

    CHECK_THROWS(forward_digits(rq(3, 2), rq(1)));
    CHECK_THROWS(forward_digits(rq(1, 2), rq(-1)));
    CHECK_THROWS(forward_digits(rq(0), rq(1)));
}

TEST_CASE("backward digit expansions") {
    CHECK(backward_digits(rq(1, 2), rq(2)).digits == dg({3}));
    CHECK(backward_digits(rq(1, 2), rq(2)).status == ExpansionStatus::Finite);
    CHECK(backward_digits(rq(2, 5), rq(2)).digits == dg({2, 2}));
    CHECK(backward_digits(rq(1, 3), rq(2)).digits == dg({2}));
}

TEST_CASE("finite expansions end with a digit of at least two") {
    for (long b = 2; b <= 25; ++b)
        for (long a = 1; a < b; ++a)
            for (long x = 1; x <= 3; ++x) {
                DigitExpansion e = forward_digits(rq(a, b), rq(x));
                if (e.status == ExpansionStatus::Finite) CHECK(e.digits.back() >= 2);
            }
}

TEST_CASE("digits match re-simulation") {
    DigitExpansion e = forward_digits(rq(41, 97), rq(5, 2), 30);
    Rat t = rq(41, 97);
    for (Digit d : e.digits) {
        Rat w(rq(5, 2) / t - rq(5, 2));
        CHECK(Int(rat_floor(w) + 1) == int_of(d));
        t = w - Rat(rat_floor(w));
    }
}

TEST_CASE("mod-q certificate") {
    // x = 3/2, den(t) divisible by 2, num coprime to 2
    DigitExpansion e = forward_digits(rq(3, 8), rq(3, 2));
    CHECK(e.status == ExpansionStatus::CertifiedInfinite);
    // 3/8 falls into a cycle immediately, which upgrades the reason
    CHECK(e.reason == InfiniteReason::Cycle);

    // 11/32 cycles only after five steps; a shorter cap leaves the mod-q reason
    DigitExpansion m = forward_digits(rq(11, 32), rq(3, 2), 3);
    CHECK(m.status == ExpansionStatus::CertifiedInfinite);
    CHECK(m.reason == InfiniteReason::ModQInvariant);
    CHECK(m.digits.size() == 3);

    ModQOrbitCheck chk = orbit_modq_check(rq(3, 8), rq(3, 2), TreeVariant::Forward, 500);
    CHECK(chk.invariant_held);
    CHECK(!chk.terminated);
    CHECK(chk.steps_run == 500);

    ModQOrbitCheck bwd = orbit_modq_check(rq(3, 8), rq(3, 2), TreeVariant::Backward, 200);
    CHECK(bwd.invariant_held);
    CHECK(!bwd.terminated);
}

TEST_CASE("cycle detection reports the fixed point") {
    DigitExpansion e = forward_digits(rq(1, 2), rq(1, 2));
    CHECK(e.status == ExpansionStatus::CertifiedInfinite);
    CHECK(e.reason == InfiniteReason::Cycle);  // revisit beats the mod-q cap
    CHECK(e.digits.front() == 1);
}

TEST_CASE("evaluate_label, exact") {
    CHECK(evaluate_label(dg({2, 3}), rq(1), TreeVariant::Forward) == rq(3, 7));
    CHECK(evaluate_label(dg({3}), rq(2), TreeVariant::Backward) == rq(1, 2));
    CHECK(evaluate_label(dg({1, 1, 3}), rq(2), TreeVariant::Forward) == rq(5, 7));
    CHECK_THROWS(evaluate_label(dg({}), rq(1), TreeVariant::Forward));
    // adversarial negative x: x + (a-1) + 0 = 0
    CHECK_THROWS(evaluate_label(dg({3}), rq(-2), TreeVariant::Forward));
}

TEST_CASE("evaluate_label at surds hits the published rationals") {
    Surd sqrt2 = *parse_surd("sqrt(2)");
    RatInterval iv = evaluate_label_interval(dg({2, 3}), sqrt2, TreeVariant::Forward, 128);
    CHECK(iv.contains(rq(1, 2)));
    CHECK(iv.width() < make_rat(Int(1), Int("1000000000000000000000000000000")));

    Surd x2 = *parse_surd("1+1/2*sqrt(14)");
    RatInterval iv2 = evaluate_label_interval(dg({6, 2}), x2, TreeVariant::Forward, 128);
    CHECK(iv2.contains(rq(1, 3)));
    CHECK(iv2.width() < make_rat(Int(1), Int("1000000000000000000000000000000")));
}

TEST_CASE("surd digit expansion emits only unambiguous digits") {
    Surd sqrt2 = *parse_surd("sqrt(2)");
    DigitExpansion e = expand_digits_surd(rq(1, 2), sqrt2, TreeVariant::Forward, 16);
    REQUIRE(!e.digits.empty());
    CHECK(e.digits.front() == 2);
    CHECK(e.status == ExpansionStatus::Capped);  // the orbit hits an exact integer point
}

TEST_CASE("convergents") {
    std::vector<Convergent> f1 = convergents(dg({1, 1, 3}), rq(2), TreeVariant::Forward);
    REQUIRE(f1.size() == 3);
    CHECK(f1[0].p == 2);
    CHECK(f1[0].q == 2);
    CHECK(f1[1].p == 4);
    CHECK(f1[1].q == 6);
    CHECK(f1[2].p == 20);
    CHECK(f1[2].q == 28);
    CHECK(Rat(f1[2].p / f1[2].q) == rq(5, 7));

    std::vector<Convergent> f2 = convergents(dg({2, 3}), rq(1), TreeVariant::Forward);
    CHECK(f2[0].p == 1);
    CHECK(f2[0].q == 2);
    CHECK(f2[1].p == 3);
    CHECK(f2[1].q == 7);

    std::vector<Convergent> empty = convergents(dg({}), rq(7, 3), TreeVariant::Forward);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].index == 0);
    CHECK(empty[0].p == 0);
    CHECK(empty[0].q == 1);

    std::vector<Convergent> b = convergents(dg({4, 1, 1, 1}), rq(2), TreeVariant::Backward);
    REQUIRE(b.size() == 4);
    CHECK(b[0].p == 4);
    CHECK(b[0].q == 6);
    CHECK(b[1].p == 10);
    CHECK(b[1].q == 16);
    CHECK(b[2].p == 22);
    CHECK(b[2].q == 36);
    CHECK(b[3].p == 46);
    CHECK(b[3].q == 76);
}

TEST_CASE("forward convergents equal the evaluated prefixes") {
    std::vector<Digit> digits = forward_digits(rq(41, 97), rq(2)).digits;
    std::vector<Convergent> cs = convergents(digits, rq(2), TreeVariant::Forward);
    for (const Convergent& c : cs) {
        std::vector<Digit> prefix(digits.begin(), digits.begin() + c.index);
        CHECK(Rat(c.p / c.q) == evaluate_label(prefix, rq(2), TreeVariant::Forward));
    }
}

TEST_CASE("backward convergents are the nesting with the last digit bumped") {
    std::vector<Digit> digits = {3, 2, 4};
    std::vector<Convergent> cs = convergents(digits, rq(3), TreeVariant::Backward);
    for (const Convergent& c : cs) {
        std::vector<Digit> prefix(digits.begin(), digits.begin() + c.index);
        prefix.back() += 1;
        CHECK(Rat(c.p / c.q) == evaluate_label(prefix, rq(3), TreeVariant::Backward));
    }
}

TEST_CASE("error bounds") {
    std::vector<BoundRow> rows = error_bound_check(rq(3, 7), rq(1), TreeVariant::Forward, 10);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].error == rq(1, 14));
    CHECK(rows[0].bound == rq(1, 4));
    CHECK(rows[0].ok);

    std::vector<BoundRow> rows2 = error_bound_check(rq(5, 7), rq(2), TreeVariant::Forward, 10);
    REQUIRE(rows2.size() == 3);
    CHECK(rows2[1].error == rq(1, 21));
    CHECK(rows2[1].bound == rq(4, 36));
    CHECK(rows2[1].ok);
}

TEST_CASE("all-ones denominator lower bounds") {
    for (const char* xs : {"1/4", "1/2", "3/4"}) {
        Rat x = *parse_rat(xs);
        std::vector<AllOnesBoundRow> rows = all_ones_q_bounds(x, 40);
        REQUIRE(rows.size() == 38);
        for (const AllOnesBoundRow& row : rows) CHECK(row.ok);
    }
    // spot check against the hand recurrence: q_3 = x^3 + 2x^2 at x = 1/2
    std::vector<AllOnesBoundRow> rows = all_ones_q_bounds(rq(1, 2), 4);
    CHECK(rows[0].n == 3);
    CHECK(rows[0].q == rq(5, 8));
}

TEST_CASE("roundtrip") {
    CHECK(roundtrip(rq(3, 7), rq(1), TreeVariant::Forward).pass);
    CHECK(roundtrip(rq(5, 7), rq(2), TreeVariant::Forward).pass);
    CHECK(roundtrip(rq(2, 5), rq(2), TreeVariant::Backward).pass);
    CHECK(!roundtrip(rq(3, 8), rq(3, 2), TreeVariant::Forward).pass);
}

TEST_CASE("digit/tree duality to depth 8") {
    for (long x = 1; x <= 3; ++x) {
        Rat xr = rq(x);
        for (const TreeNode& node : enumerate_levels(TreeVariant::Forward, 8)) {
            Rat t = node.fn.value_at(xr);
            DigitExpansion e = forward_digits(t, xr);
            REQUIRE(e.status == ExpansionStatus::Finite);
            CHECK(e.digits == node.label.digits);
        }
    }
}

TEST_CASE("backward orbit denominators decrease for integer x") {
    for (long x : {1, 2, 3}) {
        Rat xr = rq(x);
        Rat t = rq(37, 61);
        Int prev_den = t.get_den();
        int steps = 0;
        while (t != 0) {
            Rat w(xr / (1 - t) - xr);
            t = w - Rat(rat_floor(w));
            if (t != 0) {
                CHECK(t.get_den() < prev_den);
                prev_den = t.get_den();
            }
            REQUIRE(++steps < 200);
        }
    }
}

TEST_CASE("backward error bounds hold for integer x") {
    std::vector<BoundRow> rows = error_bound_check(rq(37, 61), rq(2), TreeVariant::Backward, 60);
    REQUIRE(!rows.empty());
    for (const BoundRow& row : rows) {
        CHECK(row.bound_defined);
        CHECK(row.ok);
    }
}

TEST_CASE("backward all-ones bound is flagged, not faked") {
    // x < 1 with an all-ones tail: q_n - q_{n-1} = x^n stays positive, and the
    // bound x^n/(q_n(q_n - q_{n-1})) = 1/q_n tends to 1-x, not 0
    Rat x = rq(1, 2);
    std::vector<Digit> ones(12, 1);
    std::vector<Convergent> cs = convergents(ones, x, TreeVariant::Backward);
    Rat qsum(0), xpow(1);
    for (int j = 0; j <= 12; ++j) {
        qsum += xpow;
        if (j < 12) xpow *= x;
    }
    CHECK(cs.back().q == qsum);
    CHECK(cs.back().p == 1);
}

TEST_CASE("orbit_modq_check reports a broken precondition") {
    // den(t) not divisible by q: the invariant fails at step zero
    ModQOrbitCheck chk = orbit_modq_check(rq(1, 3), rq(3, 2), TreeVariant::Forward, 10);
    CHECK(!chk.invariant_held);
    CHECK_THROWS(orbit_modq_check(rq(1, 3), rq(2), TreeVariant::Forward, 10));
}

TEST_CASE("forward orbit numerators decrease for integer x") {
    Rat x = rq(3);
    Rat t = rq(37, 61);
    Int prev_num = t.get_num();
    while (t != 0) {
        Rat w(x / t - x);
        t = w - Rat(rat_floor(w));
        if (t != 0) {
            CHECK(t.get_num() < prev_num);
            prev_num = t.get_num();
        }
    }
}
