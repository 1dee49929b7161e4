#include <doctest.h>

#include <cmath>
#include <random>

#include "farey/roots.hpp"

using namespace farey;

namespace {

Rat rq(long n, long d = 1) { return make_rat(Int(n), Int(d)); }

bool contains_near(const std::vector<IsolatingInterval>& ivs, double value, double slack) {
    for (const IsolatingInterval& iv : ivs)
        if (iv.lo.get_d() - slack <= value && value <= iv.hi.get_d() + slack) return true;
    return false;
}

}  // namespace

TEST_CASE("isolate_real_roots") {
    RootIsolation quad = isolate_real_roots(IntPoly::from_ints({1, 3, 1}));
    REQUIRE(quad.intervals.size() == 2);
    CHECK(quad.input_square_free);
    CHECK(contains_near(quad.intervals, -2.618, 1e-3));
    CHECK(contains_near(quad.intervals, -0.382, 1e-3));
    CHECK(quad.intervals[0].hi <= quad.intervals[1].lo);

    RootIsolation fact = isolate_real_roots(IntPoly::from_ints({0, 1, 1}));  // x(x+1)
    REQUIRE(fact.intervals.size() == 2);
    CHECK(contains_near(fact.intervals, -1.0, 1e-9));
    CHECK(contains_near(fact.intervals, 0.0, 1e-9));

    RootIsolation fig = isolate_real_roots(IntPoly::from_ints({40, 44, 13, 1}));
    REQUIRE(fig.intervals.size() == 3);
    for (IsolatingInterval& iv : fig.intervals)
        iv = refine(fig.square_free_part, iv, rq(1, 1000000));
    CHECK(fig.intervals[0].midpoint().get_d() == doctest::Approx(-8.2588).epsilon(1e-3));
    CHECK(fig.intervals[1].midpoint().get_d() == doctest::Approx(-3.2517).epsilon(1e-3));
    CHECK(fig.intervals[2].midpoint().get_d() == doctest::Approx(-1.4895).epsilon(1e-3));
}

TEST_CASE("isolation reports non-square-free input distinctly") {
    RootIsolation r = isolate_real_roots(IntPoly::from_ints({1, 2, 1}));  // (x+1)^2
    CHECK(!r.input_square_free);
    REQUIRE(r.intervals.size() == 1);
    CHECK(contains_near(r.intervals, -1.0, 1e-9));
}

TEST_CASE("interval counts match the full-line Sturm count") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> coeff(-8, 8);
    for (int i = 0; i < 50; ++i) {
        std::vector<Int> c;
        int deg = 1 + static_cast<int>(rng() % 6);
        for (int j = 0; j <= deg; ++j) c.emplace_back(coeff(rng));
        IntPoly f(std::move(c));
        if (f.degree() < 1) continue;
        RootIsolation iso = isolate_real_roots(f);
        CHECK(static_cast<int>(iso.intervals.size()) ==
              SturmChain::build(f).count_all());
    }
}

TEST_CASE("refine") {
    IntPoly lin = IntPoly::from_ints({1, 1});
    RootIsolation iso = isolate_real_roots(lin);
    IsolatingInterval iv = refine(lin, iso.intervals[0], rq(1, 1000000));
    CHECK(iv.width() <= rq(1, 1000000));
    CHECK(iv.lo < rq(-1));
    CHECK(rq(-1) < iv.hi);

    IntPoly quad = IntPoly::from_ints({1, 3, 1});
    RootIsolation iso2 = isolate_real_roots(quad);
    IsolatingInterval larger = refine(quad, iso2.intervals[1], rq(1, 10));
    for (int k = 0; k < 3; ++k) {
        larger = refine(quad, larger, Rat(larger.width() / 1000));
        CHECK(sign_at(quad, larger.lo) * sign_at(quad, larger.hi) < 0);
    }
    // (-3+sqrt(5))/2 = -0.3819660112...
    CHECK(larger.midpoint().get_d() == doctest::Approx(-0.3819660112).epsilon(1e-8));
}

TEST_CASE("interlacing verdicts") {
    RatFunc v1{IntPoly::from_ints({0, 1, 1}), IntPoly::from_ints({1, 3, 1}),
               TreeVariant::Forward};
    InterlaceReport r1 = interlacing_verdict(v1);
    CHECK(r1.pass());
    REQUIRE(r1.merged.size() == 4);
    CHECK(r1.merged[0] == doctest::Approx(-2.618).epsilon(1e-2));
    CHECK(r1.merged[1] == doctest::Approx(-1.0).epsilon(1e-6));
    CHECK(r1.merged[2] == doctest::Approx(-0.382).epsilon(1e-2));
    CHECK(std::abs(r1.merged[3]) < 1e-9);

    RatFunc root{IntPoly::from_ints({0, 1}), IntPoly::from_ints({1, 1}), TreeVariant::Forward};
    CHECK(interlacing_verdict(root).pass());

    RatFunc fig{IntPoly::from_ints({20, 34, 12, 1}), IntPoly::from_ints({40, 44, 13, 1}),
                TreeVariant::Forward};
    CHECK(interlacing_verdict(fig).pass());

    // constructed violation: shares no interlacing structure
    RatFunc bad{IntPoly::from_ints({2, 1}), IntPoly::from_ints({1, 1}), TreeVariant::Forward};
    CHECK(!interlacing_verdict(bad).pass());
}

TEST_CASE("complex roots of small polynomials") {
    ComplexRoots r1 = complex_roots(IntPoly::from_ints({1, 1, 1}), 1e-10);
    REQUIRE(r1.roots.size() == 2);
    CHECK(r1.converged);
    for (const ComplexApprox& r : r1.roots) {
        CHECK(r.re == doctest::Approx(-0.5).epsilon(1e-8));
        CHECK(std::abs(r.im) == doctest::Approx(0.8660254038).epsilon(1e-8));
        CHECK(r.radius < 1e-8);
    }

    ComplexRoots r2 = complex_roots(IntPoly::from_ints({1, 1, 1, 1}), 1e-10);
    REQUIRE(r2.roots.size() == 3);
    bool saw_minus_one = false, saw_i = false, saw_minus_i = false;
    for (const ComplexApprox& r : r2.roots) {
        if (std::hypot(r.re + 1, r.im) < 1e-8) saw_minus_one = true;
        if (std::hypot(r.re, r.im - 1) < 1e-8) saw_i = true;
        if (std::hypot(r.re, r.im + 1) < 1e-8) saw_minus_i = true;
    }
    CHECK(saw_minus_one);
    CHECK(saw_i);
    CHECK(saw_minus_i);

    ComplexRoots r3 = complex_roots(IntPoly::from_ints({1, 1}), 1e-10);
    REQUIRE(r3.roots.size() == 1);
    CHECK(r3.roots[0].re == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("Vieta sums and products") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<long> coeff(-5, 5);
    int tested = 0;
    while (tested < 20) {
        std::vector<Int> c;
        int deg = 2 + static_cast<int>(rng() % 5);
        for (int j = 0; j <= deg; ++j) c.emplace_back(coeff(rng));
        IntPoly f(std::move(c));
        if (f.degree() < 2 || !is_square_free(f)) continue;
        ++tested;
        double tol = 1e-9;
        ComplexRoots cr = complex_roots(f, tol);
        if (!cr.converged) continue;
        int d = f.degree();
        double lead = Rat(f.c.back()).get_d();
        std::complex<double> sum(0, 0), prod(1, 0);
        for (const ComplexApprox& r : cr.roots) {
            sum += std::complex<double>(r.re, r.im);
            prod *= std::complex<double>(r.re, r.im);
        }
        double expect_sum = -Rat(f.c[d - 1]).get_d() / lead;
        double expect_prod = (d % 2 == 0 ? 1 : -1) * Rat(f.c[0]).get_d() / lead;
        CHECK(std::abs(sum.real() - expect_sum) < 10 * tol * (1 + std::abs(expect_sum)));
        CHECK(std::abs(sum.imag()) < 10 * tol);
        CHECK(std::abs(prod.real() - expect_prod) < 10 * tol * (1 + std::abs(expect_prod)));
    }
}

TEST_CASE("unit circle checks") {
    UnitCircleReport r2 = unit_circle_check(2, 1e-8);
    CHECK(r2.identity_ok);
    CHECK(r2.bijective);
    CHECK(r2.max_distance < 1e-8);

    UnitCircleReport r1 = unit_circle_check(1, 1e-8);
    CHECK(r1.pass(1e-8));

    UnitCircleReport r10 = unit_circle_check(10, 1e-8);
    CHECK(r10.pass(1e-8));
}
