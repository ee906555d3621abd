#include <doctest.h>

#include <cmath>

#include "dslv/asymptotics.hpp"
#include "dslv/recurrence.hpp"
#include "generators.hpp"

using namespace dslv;

namespace {

ScanConfig config(std::vector<double> lambdas, std::vector<PotentialSpec> fams, Index N = 10000) {
    ScanConfig c;
    c.lambda_grid = std::move(lambdas);
    c.families = std::move(fams);
    c.horizon = N;
    return c;
}

} // namespace

TEST_CASE("affine decomposition defect") {
    const auto zero = PotentialSpec::zero().generate(0, 10000);
    CHECK(affine_decomposition_defect(zero, 2.0, 1.0, 3) == 0.0);
    CHECK(affine_decomposition_defect(zero, 1.3, 0.0, 1000) == 0.0);

    SUBCASE("hand-unrolled lambda = 2 solutions") {
        const auto pr = unit_problem(zero, 3, 1.0);
        const auto x = forward_recurrence(pr, 2.0, InitKind::x, 3);
        const auto y = forward_recurrence(pr, 2.0, InitKind::y, 3);
        const auto s = forward_recurrence(pr, 2.0, InitKind::s, 3);
        const double ex[] = {-1, 1, 1, -1}, ey[] = {1, 0, -1, 0}, es[] = {0, 1, 0, -1};
        for (Index n = 0; n <= 3; ++n) {
            CHECK(x[n] == ex[n]);
            CHECK(y[n] == ey[n]);
            CHECK(s[n] == es[n]);
        }
    }

    SUBCASE("random potential at h = 1e4") {
        const auto q = PotentialSpec::random(5, -0.05, 0.05).generate(0, 10000);
        CHECK(affine_decomposition_defect(q, 1.3, 1e4, 10000) <= 1e-9);
    }

    SUBCASE("property: small defects across h and lambda") {
        dslv::testing::Gen g(6);
        for (int t = 0; t < 20; ++t) {
            const auto q = PotentialSpec::decay(g.real(-1, 1)).generate(0, 2000);
            const double lam = g.real(0.1, 3.9);
            const double h = g.real(-1e4, 1e4);
            CHECK(affine_decomposition_defect(q, lam, h, 2000) <= 1e-9);
        }
    }
}

TEST_CASE("scan_y_bound") {
    SUBCASE("lambda = 2 has sup exactly one") {
        const auto rep = scan_y_bound(config({2.0}, {PotentialSpec::zero()}));
        REQUIRE(rep.y_rows.size() == 1);
        CHECK(rep.y_rows[0].sup_full == 1.0);
        CHECK(rep.y_rows[0].sup_tenth == 1.0);
        CHECK(rep.y_rows[0].pass);
    }
    SUBCASE("lambda = 1 is periodic and bounded by 2") {
        const auto rep = scan_y_bound(config({1.0}, {PotentialSpec::zero()}));
        CHECK(rep.y_rows[0].sup_full <= 2.0);
        CHECK(rep.y_rows[0].pass);
    }
    SUBCASE("constant potentials shift lambda") {
        const auto in = scan_y_bound(config({2.0}, {PotentialSpec::constant(1.0)}));
        CHECK(in.y_rows[0].pass);
        const auto out = scan_y_bound(config({3.9}, {PotentialSpec::constant(0.5)}));
        CHECK_FALSE(out.y_rows[0].pass);
    }
    SUBCASE("overflowing rows fail and report log sups") {
        const auto rep = scan_y_bound(config({5.0, 2.0}, {PotentialSpec::zero()}));
        const auto& r = rep.y_rows[0];
        CHECK(r.outside_disc);
        CHECK_FALSE(r.pass);
        CHECK(std::isinf(r.sup_full));
        // ρ+ = (-3 - √5)/2 at λ = 5, so log10 sup ≈ N log10|ρ+|.
        const double slope = std::log10((3.0 + std::sqrt(5.0)) / 2.0);
        CHECK(std::abs(r.log10_sup_full - 10000 * slope) < 1.0);
        CHECK(std::abs(r.log10_sup_tenth - 1000 * slope) < 1.0);
        CHECK(rep.pass_count() == 1);
        CHECK(rep.fail_count() == 1);
    }
    SUBCASE("row order follows the grid") {
        const auto rep = scan_y_bound(config({0.5, 3.5}, {PotentialSpec::zero(), PotentialSpec::decay(1.0)}, 1000));
        REQUIRE(rep.y_rows.size() == 4);
        CHECK(rep.y_rows[0].lambda == 0.5);
        CHECK(rep.y_rows[1].family == "decay:1");
        CHECK(rep.y_rows[2].lambda == 3.5);
        CHECK(rep.y_rows[3].family == "decay:1");
    }
}

TEST_CASE("scan_h_growth") {
    SUBCASE("lambda = 2 sup is |h|") {
        auto c = config({2.0}, {PotentialSpec::zero()});
        c.h_grid = {100.0, 10000.0};
        const auto rep = scan_h_growth(c);
        REQUIRE(rep.h_rows.size() == 2);
        CHECK(rep.h_rows[0].sup_x == 100.0);
        CHECK(rep.h_rows[1].sup_x == 10000.0);
        CHECK(rep.h_rows[0].ratio == 1.0);
        CHECK(rep.h_rows[0].pass);
        CHECK(rep.h_rows[1].pass);
    }
    SUBCASE("decay family ratios agree") {
        auto c = config({1.5}, {PotentialSpec::decay(1.0)});
        c.h_grid = {100.0, 10000.0};
        const auto rep = scan_h_growth(c);
        CHECK(std::abs(rep.h_rows[0].ratio / rep.h_rows[1].ratio - 1.0) < 0.05);
        CHECK(rep.h_rows[0].pass);
    }
    SUBCASE("sandwich and affine invariants") {
        auto c = config({0.5, 1.5, 2.0, 3.5}, {PotentialSpec::decay(-1.0), PotentialSpec::random(3, -0.05, 0.05)});
        c.h_grid = {1.0, 2.0, 100.0, 200.0, 1e4};
        const auto rep = scan_h_growth(c);
        CHECK(rep.h_rows.size() == 40);
        CHECK(rep.y_rows.size() == 8);
        for (const auto& r : rep.h_rows) {
            CHECK(r.affine_defect <= 1e-9);
            CHECK(r.sandwich_slack <= 1e-12 * r.sup_x);
        }
    }
    SUBCASE("grid validation") {
        auto c = config({2.0}, {PotentialSpec::zero()});
        c.h_grid = {0.5, 100.0};
        CHECK_THROWS_AS(scan_h_growth(c), Error);
        c.h_grid = {};
        CHECK_THROWS_AS(scan_h_growth(c), Error);
    }
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(scan_y_bound(config({}, {PotentialSpec::zero()})), Error);
    CHECK_THROWS_AS(scan_y_bound(config({1.0}, {})), Error);
    CHECK_THROWS_AS(scan_y_bound(config({1.0}, {PotentialSpec::zero()}, 50)), Error);
    auto c = config({1.0}, {PotentialSpec::zero()});
    c.stabilization_ratio = 0.9;
    CHECK_THROWS_AS(scan_y_bound(c), Error);
}

TEST_CASE("determinism across job counts") {
    auto c = config({0.5, 1.0, 2.5, 3.5}, {PotentialSpec::random(42, -0.05, 0.05), PotentialSpec::decay(1.0)}, 5000);
    c.h_grid = {100.0, 10000.0};
    const auto a = scan_h_growth(c);
    c.jobs = 4;
    const auto b = scan_h_growth(c);
    REQUIRE(a.h_rows.size() == b.h_rows.size());
    for (std::size_t i = 0; i < a.h_rows.size(); ++i) {
        CHECK(a.h_rows[i].sup_x == b.h_rows[i].sup_x);
        CHECK(a.h_rows[i].affine_defect == b.h_rows[i].affine_defect);
        CHECK(a.h_rows[i].family == b.h_rows[i].family);
    }
    for (std::size_t i = 0; i < a.y_rows.size(); ++i) CHECK(a.y_rows[i].sup_full == b.y_rows[i].sup_full);
}
