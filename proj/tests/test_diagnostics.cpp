#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mimetic/diagnostics.hpp"

using namespace mimetic;

TEST_CASE("format_g17 round-trips doubles through decimal text") {
    for (double x : {0.0, 1.0, 0.1, -1.0 / 3.0, 6.02214076e23, -2.5e-308,
                     1.7976931348623157e308, 4.9406564584124654e-324}) {
        const std::string s = format_g17(x);
        CHECK(std::strtod(s.c_str(), nullptr) == x);
    }
}

TEST_CASE("append enforces label count and increasing steps") {
    ConservedSeries series({"a", "b"});
    series.append(0, 0.0, {1.0, 2.0});
    CHECK_THROWS_AS(series.append(1, 0.1, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(series.append(0, 0.1, {1.0, 2.0}), std::invalid_argument);
    series.append(1, 0.1, {1.0, 2.0});
    CHECK(series.entries.size() == 2);
}

TEST_CASE("drift_report measures deviation from the first entry") {
    ConservedSeries series({"C"});
    SUBCASE("a constant column has zero drift") {
        for (long n = 0; n < 5; ++n) series.append(n, 0.1 * n, {2.5});
        const DriftReport rep = drift_report(series, "C");
        CHECK(rep.first_value == 2.5);
        CHECK(rep.max_abs_drift == 0.0);
        CHECK(rep.max_rel_drift == 0.0);
    }
    SUBCASE("a small deviation is reported relative to the first value") {
        series.append(0, 0.0, {1.0});
        series.append(1, 0.1, {1.0 + 1e-13});
        const DriftReport rep = drift_report(series, "C");
        CHECK(rep.max_abs_drift == doctest::Approx(1e-13).epsilon(1e-2));
        CHECK(rep.max_rel_drift == doctest::Approx(1e-13).epsilon(1e-2));
    }
    SUBCASE("an unknown label throws") {
        series.append(0, 0.0, {1.0});
        CHECK_THROWS_AS(drift_report(series, "missing"), std::invalid_argument);
    }
}

TEST_CASE("convergence_order recovers the slope of err = C h^p") {
    std::vector<std::pair<double, double>> quad, lin;
    for (double h : {0.1, 0.05, 0.025, 0.0125}) {
        quad.emplace_back(h, 3.0 * h * h);
        lin.emplace_back(h, 0.7 * h);
    }
    CHECK(convergence_order(quad) == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(convergence_order(lin) == doctest::Approx(1.0).epsilon(1e-10));

    CHECK_THROWS_AS(convergence_order({{0.1, 1.0}, {0.05, 0.5}}), std::invalid_argument);
    CHECK_THROWS_AS(convergence_order({{0.05, 1.0}, {0.1, 0.5}, {0.2, 0.25}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(convergence_order({{0.1, 1.0}, {0.05, 0.0}, {0.025, 0.1}}),
                    std::invalid_argument);
}

TEST_CASE("stability_probe flags growth past the blowup factor") {
    auto step = [](double x) { return 1.5 * x; };
    auto norm = [](double x) { return std::abs(x); };

    const StabilityReport grow = stability_probe(step, norm, 1.0, 100, 1e3);
    CHECK_FALSE(grow.stable);
    CHECK(grow.unstable_at_step == 18);

    const StabilityReport calm = stability_probe(step, norm, 1.0, 10, 1e3);
    CHECK(calm.stable);
    CHECK(calm.unstable_at_step == -1);

    const StabilityReport zero = stability_probe(step, norm, 0.0, 100, 1e3);
    CHECK(zero.stable);

    CHECK_THROWS_AS(stability_probe(step, norm, 1.0, 10, 1.0), std::invalid_argument);
}

TEST_CASE("write_csv renders a stable byte-exact ledger") {
    ConservedSeries series({"C_n", "C_half"});
    series.append(0, 0.0, {1.0, 0.5});
    series.append(1, 0.25, {1.0, 0.1});
    std::ostringstream out;
    write_csv(series, out);
    CHECK(out.str() ==
          "step,time,C_n,C_half\n"
          "0,0,1,0.5\n"
          "1,0.25,1,0.10000000000000001\n");
}
