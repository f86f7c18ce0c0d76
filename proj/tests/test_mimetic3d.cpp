#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "mimetic/checks.hpp"
#include "mimetic/grid.hpp"
#include "mimetic/inner.hpp"
#include "mimetic/material.hpp"
#include "mimetic/operators.hpp"

using namespace mimetic;

namespace {

Field3 spike(FieldKind kind, const GridSpec3& g, int comp) {
    Field3 f(kind, g);
    f.at(comp, 0, 0, 0) = 1.0;
    return f;
}

Material constant_material(const GridSpec3& g, double value) {
    auto scalar = [value](double, double, double) { return value; };
    auto vec = [value](int, double, double, double) { return value; };
    return sample_material(g, scalar, scalar, vec, vec);
}

constexpr std::array<FieldKind, 8> all_kinds{
    FieldKind::NodeScalar,     FieldKind::EdgeVector,
    FieldKind::FaceVector,     FieldKind::CellScalar,
    FieldKind::DualCellScalar, FieldKind::DualFaceVector,
    FieldKind::DualEdgeVector, FieldKind::DualNodeScalar,
};

}  // namespace

TEST_CASE("field kinds report components, dimension exponents and duality") {
    const std::array<int, 8> comps{1, 3, 3, 1, 1, 3, 3, 1};
    const std::array<int, 8> exps{0, 1, 2, 3, 3, 2, 1, 0};
    const std::array<bool, 8> dual{false, false, false, false, true, true, true, true};
    for (std::size_t n = 0; n < all_kinds.size(); ++n) {
        CAPTURE(kind_name(all_kinds[n]));
        CHECK(components(all_kinds[n]) == comps[n]);
        CHECK(dimension_exponent(all_kinds[n]) == exps[n]);
        CHECK(is_dual(all_kinds[n]) == dual[n]);
    }
    for (std::size_t n = 0; n < all_kinds.size(); ++n)
        for (std::size_t m = n + 1; m < all_kinds.size(); ++m)
            CHECK(std::string(kind_name(all_kinds[n])) != kind_name(all_kinds[m]));
}

TEST_CASE("co-located primal and dual kinds share their site offsets") {
    const std::array<std::pair<FieldKind, FieldKind>, 4> pairs{{
        {FieldKind::NodeScalar, FieldKind::DualCellScalar},
        {FieldKind::EdgeVector, FieldKind::DualFaceVector},
        {FieldKind::FaceVector, FieldKind::DualEdgeVector},
        {FieldKind::CellScalar, FieldKind::DualNodeScalar},
    }};
    for (const auto& [primal, dual_kind] : pairs)
        for (int c = 0; c < components(primal); ++c)
            CHECK(site_offset(primal, c) == site_offset(dual_kind, c));

    CHECK(site_offset(FieldKind::NodeScalar, 0) == std::array<double, 3>{0.0, 0.0, 0.0});
    CHECK(site_offset(FieldKind::CellScalar, 0) == std::array<double, 3>{0.5, 0.5, 0.5});
    CHECK(site_offset(FieldKind::EdgeVector, 1) == std::array<double, 3>{0.0, 0.5, 0.0});
    CHECK(site_offset(FieldKind::FaceVector, 1) == std::array<double, 3>{0.5, 0.0, 0.5});
    CHECK_THROWS_AS(site_offset(FieldKind::NodeScalar, 1), std::invalid_argument);

    const GridSpec3 g{4, 4, 4, 2.0, 1.0, 0.5};
    const auto p = site_position(g, FieldKind::EdgeVector, 0, 1, 2, 3);
    CHECK(p == std::array<double, 3>{3.0, 2.0, 1.5});
}

TEST_CASE("every difference operator raises the dimension exponent by one") {
    for (DiffOp op : {DiffOp::G, DiffOp::R, DiffOp::D, DiffOp::Gstar, DiffOp::Rstar,
                      DiffOp::Dstar}) {
        CAPTURE(diff_name(op));
        const FieldKind dom = diff_domain(op);
        const FieldKind cod = diff_codomain(op);
        CHECK(dimension_exponent(cod) == dimension_exponent(dom) + 1);
        CHECK(is_dual(dom) == is_dual(cod));
    }
    CHECK(diff_domain(DiffOp::G) == FieldKind::NodeScalar);
    CHECK(diff_codomain(DiffOp::G) == FieldKind::EdgeVector);
    CHECK(diff_domain(DiffOp::R) == FieldKind::EdgeVector);
    CHECK(diff_codomain(DiffOp::R) == FieldKind::FaceVector);
    CHECK(diff_domain(DiffOp::D) == FieldKind::FaceVector);
    CHECK(diff_codomain(DiffOp::D) == FieldKind::CellScalar);
    CHECK(diff_domain(DiffOp::Gstar) == FieldKind::DualNodeScalar);
    CHECK(diff_codomain(DiffOp::Dstar) == FieldKind::DualCellScalar);
}

TEST_CASE("the gradient of a node spike is a forward difference with wraparound") {
    const GridSpec3 g{4, 4, 4, 0.5, 0.25, 0.2};
    const Field3 gf = apply_diff(DiffOp::G, spike(FieldKind::NodeScalar, g, 0));
    REQUIRE(gf.kind() == FieldKind::EdgeVector);

    const std::array<double, 3> inv{1.0 / g.dx, 1.0 / g.dy, 1.0 / g.dz};
    for (int c = 0; c < 3; ++c)
        for (long k = 0; k < 4; ++k)
            for (long j = 0; j < 4; ++j)
                for (long i = 0; i < 4; ++i) {
                    double expected = 0.0;
                    const bool at_origin = (i == 0 && j == 0 && k == 0);
                    const bool before_wrap = (c == 0 && i == 3 && j == 0 && k == 0) ||
                                             (c == 1 && j == 3 && i == 0 && k == 0) ||
                                             (c == 2 && k == 3 && i == 0 && j == 0);
                    if (at_origin) expected = -inv[static_cast<std::size_t>(c)];
                    if (before_wrap) expected = inv[static_cast<std::size_t>(c)];
                    CHECK(gf.at(c, i, j, k) == expected);
                }
}

TEST_CASE("the dual gradient of a spike is a backward difference with wraparound") {
    const GridSpec3 g{4, 4, 4, 0.5, 1.0, 1.0};
    const Field3 gf = apply_diff(DiffOp::Gstar, spike(FieldKind::DualNodeScalar, g, 0));
    REQUIRE(gf.kind() == FieldKind::DualEdgeVector);
    CHECK(gf.at(0, 0, 0, 0) == 1.0 / g.dx);
    CHECK(gf.at(0, 1, 0, 0) == -1.0 / g.dx);
    CHECK(gf.at(0, 2, 0, 0) == 0.0);
    CHECK(gf.at(0, 3, 0, 0) == 0.0);
    CHECK(gf.at(1, 0, 0, 0) == 1.0);
    CHECK(gf.at(1, 0, 1, 0) == -1.0);
}

TEST_CASE("inner products apply the co-located weight or its reciprocal") {
    const GridSpec3 g{4, 4, 4, 0.5, 0.25, 0.2};
    const Material mat = constant_material(g, 2.0);
    const double vol = cell_volume(g);

    const Field3 n = spike(FieldKind::NodeScalar, g, 0);
    CHECK(inner(FieldKind::NodeScalar, n, n, mat) == doctest::Approx(2.0 * vol));

    const Field3 c = spike(FieldKind::CellScalar, g, 0);
    CHECK(inner(FieldKind::CellScalar, c, c, mat) == doctest::Approx(0.5 * vol));

    const Field3 e = spike(FieldKind::EdgeVector, g, 1);
    CHECK(inner(FieldKind::EdgeVector, e, e, mat) == doctest::Approx(2.0 * vol));

    const Field3 f = spike(FieldKind::FaceVector, g, 2);
    CHECK(inner(FieldKind::FaceVector, f, f, mat) == doctest::Approx(0.5 * vol));

    const Field3 dn = spike(FieldKind::DualNodeScalar, g, 0);
    CHECK(inner(FieldKind::DualNodeScalar, dn, dn, mat) == doctest::Approx(2.0 * vol));
}

TEST_CASE("inner products are bitwise symmetric and satisfy Cauchy-Schwarz") {
    const GridSpec3 g{6, 5, 4, 0.7, 1.1, 0.9};
    const Material mat = random_material(g, 31);
    for (FieldKind kind : all_kinds) {
        CAPTURE(kind_name(kind));
        const Field3 f = make_random_field(kind, g, 101);
        const Field3 h = make_random_field(kind, g, 102);
        const double fh = inner(kind, f, h, mat);
        CHECK(fh == inner(kind, h, f, mat));
        const double ff = inner(kind, f, f, mat);
        const double hh = inner(kind, h, h, mat);
        CHECK(ff > 0.0);
        CHECK(std::abs(fh) <= std::sqrt(ff * hh) * (1.0 + 1e-12));
    }
}

TEST_CASE("star maps are isometries and invert cleanly") {
    const GridSpec3 g{8, 8, 8, 0.7, 1.1, 0.9};
    const Material mat = random_material(g, 5);

    const Field3 e = make_random_field(FieldKind::EdgeVector, g, 77);
    const Field3 ae = apply_material(StarOp::A, e, mat);
    REQUIRE(ae.kind() == FieldKind::DualFaceVector);
    const double before = inner(FieldKind::EdgeVector, e, e, mat);
    const double after = inner(FieldKind::DualFaceVector, ae, ae, mat);
    CHECK(after == doctest::Approx(before).epsilon(1e-12));

    const Field3 back = apply_material(StarOp::A_inv, ae, mat);
    REQUIRE(back.kind() == FieldKind::EdgeVector);
    for (std::size_t i = 0; i < back.data().size(); ++i)
        CHECK(back.data()[i] == doctest::Approx(e.data()[i]).epsilon(1e-14).scale(1.0));

    const Field3 cs = make_random_field(FieldKind::CellScalar, g, 78);
    const Field3 bc = apply_material(StarOp::b_inv, cs, mat);
    REQUIRE(bc.kind() == FieldKind::DualNodeScalar);
    CHECK(inner(FieldKind::DualNodeScalar, bc, bc, mat) ==
          doctest::Approx(inner(FieldKind::CellScalar, cs, cs, mat)).epsilon(1e-12));
}

TEST_CASE("gradients of constants and compositions along each chain vanish") {
    for (const GridSpec3& g : {GridSpec3{4, 4, 4, 1.0, 1.0, 1.0},
                               GridSpec3{8, 8, 8, 0.7, 1.1, 0.9},
                               GridSpec3{16, 16, 16, 0.3, 0.25, 0.5}}) {
        const ExactnessReport rep = check_exactness(g, 3);
        REQUIRE_FALSE(rep.items.empty());
        for (const auto& item : rep.items) {
            CAPTURE(item.name);
            CHECK(item.residual <= item.bound);
        }
        CHECK(rep.all_within());
    }
}

TEST_CASE("the three duality pairings cancel to near rounding") {
    const GridSpec3 unit{8, 8, 8, 1.0, 1.0, 1.0};
    const AdjointReport a = check_adjoints(unit, unit_material(unit), 42);
    CHECK(a.max_residual() <= 1e-13);

    const GridSpec3 g{16, 16, 16, 0.7, 1.1, 0.9};
    const AdjointReport b = check_adjoints(g, random_material(g, 11), 7);
    CHECK(b.grad_residual <= 1e-13);
    CHECK(b.curl_residual <= 1e-13);
    CHECK(b.div_residual <= 1e-13);
}

TEST_CASE("composite operators are self-adjoint with a definite sign") {
    const GridSpec3 g{8, 8, 8, 0.9, 1.2, 0.8};
    const Material mat = random_material(g, 13);
    for (SecondOrderOp op : {SecondOrderOp::laplacian_P, SecondOrderOp::laplacian_V,
                             SecondOrderOp::curlcurl_C, SecondOrderOp::curlcurl_S}) {
        CAPTURE(second_order_name(op));
        const FieldKind dom = second_order_domain(op);
        const Field3 f = make_random_field(dom, g, 21);
        const Field3 h = make_random_field(dom, g, 22);
        const Field3 lf = second_order(op, mat, f);
        const Field3 lh = second_order(op, mat, h);

        const double lhs = inner(dom, lf, h, mat);
        const double rhs = inner(dom, f, lh, mat);
        const double scale = std::sqrt(inner(dom, lf, lf, mat) * inner(dom, h, h, mat));
        CHECK(std::abs(lhs - rhs) <= 1e-12 * scale);

        const double quad = inner(dom, lf, f, mat);
        const double ff = inner(dom, f, f, mat);
        if (op == SecondOrderOp::laplacian_P || op == SecondOrderOp::laplacian_V)
            CHECK(quad <= 1e-8 * ff);
        else
            CHECK(quad >= -1e-8 * ff);
    }
}

TEST_CASE("the node laplacian norm matches the separable eigenvalue formula") {
    const GridSpec3 unit{8, 8, 8, 1.0, 1.0, 1.0};
    const Material mu = unit_material(unit);
    CHECK(operator_norm_estimate(SecondOrderOp::laplacian_P, unit, mu, 1e-10) ==
          doctest::Approx(12.0).epsilon(1e-4));
    CHECK(operator_norm_estimate(SecondOrderOp::laplacian_V, unit, mu, 1e-10) ==
          doctest::Approx(12.0).epsilon(1e-4));

    const GridSpec3 coarse{8, 8, 8, 2.0, 2.0, 2.0};
    CHECK(operator_norm_estimate(SecondOrderOp::laplacian_P, coarse,
                                 unit_material(coarse), 1e-10) ==
          doctest::Approx(3.0).epsilon(1e-4));

    const double first = operator_norm_estimate(SecondOrderOp::curlcurl_C, unit, mu, 1e-10);
    const double again = operator_norm_estimate(SecondOrderOp::curlcurl_C, unit, mu, 1e-10);
    CHECK(first == again);
    const double reseeded =
        operator_norm_estimate(SecondOrderOp::curlcurl_C, unit, mu, 1e-10, 999);
    CHECK(reseeded == doctest::Approx(first).epsilon(1e-6));
}

TEST_CASE("misuse of grids, kinds and materials is rejected") {
    CHECK_THROWS_AS(validate(GridSpec3{1, 4, 4, 1.0, 1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate(GridSpec3{4, 4, 4, 0.0, 1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate(GridSpec3{4, 4, -4, 1.0, 1.0, 1.0}), std::invalid_argument);

    const GridSpec3 g{4, 4, 4, 1.0, 1.0, 1.0};
    const Field3 wrong = spike(FieldKind::FaceVector, g, 0);
    CHECK_THROWS_AS(apply_diff(DiffOp::G, wrong), std::invalid_argument);
    CHECK_THROWS_AS(apply_material(StarOp::a, wrong, unit_material(g)),
                    std::invalid_argument);

    const Field3 node = spike(FieldKind::NodeScalar, g, 0);
    CHECK_THROWS_AS(inner(FieldKind::EdgeVector, node, node, unit_material(g)),
                    std::invalid_argument);
    const GridSpec3 other{4, 4, 4, 2.0, 1.0, 1.0};
    CHECK_THROWS_AS(inner(FieldKind::NodeScalar, node, node, unit_material(other)),
                    std::invalid_argument);

    Material bad = unit_material(g);
    bad.a.data()[3] = 0.0;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    bad.a.data()[3] = -1.0;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}

TEST_CASE("seeded random fields reproduce and differ across seeds") {
    const GridSpec3 g{4, 4, 4, 1.0, 1.0, 1.0};
    const Field3 a = make_random_field(FieldKind::EdgeVector, g, 9);
    const Field3 b = make_random_field(FieldKind::EdgeVector, g, 9);
    CHECK(a.data() == b.data());
    const Field3 c = make_random_field(FieldKind::EdgeVector, g, 10);
    CHECK(a.data() != c.data());
    CHECK(mimetic::max_abs(a) <= 1.0);
    CHECK(mimetic::max_abs(a) > 0.0);
    CHECK(all_finite(a));
}
