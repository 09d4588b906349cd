/*
   Copyright 2026 The hilbcurve Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "hilbcurve/chart_mu.hpp"
#include "hilbcurve/chart_un.hpp"
#include "hilbcurve/partition.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace hilbcurve;
using hilbcurve::testing::random_monic;
using hilbcurve::testing::random_rational;
using hilbcurve::testing::random_unipoly;

namespace {

// Coordinates of the (2,1) chart in the a_i, b_i, c_i naming: x^2, y^2, xy
// expanded on the boxes 1, x, y.
struct SkewNames {
    std::string a[3], b[3], c[3];
};

SkewNames skew_names() {
    const Monomial boxes[3] = {{0, 0}, {1, 0}, {0, 1}};
    SkewNames n;
    for (int i = 0; i < 3; ++i) {
        n.a[i] = chart_variable({2, 0}, boxes[i]);
        n.b[i] = chart_variable({0, 2}, boxes[i]);
        n.c[i] = chart_variable({1, 1}, boxes[i]);
    }
    return n;
}

// Distinct points of the plane with small integer coordinates.
std::vector<std::pair<Rational, Rational>> random_support(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> coord(-5, 5);
    std::vector<std::pair<Rational, Rational>> pts;
    while (pts.size() < n) {
        std::pair<Rational, Rational> p{coord(rng), coord(rng)};
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    return pts;
}

std::optional<PointAssignment> random_chart_point(std::mt19937_64& rng, const ChartPresentation& pres) {
    for (int attempt = 0; attempt < 200; ++attempt)
        if (auto pt = chart_point_from_support(pres, random_support(rng, pres.n()))) return pt;
    return std::nullopt;
}

} // namespace

TEST_CASE("presentation shape") {
    for (unsigned n = 1; n <= 5; ++n)
        for (const auto& mu : partitions_bounded(n, n)) {
            CAPTURE(to_string(mu));
            auto pres = build_presentation(mu);
            CHECK(pres.variables->size() == pres.border.size() * n);
            std::set<std::string> names(pres.variables->names().begin(), pres.variables->names().end());
            CHECK(names.size() == pres.variables->size());
            for (std::size_t j = 0; j < n; ++j) {
                const Monomial box = pres.basis[j];
                if (mu.contains({box.r + 1, box.s}))
                    for (std::size_t i = 0; i < n; ++i)
                        CHECK(pres.x(i, j).constant_value() ==
                              Rational(i == pres.basis_index({box.r + 1, box.s}) ? 1 : 0));
                if (mu.contains({box.r, box.s + 1}))
                    for (std::size_t i = 0; i < n; ++i)
                        CHECK(pres.y(i, j).constant_value() ==
                              Rational(i == pres.basis_index({box.r, box.s + 1}) ? 1 : 0));
            }
            // Quadratic commutator entries before sharing.
            for (const auto& rel : raw_commutator_relations(pres)) CHECK(*rel.total_degree() <= 2);
            // Only non-corner border variables are ever eliminated.
            for (const auto& [name, value] : pres.shared) {
                bool corner = false;
                for (const auto& c : pres.corners)
                    for (const auto& box : pres.basis) corner |= chart_variable(c, box) == name;
                CHECK_FALSE(corner);
                for (const auto& [other, ignored] : pres.shared)
                    CHECK_FALSE(value.depends_on(*pres.variables->index(other)));
            }
        }
    CHECK_THROWS_AS(build_presentation(Partition{}), Error);
}

TEST_CASE("the one-point chart") {
    auto pres = build_presentation(Partition{1});
    CHECK(pres.variables->size() == 2);
    CHECK(commutator_relations(pres).empty());
    CHECK(raw_commutator_relations(pres).empty());
}

TEST_CASE("the (2) chart") {
    auto pres = build_presentation(Partition{2});
    CHECK(pres.variables->size() == 6);
    CHECK(commutator_relations(pres).empty());
    CHECK(pres.free_variables().size() == 4);

    auto v = [&](const char* name) { return MultiPoly::variable(pres.variables, name); };
    MultiPoly a = v("C[0,1][0,0]"), b = v("C[0,1][1,0]"), c = v("C[2,0][0,0]"), d = v("C[2,0][1,0]");
    // y * x expressed through the free coordinates.
    CHECK(pres.shared.at("C[1,1][0,0]") == b * c);
    CHECK(pres.shared.at("C[1,1][1,0]") == a + b * d);

    auto z = zbeta_equations(pres, 2);
    REQUIRE(z.size() == 2);
    CHECK(z[0] == a * a + b * b * c);
    CHECK(z[1] == Rational(2) * a * b + b * b * d);

    SUBCASE("both families of solutions") {
        const std::vector<std::string> wrt = {"C[0,1][0,0]", "C[0,1][1,0]", "C[2,0][0,0]", "C[2,0][1,0]"};
        auto params = make_variables({"s", "t"});
        MultiPoly s = MultiPoly::variable(params, "s"), t = MultiPoly::variable(params, "t");
        MultiPoly zero(params);
        // a = b = 0 with c, d free; and a = -bd/2, c = -d^2/4 with b, d free.
        std::vector<std::vector<MultiPoly>> families = {
            {zero, zero, s, t},
            {s * t * make_rational(-1, 2), s, t * t * make_rational(-1, 4), t},
        };
        std::mt19937_64 rng(31);
        for (const auto& fam : families) {
            for (const auto& eq : z) {
                // Substitute the family symbolically by evaluating at many points.
                for (int k = 0; k < 10; ++k) {
                    PointAssignment st{{"s", random_rational(rng)}, {"t", random_rational(rng)}};
                    PointAssignment pt;
                    for (std::size_t i = 0; i < 4; ++i) pt[wrt[i]] = fam[i].evaluate(st);
                    CHECK(is_zero(eq.evaluate(pt)));
                    CHECK(substitute_point(pres, pt, 2).on_zbeta());
                }
            }
            PointAssignment st{{"s", make_rational(3, 2)}, {"t", make_rational(-5)}};
            RationalMatrix jac(4, 2);
            for (std::size_t i = 0; i < 4; ++i) {
                jac(i, 0) = fam[i].partial_derivative("s").evaluate(st);
                jac(i, 1) = fam[i].partial_derivative("t").evaluate(st);
            }
            CHECK(rank(jac) == 2);
        }
    }

    SUBCASE("point residuals") {
        auto pt = [](long a, long b, long c, long d) {
            return PointAssignment{{"C[0,1][0,0]", a}, {"C[0,1][1,0]", b}, {"C[2,0][0,0]", c}, {"C[2,0][1,0]", d}};
        };
        auto e1 = substitute_point(pres, pt(-1, 1, -1, 2), 2);
        CHECK(e1.commuting());
        CHECK(e1.zbeta == std::vector<Rational>{0, 0});
        CHECK(substitute_point(pres, pt(0, 0, 7, -3), 2).on_zbeta());
        auto e3 = substitute_point(pres, pt(1, 0, 0, 0), 2);
        CHECK(e3.zbeta == std::vector<Rational>{1, 0});
        CHECK_THROWS_AS(substitute_point(pres, PointAssignment{{"C[0,1][0,0]", 1}}), Error);
        auto bad = pt(0, 0, 0, 0);
        bad["nope"] = 1;
        CHECK_THROWS_AS(substitute_point(pres, bad), Error);
    }
}

TEST_CASE("the (1,1) chart") {
    auto pres = build_presentation(Partition{1, 1});
    CHECK(pres.variables->size() == 6);
    CHECK(commutator_relations(pres).empty());
    auto z = zbeta_equations(pres, 2);
    REQUIRE(z.size() == 2);
    CHECK(z[0] == MultiPoly::variable(pres.variables, "C[0,2][0,0]"));
    CHECK(z[1] == MultiPoly::variable(pres.variables, "C[0,2][0,1]"));
}

TEST_CASE("the (2,1) chart") {
    auto pres = build_presentation(Partition{2, 1});
    CHECK(pres.variables->size() == 9);
    CHECK(pres.shared.empty());
    const auto n = skew_names();
    auto v = [&](const std::string& name) { return MultiPoly::variable(pres.variables, name); };
    auto rels = commutator_relations(pres);
    CHECK(rels.size() == 6);

    // The three solved relations, in the paper's a_i, b_i, c_i naming.
    Assignment solved{
        {n.b[0], v(n.c[1]) * v(n.c[1]) + v(n.b[1]) * v(n.c[2]) - v(n.b[2]) * v(n.c[1]) - v(n.a[1]) * v(n.b[1])},
        {n.c[0], v(n.a[2]) * v(n.b[1]) - v(n.c[1]) * v(n.c[2])},
        {n.a[0], v(n.a[2]) * v(n.c[1]) + v(n.c[2]) * v(n.c[2]) - v(n.a[1]) * v(n.c[2]) - v(n.a[2]) * v(n.b[2])},
    };
    for (const auto& rel : rels) CHECK(rel.substitute(solved).is_zero());

    SUBCASE("the Z_2 slice is a 3-parameter family") {
        MultiPoly zero(pres.variables);
        Assignment slice{{n.b[0], zero}, {n.b[1], zero}, {n.b[2], zero}, {n.c[0], zero}, {n.c[1], zero},
                         {n.a[0], v(n.c[2]) * v(n.c[2]) - v(n.a[1]) * v(n.c[2])}};
        for (const auto& eq : zbeta_equations(pres, 2)) CHECK(eq.substitute(slice).is_zero());
        for (const auto& rel : rels) CHECK(rel.substitute(slice).is_zero());
        CHECK_FALSE(zbeta_inconsistent(zbeta_equations(pres, 2)));

        // Jacobian of (a2, a3, c3) -> all nine coordinates.
        std::vector<MultiPoly> coords;
        for (const auto& name : pres.variables->names())
            coords.push_back(slice.contains(name) ? slice.at(name) : v(name));
        PointAssignment at{{n.a[1], 2}, {n.a[2], -3}, {n.c[2], 5}};
        CHECK(jacobian_rank(coords, {n.a[1], n.a[2], n.c[2]}, at) == 3);
    }
}

TEST_CASE("sampled chart points commute") {
    std::mt19937_64 rng(32);
    for (unsigned n = 1; n <= 4; ++n)
        for (const auto& mu : partitions_bounded(n, n)) {
            CAPTURE(to_string(mu));
            auto pres = build_presentation(mu);
            auto rels = commutator_relations(pres);
            for (int trial = 0; trial < 10; ++trial) {
                auto pt = random_chart_point(rng, pres);
                REQUIRE(pt);
                PointAssignment free;
                for (const auto& name : pres.free_variables()) free[name] = pt->at(name);
                auto eval = substitute_point(pres, free);
                CHECK(eval.commuting());
                CHECK(eval.x * eval.y == eval.y * eval.x);
                // Shared variables reproduce the true coordinates.
                for (const auto& [name, expr] : pres.shared) CHECK(expr.evaluate(free) == pt->at(name));
                for (const auto& rel : rels) CHECK(is_zero(rel.evaluate(free)));
            }
        }
}

TEST_CASE("single-row and single-column charts carry no relations") {
    for (unsigned n = 1; n <= 6; ++n) {
        std::vector<unsigned> ones(n, 1);
        CHECK(commutator_relations(build_presentation(Partition{n})).empty());
        CHECK(commutator_relations(build_presentation(Partition(ones))).empty());
        CHECK(build_presentation(Partition{n}).free_variables().size() == 2 * n);
    }
}

TEST_CASE("relation rank on larger rectangles") {
    // #vars - 2n at points of the chart.
    std::mt19937_64 rng(33);
    for (const Partition& mu : {Partition{2, 2}, Partition{3, 2}, Partition{2, 2, 2}, Partition{2, 1}, Partition{3, 1}}) {
        CAPTURE(to_string(mu));
        auto pres = build_presentation(mu);
        auto rels = raw_commutator_relations(pres);
        for (int trial = 0; trial < 3; ++trial) {
            auto pt = random_chart_point(rng, pres);
            REQUIRE(pt);
            CHECK(jacobian_rank(rels, pres.variables->names(), *pt) == pres.variables->size() - 2 * pres.n());
        }
    }
}

TEST_CASE("too many rows force a unit coefficient to vanish") {
    for (unsigned n = 1; n <= 4; ++n)
        for (const auto& mu : partitions_bounded(n, n))
            for (unsigned beta = 1; beta <= 4; ++beta) {
                CAPTURE(to_string(mu));
                CAPTURE(beta);
                auto eqs = zbeta_equations(build_presentation(mu), beta);
                CHECK(zbeta_inconsistent(eqs) == !rows_at_most(mu, beta));
            }
}

TEST_CASE("embedding the (n) chart") {
    auto ideal = [](const UniPoly& a, const UniPoly& b) { return ChartIdealN(a, b); };
    auto pres2 = build_presentation(Partition{2});
    auto e1 = substitute_point(pres2, embed_un_point(ideal(UniPoly{0, 0, 1}, UniPoly{0, 1})), 2);
    CHECK(e1.commuting());
    CHECK(e1.on_zbeta());
    CHECK(substitute_point(pres2, embed_un_point(ideal(UniPoly{1, -3, 1}, UniPoly{})), 3).on_zbeta());
    CHECK_FALSE(substitute_point(pres2, embed_un_point(ideal(UniPoly{-1, 0, 1}, UniPoly{0, 1})), 2).on_zbeta());

    std::mt19937_64 rng(34);
    std::vector<ChartPresentation> charts;
    for (unsigned n = 1; n <= 6; ++n) charts.push_back(build_presentation(Partition{n}));
    int members = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const unsigned n = 1 + static_cast<unsigned>(rng() % 6);
        const unsigned beta = 1 + static_cast<unsigned>(rng() % 4);
        // Half the samples are built to contain y^beta.
        UniPoly a, b;
        if (trial % 2 == 0) {
            UniPoly root{-(static_cast<long>(rng() % 5)), 1};
            a = pow(root, n);
            b = pow(root, (n + beta - 1) / beta) * random_unipoly(rng, 2);
        } else {
            a = random_monic(rng, n);
            b = random_unipoly(rng, n - 1);
        }
        ChartIdealN i(a, b);
        const auto& pres = charts[n - 1];
        auto pt = embed_un_point(i);
        auto eval = substitute_point(pres, pt, beta);
        CHECK(eval.commuting());
        CHECK(eval.x == companion_matrix(i.a()));
        for (const auto& [name, expr] : pres.shared) CHECK(expr.evaluate(pt) == pt.at(name));
        bool in = contains_power_y(i, beta);
        members += in;
        CHECK(eval.on_zbeta() == in);
        bool symbolic = true;
        for (const auto& eq : zbeta_equations(pres, beta)) symbolic &= is_zero(eq.evaluate(pt));
        CHECK(symbolic == in);
    }
    CHECK(members >= 200);
}
