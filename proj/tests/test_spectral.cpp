#include "readchan/spectral.hpp"

#include <cmath>

#include "doctest.h"
#include "readchan/stategraph.hpp"

using namespace readchan;

TEST_CASE("characteristic polynomials are exact") {
    const IntMatrix A53 = adjacency_closed_form({5, 3});
    CHECK(char_poly(A53) == Polynomial{{0, 0, 0, 6, -6, 1}});  // (x^2 - 6x + 6) x^3

    const IntMatrix I3{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(char_poly(I3) == Polynomial{{-1, 3, -3, 1}});  // (x-1)^3

    const IntMatrix swap{{0, 1}, {1, 0}};
    CHECK(char_poly(swap) == Polynomial{{-1, 0, 1}});  // x^2 - 1

    CHECK(to_string(char_poly(swap)) == "x^2 - 1");
    CHECK(char_poly(IntMatrix(0)) == Polynomial{{1}});
}

TEST_CASE("perron eigenvalues") {
    CHECK(std::fabs(perron_eigenvalue(adjacency_closed_form({5, 3})) - (3.0 + std::sqrt(3.0))) <
          1e-9);

    for (int m : {1, 2, 5}) {
        IntMatrix ones(m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) ones.at(i, j) = 1;
        CHECK(perron_eigenvalue(ones) == doctest::Approx(m).epsilon(1e-12));
    }

    const IntMatrix fig6 = build_constraint_graph(1, 2).adjacency;
    CHECK(std::fabs(perron_eigenvalue(fig6) - 0.5 * (3.0 + std::sqrt(21.0))) < 1e-9);

    CHECK(perron_eigenvalue(IntMatrix(3)) == 0.0);
    CHECK(perron_eigenvalue(IntMatrix{{0, 1}, {0, 0}}) == 0.0);  // nilpotent
    CHECK_THROWS_AS(perron_eigenvalue(IntMatrix{{-1}}), param_error);
    CHECK_THROWS_AS(perron_eigenvalue(IntMatrix{{1}}, 0.0), param_error);
}

TEST_CASE("closed-form capacity dispatch") {
    const CapacityResult c32 = capacity_closed_form({3, 2});
    CHECK(c32.exact);
    CHECK(c32.primary.value == doctest::Approx(0.885777).epsilon(1e-6));

    // value frozen from the quadratic: log2(3+sqrt(3))/3
    const CapacityResult c53 = capacity_closed_form({5, 3});
    CHECK(c53.primary.value == doctest::Approx(0.7474885).epsilon(1e-6));
    CHECK(c53.primary.value ==
          doctest::Approx(std::log2(perron_eigenvalue(adjacency_closed_form({5, 3}))) / 3.0));

    CHECK(capacity_closed_form({6, 2}).primary.value == doctest::Approx(0.792481).epsilon(1e-6));
    CHECK(capacity_closed_form({1, 1}).primary.value == 1.0);
    CHECK(capacity_closed_form({9, 1}).primary.value == 1.0);
    CHECK(capacity_closed_form({2, 3}).primary.value == doctest::Approx(std::log2(3.0) / 3.0));

    const CapacityResult c72 = capacity_closed_form({7, 2});
    CHECK_FALSE(c72.exact);
    CHECK(c72.primary.kind == CapKind::lower_bound);
    CHECK(c72.primary.value == doctest::Approx(0.792481).epsilon(1e-6));
    CHECK(c72.upper->kind == CapKind::upper_bound);
    CHECK(c72.upper->value == doctest::Approx(0.961344).epsilon(1e-6));
}

TEST_CASE("constraint capacity against its own diagram") {
    const CapacityValue c12 = constraint_capacity(1, 2);
    CHECK(c12.kind == CapKind::upper_bound);
    CHECK(c12.value == doctest::Approx(0.961344).epsilon(1e-6));
    CHECK(std::fabs(c12.value - 0.9613) < 5e-5);  // the 4-decimal published value

    const CapacityValue c23 = constraint_capacity(2, 3);
    CHECK(c23.value == doctest::Approx(0.8498160).epsilon(1e-6));
    CHECK(constraint_capacity(1, 3).value == doctest::Approx(c23.value));  // b <-> d symmetry

    for (int delta = 2; delta <= 8; ++delta)
        for (int b = 1; b < delta; ++b) {
            const double via_graph =
                std::log2(perron_eigenvalue(build_constraint_graph(b, delta).adjacency)) / delta;
            CHECK(std::fabs(constraint_capacity(b, delta).value - via_graph) < 1e-9);
        }

    CHECK_THROWS_AS(constraint_capacity(0, 2), param_error);
    CHECK_THROWS_AS(constraint_capacity(2, 2), param_error);
}

TEST_CASE("constraint state diagram shape") {
    const ConstraintGraph cg12 = build_constraint_graph(1, 2);
    CHECK(cg12.graph.num_nodes() == 4);
    CHECK(cg12.graph.node_names[static_cast<size_t>(cg12.forbidden_node)] == "10");
    CHECK(cg12.graph.edges.size() == 15);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(cg12.adjacency.at(i, j) == ((i == cg12.forbidden_node && i == j) ? 0 : 1));

    const ConstraintGraph cg23 = build_constraint_graph(2, 3);
    CHECK(cg23.graph.num_nodes() == 6);
    CHECK(cg23.graph.edges.size() == 35);
}

TEST_CASE("q-ary capacity in q-ary units") {
    const CapacityResult base = capacity_closed_form({3, 2});
    const CapacityResult same = qary_capacity({3, 2}, 2);
    CHECK(same.primary.value == base.primary.value);

    CHECK(qary_capacity({1, 1}, 3).primary.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(qary_capacity({3, 2}, 3).primary.value == doctest::Approx(0.815465).epsilon(1e-6));
    CHECK(capacity_in_bits(qary_capacity({3, 2}, 3), 3).primary.value ==
          doctest::Approx(0.815465 * std::log2(3.0)).epsilon(1e-6));

    // a scaled regime that lands on bounds keeps both members
    const CapacityResult pair = qary_capacity({5, 2}, 3);  // -> C2(10, 4), 10 > 8, 4 !| 10
    CHECK_FALSE(pair.exact);
    CHECK(pair.primary.value <= pair.upper->value);
}

TEST_CASE("capacity table rows") {
    const auto rows = capacity_table(2, 3, 8);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].regime == "interval-exact");
    CHECK(rows[1].regime == "aligned");
    CHECK(rows[2].regime == "bounded");
    CHECK(rows[3].regime == "aligned");
    CHECK(rows[4].regime == "bounded");
    CHECK(rows[5].regime == "aligned");
    CHECK(rows[0].cap.primary.value == doctest::Approx(0.885777).epsilon(1e-6));
    CHECK(rows[3].cap.primary.value == doctest::Approx(0.792481).epsilon(1e-6));
    CHECK(rows[5].cap.primary.value == doctest::Approx(0.792481).epsilon(1e-6));
    CHECK_FALSE(rows[2].cap.exact);

    const auto d3 = capacity_table(3, 3, 3);
    CHECK(d3[0].cap.primary.value == doctest::Approx(2.0 / 3.0));

    const auto d4 = capacity_table(4, 5, 7);
    for (const auto& row : d4) {
        CHECK(row.cap.exact);
        CHECK(row.cap.primary.value > std::log2(5.0) / 4.0);
        CHECK(row.cap.primary.value < std::log2(8.0) / 4.0);
    }
}
