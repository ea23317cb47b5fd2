#include "readchan/enumerate.hpp"

#include <cmath>

#include "doctest.h"
#include "readchan/spectral.hpp"

using namespace readchan;

TEST_CASE("single-window and disjoint-window counts") {
    for (int ell : {1, 3, 6})
        CHECK(count_read_vectors(ell, {ell, 2}, 2).count ==
              static_cast<unsigned long long>(ell) + 1);
    // two windows separated by a gap take any weights independently
    CHECK(count_read_vectors(5, {2, 3}, 2).count == 9);
}

TEST_CASE("unit-length windows at unit step are the identity channel") {
    for (int n : {4, 9}) {
        const CountResult r = count_read_vectors(n, {1, 1}, 2);
        CHECK(r.count == (1ull << n));
        CHECK(r.rate == doctest::Approx(1.0));
    }
}

TEST_CASE("unit step with longer windows is not injective at finite n") {
    // pairs like 010 / 101 collide, so the count sits strictly below 2^n;
    // the capacity is still 1 (growth factor 2 per symbol).
    CHECK(count_read_vectors(12, {4, 1}, 2).count == 3773);
    const auto a = count_read_vectors(12, {2, 1}, 2).count;
    const auto b = count_read_vectors(13, {2, 1}, 2).count;
    CHECK(static_cast<double>(b) / static_cast<double>(a) == doctest::Approx(2.0).epsilon(0.01));
}

TEST_CASE("aligned disjoint windows count as independent weights") {
    for (int n : {4, 6, 8}) {
        const CountResult r = count_read_vectors(n, {2, 2}, 2);
        unsigned long long expect = 1;
        for (int i = 0; i < n / 2; ++i) expect *= 3;
        CHECK(r.count == expect);
        CHECK(r.rate == doctest::Approx(0.792481).epsilon(1e-6));
    }
}

TEST_CASE("parallel kernel matches the serial reference") {
    EnumOptions hashed;
    hashed.dedup = DedupMode::hash_set;
    for (auto [ell, delta] : {std::pair{3, 2}, {4, 2}, {5, 3}, {2, 3}}) {
        for (int n = ell; n <= 13; n += delta) {
            const auto serial = count_read_vectors_serial(n, {ell, delta}, 2).count;
            CHECK(count_read_vectors(n, {ell, delta}, 2).count == serial);
            CHECK(count_read_vectors(n, {ell, delta}, 2, hashed).count == serial);
        }
    }
    for (int n = 2; n <= 6; n += 2)
        CHECK(count_read_vectors(n, {2, 2}, 3).count ==
              count_read_vectors_serial(n, {2, 2}, 3).count);
}

TEST_CASE("budget violations are errors, not truncations") {
    EnumOptions tiny;
    tiny.budget = 1024;
    CHECK_THROWS_AS(count_read_vectors(11, {3, 2}, 2, tiny), resource_error);
    CHECK_THROWS_AS(count_read_matrices(4, 4, {2, 2}, {2, 2}, 2, tiny), resource_error);
    CHECK_THROWS_AS(count_read_vectors(8, {3, 2}, 2), param_error);  // 2 !| 8-3
}

TEST_CASE("alphabet reduction preserves finite counts") {
    for (auto [ell, delta] : {std::pair{2, 2}, {3, 2}})
        for (int n = ell; n <= 6; n += delta)
            CHECK(count_read_vectors(n, {ell, delta}, 3).count ==
                  count_read_vectors(2 * n, {2 * ell, 2 * delta}, 2).count);
}

TEST_CASE("2-D exhaustive counts") {
    CHECK(count_read_matrices(2, 2, {2, 1}, {2, 1}, 2).count == 5);
    CHECK(count_read_matrices(3, 3, {1, 1}, {1, 1}, 2).count == 512);
    CHECK(count_read_matrices(2, 4, {2, 2}, {2, 2}, 2).count == 25);
    CHECK(count_read_matrices(2, 3, {1, 1}, {2, 1}, 2).count ==
          count_read_matrices_serial(2, 3, {1, 1}, {2, 1}, 2).count);
    CHECK(count_read_matrices(2, 2, {1, 1}, {1, 1}, 3).count ==
          count_read_matrices_serial(2, 2, {1, 1}, {1, 1}, 3).count);
}

TEST_CASE("constraint-word counts match path counting in the block diagram") {
    CHECK(count_constraint_words(2, 1, 2).count == 4);   // one block pair: (d+1)(b+1)
    CHECK(count_constraint_words(4, 1, 2).count == 15);  // all 16 minus the forbidden pair
    const unsigned long long expected[] = {4, 15, 57, 216, 819, 3105};
    for (int k = 1; k <= 6; ++k)
        CHECK(count_constraint_words(2 * k, 1, 2).count == expected[k - 1]);

    // independent route: total path counts under the diagram's adjacency
    const IntMatrix A = build_constraint_graph(1, 2).adjacency;
    for (int k = 2; k <= 6; ++k) {
        std::vector<unsigned long long> v(4, 1);
        for (int step = 1; step < k; ++step) {
            std::vector<unsigned long long> nv(4, 0);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    nv[static_cast<size_t>(i)] +=
                        static_cast<unsigned long long>(A.at(i, j)) * v[static_cast<size_t>(j)];
            v = nv;
        }
        unsigned long long total = 0;
        for (auto x : v) total += x;
        CHECK(count_constraint_words(2 * k, 1, 2).count == total);
    }
    CHECK(count_constraint_words(3, 2, 3).count == 6);
    CHECK_THROWS_AS(count_constraint_words(5, 1, 2), param_error);
    CHECK_THROWS_AS(count_constraint_words(4, 2, 2), param_error);
}

TEST_CASE("growth ratios") {
    std::vector<CountResult> flat = {{4, -1, 7, 0.0}, {6, -1, 7, 0.0}, {8, -1, 7, 0.0}};
    const auto ones = growth_ratio(flat, 2);
    CHECK(ones == std::vector<double>{1.0, 1.0});

    const auto counts = rate_sequence({2, 2}, 2, {4, 6, 8, 10});
    for (double r : growth_ratio(counts, 2)) CHECK(r == doctest::Approx(3.0));

    const auto c32 = rate_sequence({3, 2}, 2, {5, 7, 9, 11, 13});
    const auto ratios = growth_ratio(c32, 2);
    const double lam = 2.0 + std::sqrt(2.0);
    CHECK(std::fabs(ratios.back() - lam) / lam < 0.02);

    CHECK_THROWS_AS(growth_ratio(counts, 3), param_error);
    CHECK_THROWS_AS(growth_ratio({counts[0]}, 2), param_error);
}

TEST_CASE("finite rates drift toward the closed-form capacity") {
    std::vector<int> ns;
    for (int n = 5; n <= 21; n += 2) ns.push_back(n);
    const auto rs = rate_sequence({3, 2}, 2, ns);
    CHECK(std::fabs(rs.back().rate - 0.885777) < 0.05);
    // rates climb toward the limit from below at these sizes
    for (size_t i = 1; i < rs.size(); ++i) CHECK(rs[i].rate > rs[i - 1].rate);
}

TEST_CASE("CSV and JSON output shapes") {
    const std::vector<CountResult> rs = {count_read_vectors(3, {3, 2}, 2)};
    CHECK(to_csv(rs) == "n,count,rate\n3,4,0.666667\n");
    CHECK(to_json(rs) == "[{\"n\":3,\"count\":\"4\",\"rate\":0.666667}]");
}
