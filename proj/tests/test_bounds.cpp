#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kcut/bounds.hpp"
#include "kcut/errors.hpp"
#include "kcut/generate.hpp"
#include "kcut/solvers.hpp"
#include "oracles.hpp"

using namespace kcut;

TEST_CASE("turan numbers match the brute-force maximum") {
    CHECK(turan_number(4, 2) == oracles::brute_turan(4, 2));
    CHECK(turan_number(4, 2) == 4);
    CHECK(turan_number(5, 3) == oracles::brute_turan(5, 3));
    CHECK(turan_number(5, 3) == 8);
    CHECK(turan_number(6, 1) == 0);
    CHECK(turan_number(0, 3) == 0);
    CHECK(turan_number(3, 7) == 3); // k >= n keeps every pair
    CHECK_THROWS_AS(turan_number(5, 0), input_error);

    for (int n = 0; n <= 12; ++n)
        for (int k = 1; k <= n + 2; ++k)
            CHECK(turan_number(n, k) == oracles::brute_turan(n, k));
}

TEST_CASE("turan sandwich bounds and equality characterization") {
    for (int k = 1; k <= 60; ++k) {
        for (int n = k; n <= 60; ++n) {
            const std::int64_t t = turan_number(n, k);
            // right: t <= ((k-1)/2k) n^2, equality iff k | n  (x 2k)
            const std::int64_t rhs = static_cast<std::int64_t>(k - 1) * n * n;
            CHECK(2 * k * t <= rhs);
            CHECK((2 * k * t == rhs) == (n % k == 0));
            // left: ((k-1)/2k) n^2 - k/8 <= t, equality iff k even and
            // n = k/2 (mod k)  (x 8k)
            const std::int64_t lhs = 4 * static_cast<std::int64_t>(k - 1) * n * n -
                                     static_cast<std::int64_t>(k) * k;
            CHECK(lhs <= 8 * k * t);
            const bool left_eq = (k % 2 == 0) && (n % k == k / 2);
            CHECK((lhs == 8 * k * t) == left_eq);
        }
    }
}

TEST_CASE("eigenvalue upper bound") {
    // K_4, k=2: (1/2)(6 + 4/2) = 4, which brute force confirms is mc_2(K_4)
    CHECK(upper_bound_eigmin(6.0, 4, 2, -1.0) == doctest::Approx(4.0));
    CHECK(oracles::naive_max_kcut(complete_graph(4), 2).weight == doctest::Approx(4.0));

    // Petersen, k=2: (1/2)(15 + 2*10/2) = 12.5, above the true 12
    CHECK(upper_bound_eigmin(15.0, 10, 2, -2.0) == doctest::Approx(12.5));

    CHECK(upper_bound_eigmin(0.0, 5, 3, 0.0) == 0.0);
    CHECK_THROWS_AS(upper_bound_eigmin(6.0, 4, 1, -1.0), input_error);
}

TEST_CASE("Laplacian upper bound") {
    CHECK(upper_bound_laplacian(4, 2, 4.0) == doctest::Approx(4.0));
    CHECK(upper_bound_laplacian(10, 2, 5.0) == doctest::Approx(12.5));
    // the star shows the bound can exceed m
    SpectralSummary star = spectral_summary(star_graph(5));
    CHECK(std::abs(star.lambda_max - 5.0) <= 1e-8);
    CHECK(upper_bound_laplacian(5, 2, star.lambda_max) == doctest::Approx(6.25));
    CHECK_THROWS_AS(upper_bound_laplacian(4, 1, 4.0), input_error);
}

TEST_CASE("ratio lower bound") {
    CHECK(lower_bound_ratio(3, 2, 3.0) == doctest::Approx(2.0));
    CHECK(lower_bound_ratio(4, 2, 6.0) == doctest::Approx(4.0));
    // r = k keeps all the weight
    for (int k = 2; k <= 6; ++k) CHECK(lower_bound_ratio(k, k, 7.5) == doctest::Approx(7.5));
    CHECK_THROWS_AS(lower_bound_ratio(2, 3, 1.0), input_error);

    // improvement over the straightforward bound: t_k(r)/C(r,2) >= (k-1)/k
    for (int k = 2; k <= 30; ++k)
        for (int r = k; r <= 30; ++r) {
            const double ratio = static_cast<double>(turan_number(r, k)) /
                                 (static_cast<double>(r) * (r - 1) / 2.0);
            CHECK(ratio >= static_cast<double>(k - 1) / k - 1e-12);
        }
}

TEST_CASE("chromatic lower bound") {
    CHECK(chromatic_lower_bound(6.0, 4, 4.0) == doctest::Approx(4.0));
    CHECK(chromatic_lower_bound(9.0, 6, 6.0) == doctest::Approx(2.0));

    SpectralSummary c5 = spectral_summary(cycle_graph(5));
    const double lb = chromatic_lower_bound(5.0, 5, c5.lambda_max);
    CHECK(lb > 2.23);
    CHECK(lb < 2.24);
    CHECK(std::ceil(lb) == 3); // = chi(C_5)

    // K_n is tight for every n
    for (int n = 2; n <= 12; ++n) {
        SpectralSummary s = spectral_summary(complete_graph(n));
        const double m = n * (n - 1) / 2.0;
        CHECK(chromatic_lower_bound(m, n, s.lambda_max) == doctest::Approx(n).epsilon(1e-8));
    }

    CHECK(chromatic_lower_bound(0.0, 5, 0.0) == 1.0); // edgeless convention
}

TEST_CASE("k-partite eigenvalue inequality") {
    Graph k33 = complete_multipartite_graph({3, 3});
    SpectralSummary s33 = spectral_summary(k33);
    std::vector<std::vector<int>> bip{{0, 1, 2}, {3, 4, 5}};
    KPartiteCheck c = kpartite_eigen_inequality_check(k33, 2, s33, &bip);
    CHECK(c.holds);
    CHECK(std::abs(c.lhs - 3.0) <= 1e-8);
    CHECK(std::abs(c.rhs - 3.0) <= 1e-8);
    CHECK(std::abs(c.slack) <= 1e-8);

    Graph c6 = cycle_graph(6);
    KPartiteCheck cc = kpartite_eigen_inequality_check(c6, 2, spectral_summary(c6));
    CHECK(cc.holds);

    Graph k3 = complete_graph(3);
    KPartiteCheck ck = kpartite_eigen_inequality_check(k3, 3, spectral_summary(k3));
    CHECK(ck.holds);
    CHECK(std::abs(ck.slack) <= 1e-8);

    // witness with intra-class weight is rejected
    std::vector<std::vector<int>> bad{{0, 1, 2, 3}, {4, 5}};
    CHECK_THROWS_AS(kpartite_eigen_inequality_check(k33, 2, s33, &bad), input_error);
}

TEST_CASE("bound_report aggregates everything") {
    BoundOptions exact_opts;
    exact_opts.compute_exact = true;

    BoundReport c6 = bound_report(cycle_graph(6), 2, exact_opts);
    CHECK(c6.upper_eigmin == doctest::Approx(6.0));
    REQUIRE(c6.exact.has_value());
    CHECK(*c6.exact == 6.0);
    CHECK(c6.gap == doctest::Approx(0.0));

    BoundReport pet = bound_report(petersen_graph(), 2, exact_opts);
    CHECK(pet.upper_eigmin == doctest::Approx(12.5));
    CHECK(pet.upper_laplacian == doctest::Approx(12.5));
    REQUIRE(pet.floors.has_value());
    CHECK(pet.floors->eigmin == 12);
    REQUIRE(pet.exact.has_value());
    CHECK(*pet.exact == 12.0);

    BoundReport k5 = bound_report(complete_graph(5), 5, exact_opts);
    CHECK(k5.upper_eigmin == doctest::Approx(10.0));
    CHECK(k5.upper_trivial == doctest::Approx(10.0));
    REQUIRE(k5.exact.has_value());
    CHECK(*k5.exact == 10.0);

    // r-partition unlocks the ratio bound
    BoundOptions ropts;
    ropts.r_partition = std::vector<std::vector<int>>{{0, 1}, {2, 3}, {4, 5}};
    BoundReport k222 = bound_report(complete_multipartite_graph({2, 2, 2}), 2, ropts);
    REQUIRE(k222.lower_ratio.has_value());
    CHECK(*k222.lower_ratio == doctest::Approx(lower_bound_ratio(3, 2, 12.0)));
    CHECK(*k222.lower_ratio >= k222.lower_trivial - 1e-12);

    // budget refusal leaves a reason instead of a value
    BoundOptions tiny;
    tiny.compute_exact = true;
    tiny.budget = 4;
    BoundReport refused = bound_report(complete_graph(8), 2, tiny);
    CHECK(!refused.exact.has_value());
    CHECK(!refused.exact_reason.empty());

    // non-integral weights suppress the floors
    Graph w = build_graph(3, {{0, 1, 1.5}, {1, 2, 2.0}});
    BoundReport wr = bound_report(w, 2);
    CHECK(!wr.floors.has_value());

    CHECK_THROWS_AS(bound_report(w, 1), input_error);
}

TEST_CASE("bound ordering on random graphs") {
    std::uint64_t state = 55;
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 4 + oracles::pick(state, 7);
        Graph g = gnp_graph(n, 0.5, state);
        for (int k = 2; k <= 3; ++k) {
            BoundReport r = bound_report(g, k);
            const double slack = 1e-9 * std::max(1.0, r.m);
            CHECK(r.lower_trivial <=
                  std::min({r.upper_eigmin, r.upper_laplacian, r.upper_trivial}) + slack);
        }
    }
}
