#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <vector>

#include "bernmc/experiments.hpp"
#include "bernmc/sample_size.hpp"

using namespace bernmc;

namespace {

replication_config small_config() {
    replication_config cfg;
    cfg.reps = 40;
    cfg.seed = 7;
    cfg.budget = 1'000'000;
    return cfg;
}

}  // namespace

TEST_CASE("ratio curve endpoints match the oracle values") {
    const auto rows = run_ratio_curve(1e-4, 0.1, 13);
    REQUIRE(rows.size() == 13);
    CHECK(rows.front().alpha == doctest::Approx(1e-4).epsilon(1e-12));
    CHECK(rows.back().alpha == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(rows.front().ratio_continuous ==
          doctest::Approx(5.0909927546610829).epsilon(1e-9));
    CHECK(rows.back().ratio_continuous ==
          doctest::Approx(3.6425518045714503).epsilon(1e-9));
    // ceil-based ratio tracks the continuous one at small reference eps
    for (const auto& r : rows) {
        CHECK(r.reference_epsilon == 1e-3);
        CHECK(std::abs(r.ratio_exact - r.ratio_continuous) < 0.01);
        CHECK(r.ratio_continuous > 0.0);
    }
}

TEST_CASE("ratio at alpha=0.05") {
    const auto rows = run_ratio_curve(0.05, 0.1, 2);
    CHECK(rows.front().ratio_continuous ==
          doctest::Approx(3.7642318769236033).epsilon(1e-9));
}

TEST_CASE("ratio curve is unimodal with an interior minimum on a wide domain") {
    const auto rows = run_ratio_curve(1e-4, 0.5, 101);
    std::size_t argmin = 0;
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].ratio_continuous < rows[argmin].ratio_continuous) argmin = i;
    CHECK(argmin > 0);
    CHECK(argmin < rows.size() - 1);
    // slope changes sign exactly once
    int sign_changes = 0;
    for (std::size_t i = 2; i < rows.size(); ++i) {
        const double d0 = rows[i - 1].ratio_continuous - rows[i - 2].ratio_continuous;
        const double d1 = rows[i].ratio_continuous - rows[i - 1].ratio_continuous;
        if (d0 < 0.0 && d1 >= 0.0) ++sign_changes;
    }
    CHECK(sign_changes == 1);
    // On [1e-4, 0.1] the curve is decreasing in alpha: the minimum sits at
    // the right endpoint, not in the interior.
    const auto narrow = run_ratio_curve(1e-4, 0.1, 60);
    for (std::size_t i = 1; i < narrow.size(); ++i)
        CHECK(narrow[i].ratio_continuous < narrow[i - 1].ratio_continuous);
}

TEST_CASE("ratio curve input validation") {
    CHECK_THROWS_AS(run_ratio_curve(0.1, 0.1, 5), std::invalid_argument);
    CHECK_THROWS_AS(run_ratio_curve(0.0, 0.1, 5), std::invalid_argument);
    CHECK_THROWS_AS(run_ratio_curve(0.01, 1.0, 5), std::invalid_argument);
    CHECK_THROWS_AS(run_ratio_curve(0.01, 0.1, 1), std::invalid_argument);
    CHECK_THROWS_AS(run_ratio_curve(0.01, 0.1, 5, 0.0), std::invalid_argument);
}

TEST_CASE("replication rows are deterministic and correctly plumbed") {
    const auto cfg = small_config();
    const auto rows = run_replication_study(cfg);
    REQUIRE(rows.size() == 40);

    const double capped_eps = hoeffding_budget_epsilon(cfg.alpha, cfg.budget);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        CHECK(r.replication_index == static_cast<std::int64_t>(i));
        CHECK(r.alpha == cfg.alpha);
        CHECK(r.p_true >= 1e-3);
        CHECK(r.p_true <= 1e-1);
        CHECK(r.epsilon >= 1e-5);
        CHECK(r.epsilon <= 1e-2);
        CHECK(r.n_planned == n_hoeffding(make_error_spec(r.epsilon, r.alpha)).n);
        CHECK(r.budget_capped == (r.n_planned > cfg.budget));
        // threshold form of the same statement (random eps never hits the boundary)
        CHECK(r.budget_capped == (r.epsilon < capped_eps));
        CHECK(r.n_used == (r.budget_capped ? cfg.budget : r.n_planned));
        CHECK(r.p_hat >= 0.0);
        CHECK(r.p_hat <= 1.0);
        CHECK(r.error_ratio ==
              doctest::Approx(std::abs(r.p_true - r.p_hat) / r.epsilon).epsilon(1e-15));
    }

    // Same seed, same rows; and thread count cannot matter.
    const auto again = run_replication_study(cfg);
    auto one_thread = cfg;
    one_thread.threads = 1;
    auto four_threads = cfg;
    four_threads.threads = 4;
    const auto rows1 = run_replication_study(one_thread);
    const auto rows4 = run_replication_study(four_threads);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].p_true == again[i].p_true);
        CHECK(rows[i].p_hat == again[i].p_hat);
        CHECK(rows[i].p_hat == rows1[i].p_hat);
        CHECK(rows[i].p_hat == rows4[i].p_hat);
        CHECK(rows[i].epsilon == rows4[i].epsilon);
    }

    std::ostringstream csv_a, csv_b;
    write_replication_csv(csv_a, rows);
    write_replication_csv(csv_b, rows4);
    CHECK(csv_a.str() == csv_b.str());
}

TEST_CASE("forced one-point ranges reproduce the known plan") {
    replication_config cfg;
    cfg.reps = 1;
    cfg.seed = 3;
    cfg.log10_p = {-1.0, -1.0};
    cfg.log10_eps = {-2.0, -2.0};
    cfg.budget = 100'000;
    const auto rows = run_replication_study(cfg);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].p_true == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(rows[0].epsilon == doctest::Approx(0.01).epsilon(1e-15));
    CHECK(rows[0].n_planned == 18445);
    CHECK_FALSE(rows[0].budget_capped);
}

TEST_CASE("replication study validates its configuration") {
    replication_config cfg = small_config();
    cfg.reps = 0;
    CHECK_THROWS_WITH_AS(run_replication_study(cfg), "reps must be >= 1",
                         std::invalid_argument);
    cfg = small_config();
    cfg.alpha = 1.0;
    CHECK_THROWS_AS(run_replication_study(cfg), std::invalid_argument);
    cfg = small_config();
    cfg.log10_p = {0.0, -1.0};
    CHECK_THROWS_AS(run_replication_study(cfg), std::invalid_argument);
    cfg = small_config();
    cfg.budget = 0;
    CHECK_THROWS_AS(run_replication_study(cfg), std::invalid_argument);
}

TEST_CASE("coverage sweep plans n from the hoeffding rule") {
    const auto grid = default_p_grid();
    REQUIRE(grid.size() == 99);
    CHECK(grid.front() == doctest::Approx(0.01).epsilon(1e-15));
    CHECK(grid.back() == doctest::Approx(0.99).epsilon(1e-15));

    const auto r1 = run_coverage_sweep(make_error_spec(0.1, 0.05), grid);
    CHECK(r1.n == 185);
    CHECK(r1.min_coverage >= 0.95);

    const auto r2 = run_coverage_sweep(make_error_spec(0.2, 0.2), grid);
    CHECK(r2.n == 29);
    CHECK(r2.min_coverage >= 0.8);

    const auto r3 = run_coverage_sweep(make_error_spec(1.0, 0.5), {0.1, 0.5, 0.9});
    CHECK(r3.n == 1);
    for (double c : r3.coverage) CHECK(c == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("csv reals round-trip exactly") {
    for (double v : {0.1, 1.0 / 3.0, 1e-300, 12345.678901234567, 3.69e-5, 0.0}) {
        const auto text = csv_real(v);
        CHECK(std::strtod(text.c_str(), nullptr) == v);
    }
}

TEST_CASE("csv headers and shapes") {
    std::ostringstream out;
    write_ratio_csv(out, run_ratio_curve(0.01, 0.1, 3));
    const auto text = out.str();
    CHECK(text.rfind("alpha,ratio_continuous,ratio_exact,reference_epsilon\n", 0) == 0);
    int lines = 0;
    for (char ch : text) lines += ch == '\n' ? 1 : 0;
    CHECK(lines == 4);

    std::ostringstream cov;
    write_coverage_csv(cov, run_coverage_sweep(make_error_spec(1.0, 0.5), {0.5}));
    CHECK(cov.str() == "p,coverage\n0.5,1\nmin_coverage,1\n");
}
