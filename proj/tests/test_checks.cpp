#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <tuple>

#include "svol/checks.hpp"
#include "svol/config.hpp"
#include "svol/report.hpp"
#include "util.hpp"

using namespace svol;
using testutil::euclidean;

TEST_CASE("check names are fixed and sorted") {
    const auto& names = all_check_names();
    CHECK(names.size() == 8);
    CHECK(std::is_sorted(names.begin(), names.end()));
    CHECK(names.front() == "check_alternating");
    CHECK(names.back() == "experiment_heron_vs_gram");
}

TEST_CASE("status names") {
    CHECK(status_name(CheckReport::Status::pass) == "pass");
    CHECK(status_name(CheckReport::Status::fail) == "fail");
    CHECK(status_name(CheckReport::Status::report_only) == "report-only");
}

TEST_CASE("individual checks pass on small instances") {
    MetricSpec e2 = euclidean(2);
    MetricSpec r2 = random_metric(2, 2, 7);

    SUBCASE("alternating") {
        for (int n : {1, 2}) {
            CheckReport r = check_alternating(n, 1);
            CHECK(r.status == CheckReport::Status::pass);
            CHECK(r.residual == "0");
        }
    }

    SUBCASE("bullet approximation") {
        CHECK(check_bullet_approximation(2, e2, "euclidean", 1).status ==
              CheckReport::Status::pass);
        CHECK(check_bullet_approximation(2, r2, "random", 1).status == CheckReport::Status::pass);
    }

    SUBCASE("gram reduction, both kinds") {
        for (SimplexKind kind : {SimplexKind::mutual_neighbours, SimplexKind::extended}) {
            CheckReport r = check_gram_reduction(2, 2, kind, r2, "random", 1);
            CHECK(r.status == CheckReport::Status::pass);
        }
    }

    SUBCASE("symmetry") {
        CHECK(check_symmetry(2, 2, r2, "random", 1).status == CheckReport::Status::pass);
    }

    SUBCASE("vanishing under first-order overrides") {
        for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 2}}) {
            CheckReport r = check_vanish_on_first_neighbours(2, 2, r2, "random", 1, i, j);
            CHECK(r.status == CheckReport::Status::pass);
        }
        CHECK_THROWS_AS(check_vanish_on_first_neighbours(2, 2, r2, "random", 1, 2, 1),
                        structural_error);
    }

    SUBCASE("extension independence") {
        CheckReport r = check_extension_independence(2, 2, r2, "random", {11, 12});
        CHECK(r.status == CheckReport::Status::pass);
    }

    SUBCASE("volume form identity") {
        CHECK(check_volume_form_identity(1, euclidean(1), "euclidean", 1).status ==
              CheckReport::Status::pass);
        CHECK(check_volume_form_identity(2, r2, "random", 1).status == CheckReport::Status::pass);
    }

    SUBCASE("heron experiment is report-only") {
        CheckReport r = experiment_heron_vs_gram(2, r2, "random", 1);
        CHECK(r.status == CheckReport::Status::report_only);
        CHECK(!r.residual.empty());
    }
}

TEST_CASE("run_suite") {
    RunConfig config = default_config();
    config.checks = {"check_alternating", "experiment_heron_vs_gram"};
    config.n_values = {1, 2};
    config.k_values = {1, 2};
    config.seeds = {1};

    SUBCASE("reports are sorted and stamped") {
        std::vector<CheckReport> reports = run_suite(config);
        REQUIRE(!reports.empty());
        for (std::size_t i = 1; i < reports.size(); ++i) {
            CHECK(std::tie(reports[i - 1].check_name) <= std::tie(reports[i].check_name));
            if (reports[i - 1].check_name == reports[i].check_name)
                CHECK(reports[i - 1].instance.tie() <= reports[i].instance.tie());
        }
        for (const CheckReport& r : reports) {
            CHECK(r.provenance == config.digest());
            CHECK(r.status != CheckReport::Status::fail);
        }
        // alternating runs once per (n, seed); the experiment skips n = 1.
        int alternating = 0, heron = 0;
        for (const CheckReport& r : reports) {
            if (r.check_name == "check_alternating") ++alternating;
            if (r.check_name == "experiment_heron_vs_gram") ++heron;
        }
        CHECK(alternating == 2);
        CHECK(heron == 3);  // n=2 only, all 3 default metrics
    }

    SUBCASE("empty check list yields no reports") {
        config.checks.clear();
        CHECK(run_suite(config).empty());
    }

    SUBCASE("two runs agree modulo timing") {
        std::vector<CheckReport> a = run_suite(config);
        std::vector<CheckReport> b = run_suite(config);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].check_name == b[i].check_name);
            CHECK(a[i].instance == b[i].instance);
            CHECK(a[i].status == b[i].status);
            CHECK(a[i].residual == b[i].residual);
            CHECK(a[i].provenance == b[i].provenance);
        }
    }
}

TEST_CASE("report rendering") {
    CheckReport passing{.check_name = "check_symmetry",
                        .instance = {.n = 2, .k = 2, .metric = "euclidean", .seed = 1},
                        .status = CheckReport::Status::pass};
    CheckReport failing{.check_name = "check_symmetry",
                        .instance = {.n = 2, .k = 2, .metric = "euclidean", .seed = 2},
                        .status = CheckReport::Status::fail,
                        .residual = "e1*f1 + e2*f2 + e1^2 + f1^2 + e2^2"};

    SUBCASE("empty list renders the header only") {
        std::string text = render_report({}, "text");
        CHECK(text.find("check") != std::string::npos);
        CHECK(std::count(text.begin(), text.end(), '\n') == 2);
    }

    SUBCASE("single pass renders one row with residual 0") {
        std::string text = render_report({passing}, "text");
        CHECK(std::count(text.begin(), text.end(), '\n') == 3);
        CHECK(text.find("pass") != std::string::npos);
    }

    SUBCASE("long residuals are summarized with a pointer") {
        std::string text = render_report({failing}, "text");
        CHECK(text.find("e1*f1 + e2*f2 + e1^2 ... (see structured report)") != std::string::npos);
    }

    SUBCASE("structured format carries the full residual") {
        std::string text = render_report({failing}, "structured");
        CHECK(text.find(failing.residual) != std::string::npos);
        CHECK(text.find("\"fail\"") != std::string::npos);
    }

    SUBCASE("exit-code predicate") {
        CHECK(all_passed({passing}));
        CHECK(!all_passed({passing, failing}));
        CheckReport reported = failing;
        reported.status = CheckReport::Status::report_only;
        CHECK(all_passed({passing, reported}));
    }
}

TEST_CASE("config round-trips") {
    RunConfig config = default_config();
    CHECK(parse_config(render_config(config)) == config);

    MetricDescriptor inline_md;
    inline_md.flavor = MetricDescriptor::Flavor::inline_entries;
    inline_md.inline_n = 2;
    inline_md.inline_entries = {{0, 0, "1 + x1"}, {0, 1, "x2"}, {1, 1, "1"}};
    config.metrics.push_back(inline_md);
    config.output.path = "report.json";
    config.output.format = "structured";
    CHECK(parse_config(render_config(config)) == config);
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(parse_config("{nope"), parse_error);
    CHECK_THROWS_AS(parse_config(R"({"bogus_key": 1})"), validation_error);
    CHECK_THROWS_AS(parse_config(R"({"checks": ["fubini"]})"), validation_error);
    CHECK_THROWS_AS(parse_config(R"({"seeds": []})"), validation_error);
    CHECK_THROWS_AS(parse_config(R"({"metrics": ["minkowski"]})"), validation_error);
    // Inline metric with det G(0) = 0 is rejected at parse time.
    CHECK_THROWS_AS(parse_config(R"({"metrics": [{"inline": {"n": 2, "entries":
        [[0, 0, "x1"], [1, 1, "1"]]}}]})"),
                    validation_error);
    try {
        parse_config("{\n  \"checks\": [,]\n}");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 2);
    }

    RunConfig minimal = parse_config(
        R"({"checks": ["check_symmetry"], "n_values": [2], "k_values": [2],
            "metrics": ["euclidean"], "seeds": [1]})");
    CHECK(minimal.checks == std::vector<std::string>{"check_symmetry"});
    CHECK(minimal.metrics.size() == 1);
    std::vector<CheckReport> reports = run_suite(minimal);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].status == CheckReport::Status::pass);
}

TEST_CASE("metric descriptors realize per dimension") {
    MetricDescriptor inline_md;
    inline_md.flavor = MetricDescriptor::Flavor::inline_entries;
    inline_md.inline_n = 2;
    inline_md.inline_entries = {{0, 0, "1"}, {1, 1, "1"}};
    CHECK(inline_md.realize(2).has_value());
    CHECK(!inline_md.realize(3).has_value());
    CHECK(inline_md.label() == "inline(n=2)");

    MetricDescriptor euclid;
    euclid.builtin_name = "euclidean";
    CHECK(euclid.realize(3)->constant_matrix() ==
          std::vector<Rational>{1, 0, 0, 0, 1, 0, 0, 0, 1});
}
