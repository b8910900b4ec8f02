#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rskflags/errors.hpp"
#include "rskflags/rsk.hpp"
#include "rskflags/standardize.hpp"
#include "rskflags/text_io.hpp"
#include "rskflags/verify.hpp"

using namespace rskflags;

TEST_CASE("matrix of a tableau pair") {
    RelPosMatrix m = rsk_matrix_of_tableaux(parse_tableau("1,2;1,2;3"), parse_tableau("1,2;2,3;3"));
    CHECK(m == parse_matrix("1,0,0;1,0,1;0,2,0"));
    CHECK(row_sums(m) == Composition{1, 2, 2});
    CHECK(col_sums(m) == Composition{2, 2, 1});

    Tableau row = parse_tableau("1,2,3,4");
    CHECK(rsk_matrix_of_tableaux(row, row) == parse_matrix("1,0,0,0;0,1,0,0;0,0,1,0;0,0,0,1"));

    CHECK_THROWS_AS(rsk_matrix_of_tableaux(parse_tableau("1,2"), parse_tableau("1;1")),
                    ShapeMismatch);
}

TEST_CASE("tableau-pair matrix agrees with the standardized route") {
    for (int d = 1; d <= 5; ++d)
        for (const auto& lambda : partitions_of(d))
            for (const auto& mu : compositions_of(d))
                for (const auto& nu : compositions_of(d))
                    for (const auto& t : enumerate_semistandard_row_strict(lambda, mu))
                        for (const auto& s : enumerate_semistandard_row_strict(lambda, nu)) {
                            BiArray perm = rsk_inverse_row_strict(
                                standardize_tableau_row_strict(t),
                                standardize_tableau_row_strict(s));
                            RelPosMatrix oracle =
                                array_to_matrix(destandardize_array(perm, mu, nu));
                            CHECK(rsk_matrix_of_tableaux(t, s) == oracle);
                        }
}

TEST_CASE("commutation sweeps are clean at small degree") {
    SweepSummary rs = verify_commutation_row_strict(4, 0, /*parallel=*/false);
    CHECK(rs.failures == 0);
    CHECK(rs.cases_checked > 0);
    SweepSummary cl = verify_commutation_classical(4, 0, /*parallel=*/false);
    CHECK(cl.failures == 0);
    CHECK(cl.cases_checked == rs.cases_checked);
}

TEST_CASE("bijection sweep is clean at small degree") {
    SweepSummary sum = verify_bijection(4, 0, /*parallel=*/false);
    CHECK(sum.failures == 0);
    CHECK(sum.cases_checked > 0);
}

TEST_CASE("parallel sweeps match the serial reference") {
    SweepSummary serial = verify_bijection(5, 4, /*parallel=*/false);
    SweepSummary parallel = verify_bijection(5, 4, /*parallel=*/true);
    CHECK(serial.cases_checked == parallel.cases_checked);
    CHECK(serial.failures == parallel.failures);

    SweepSummary s2 = verify_commutation_row_strict(5, 4, false);
    SweepSummary p2 = verify_commutation_row_strict(5, 4, true);
    CHECK(s2.cases_checked == p2.cases_checked);
    CHECK(s2.failures == p2.failures);
}

TEST_CASE("main theorem on a single case") {
    RunOptions opts;
    opts.trials = 40;
    opts.prime = 10007;
    opts.seed = 11;
    VerificationReport rep = verify_main_theorem({2, 1}, {2, 1}, {1, 2}, parse_tableau("1,2;1"),
                                                 parse_tableau("1,2;2"), opts);
    CHECK(rep.pass);
    CHECK(rep.agreement_ok);
    CHECK(rep.expected_matrix == rep.mode_matrix);
    CHECK(row_sums(rep.mode_matrix) == Composition{1, 2});
    CHECK(col_sums(rep.mode_matrix) == Composition{2, 1});
}

TEST_CASE("reports are deterministic and serial equals parallel") {
    RunOptions opts;
    opts.trials = 24;
    opts.prime = 101;
    opts.seed = 5;
    opts.parallel = false;
    Tableau t = parse_tableau("1,2;3");
    VerificationReport serial =
        verify_main_theorem({2, 1}, {1, 1, 1}, {1, 1, 1}, t, t, opts);
    opts.parallel = true;
    VerificationReport parallel =
        verify_main_theorem({2, 1}, {1, 1, 1}, {1, 1, 1}, t, t, opts);
    CHECK(serial.mode_matrix == parallel.mode_matrix);
    CHECK(serial.agreement_count == parallel.agreement_count);
    CHECK(serial.attempts_histogram == parallel.attempts_histogram);
    CHECK(report_to_json(serial) == report_to_json(parallel));
}

TEST_CASE("steinberg campaign on a small shape") {
    RunOptions opts;
    opts.trials = 30;
    opts.prime = 10007;
    opts.seed = 3;
    auto reports = verify_steinberg({2, 1}, opts);
    REQUIRE(reports.size() == 4);
    for (const auto& rep : reports) {
        CHECK(rep.pass);
        CHECK(rep.agreement_ok);
    }
}

TEST_CASE("case preconditions are checked") {
    RunOptions opts;
    CHECK_THROWS_AS(verify_main_theorem({2, 1}, {2, 1}, {1, 2}, parse_tableau("1,2;2"),
                                        parse_tableau("1,2;2"), opts),
                    SizeMismatch);
    CHECK_THROWS_AS(verify_main_theorem({3}, {2, 1}, {2, 1}, parse_tableau("1,2;1"),
                                        parse_tableau("1,2;1"), opts),
                    ShapeMismatch);
}

TEST_CASE("report json carries the verdict") {
    RunOptions opts;
    opts.trials = 10;
    opts.prime = 101;
    opts.seed = 1;
    Tableau t = parse_tableau("1;2");
    VerificationReport rep = verify_main_theorem({1, 1}, {1, 1}, {1, 1}, t, t, opts);
    std::string json = report_to_json(rep);
    CHECK(json.find("\"verdict\"") != std::string::npos);
    CHECK(json.find("\"mode_matrix\"") != std::string::npos);
    std::string line = report_human_line(rep);
    CHECK(line.find("agreement") != std::string::npos);
}
