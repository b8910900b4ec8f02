#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "rskflags/errors.hpp"
#include "rskflags/rsk.hpp"
#include "rskflags/text_io.hpp"

using namespace rskflags;

TEST_CASE("row-strict bumping displaces the leftmost entry >= z") {
    auto [t1, p1] = row_insert_row_strict(Tableau{{{1}}}, 1);
    CHECK(t1 == parse_tableau("1;1"));
    CHECK(p1 == BoxPos{2, 1});

    auto [t2, p2] = row_insert_row_strict(Tableau{{{1}}}, 2);
    CHECK(t2 == parse_tableau("1,2"));
    CHECK(p2 == BoxPos{1, 2});
}

TEST_CASE("row-strict insertion of a whole bottom row") {
    Tableau t;
    for (int z : {1, 3, 1, 2, 2}) t = row_insert_row_strict(t, z).first;
    CHECK(t == parse_tableau("1,2;1,2;3"));
}

TEST_CASE("row-strict correspondence on a five-pair array") {
    BiArray a = parse_array("1,2,2,3,3 / 1,3,1,2,2", ArrayOrder::Antilex);
    auto [p, q] = rsk_row_strict(a);
    CHECK(p == parse_tableau("1,2;1,2;3"));
    CHECK(q == parse_tableau("1,2;2,3;3"));
    CHECK(rsk_inverse_row_strict(p, q) == a);
}

TEST_CASE("identity and reversal words") {
    auto [pi, qi] = rsk_row_strict(identity_array(5, ArrayOrder::Antilex));
    CHECK(pi == parse_tableau("1,2,3,4,5"));
    CHECK(qi == parse_tableau("1,2,3,4,5"));

    BiArray rev{{1, 2, 3, 4}, {4, 3, 2, 1}, ArrayOrder::Antilex};
    auto [pr, qr] = rsk_row_strict(rev);
    CHECK(pr == parse_tableau("1;2;3;4"));
    CHECK(qr == parse_tableau("1;2;3;4"));
    CHECK(rsk_inverse_row_strict(pr, qr) == rev);
}

TEST_CASE("inverse validates its inputs") {
    CHECK_THROWS_AS(rsk_inverse_row_strict(parse_tableau("1,2"), parse_tableau("1;2")),
                    ShapeMismatch);
    CHECK_THROWS_AS(rsk_inverse_row_strict(parse_tableau("1,1"), parse_tableau("1,2")),
                    NotSemistandard);
    CHECK_THROWS_AS(rsk_row_strict(BiArray{{1, 1}, {1, 2}, ArrayOrder::Antilex}),
                    NotAntilexOrdered);
}

TEST_CASE("classical correspondence on a five-pair array") {
    BiArray a = parse_array("1,2,2,3,3 / 3,1,2,1,2", ArrayOrder::Lex);
    auto [t, s] = rsk_classical(a);
    CHECK(t == parse_tableau("1,1,2;2;3"));
    CHECK(s == parse_tableau("1,2,3;2;3"));
}

TEST_CASE("classical correspondence on permutation words") {
    BiArray w = parse_array("1,2,3,4,5 / 5,1,3,2,4", ArrayOrder::Lex);
    auto [t, s] = rsk_classical(w);
    CHECK(t == parse_tableau("1,2,4;3;5"));
    CHECK(s == parse_tableau("1,3,5;2;4"));

    auto [pi, qi] = rsk_classical(identity_array(4, ArrayOrder::Lex));
    CHECK(pi == parse_tableau("1,2,3,4"));
    CHECK(qi == parse_tableau("1,2,3,4"));

    CHECK_THROWS_AS(rsk_classical(BiArray{{1, 1}, {2, 1}, ArrayOrder::Lex}), NotLexOrdered);
}

TEST_CASE("both rules agree on permutation arrays") {
    // all permutations of 1..5 via next_permutation
    std::vector<int> word{1, 2, 3, 4, 5};
    do {
        BiArray anti{{1, 2, 3, 4, 5}, word, ArrayOrder::Antilex};
        BiArray lex = anti;
        lex.order = ArrayOrder::Lex;
        auto [pv, qv] = rsk_row_strict(anti);
        auto [pc, qc] = rsk_classical(lex);
        CHECK(pv == pc);
        CHECK(qv == qc);
        CHECK(is_standard(pv));
        CHECK(is_standard(qv));
        CHECK(rsk_inverse_row_strict(pv, qv) == anti);
    } while (std::next_permutation(word.begin(), word.end()));
}

TEST_CASE("equal top entries are recorded in strictly lower rows") {
    for (const auto& mu : compositions_of(5))
        for (const auto& nu : compositions_of(5))
            for (const auto& m : enumerate_matrices(mu, nu)) {
                BiArray a = matrix_to_array(m, ArrayOrder::Antilex);
                Tableau p;
                int prev_row = 0;
                for (int k = 0; k < a.size(); ++k) {
                    auto [next, pos] = row_insert_row_strict(p, a.bottom[k]);
                    p = next;
                    if (k > 0 && a.top[k] == a.top[k - 1]) CHECK(pos.row > prev_row);
                    prev_row = pos.row;
                }
            }
}

TEST_CASE("row-strict outputs are row-strict with the margin contents") {
    for (const auto& mu : compositions_of(5))
        for (const auto& nu : compositions_of(5))
            for (const auto& m : enumerate_matrices(mu, nu)) {
                BiArray a = matrix_to_array(m, ArrayOrder::Antilex);
                auto [p, q] = rsk_row_strict(a);
                CHECK(is_semistandard_row_strict(p));
                CHECK(is_semistandard_row_strict(q));
                CHECK(shape(p) == shape(q));
                CHECK(content(p) == mu);
                CHECK(content(q) == nu);
                CHECK(rsk_inverse_row_strict(p, q) == a);
            }
}
