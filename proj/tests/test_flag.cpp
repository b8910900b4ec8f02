#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rskflags/errors.hpp"
#include "rskflags/flag.hpp"
#include "rskflags/text_io.hpp"

using namespace rskflags;

namespace {

MatFp coord_subspace(const std::vector<int>& axes, int d) {
    MatFp m(static_cast<int>(axes.size()), d);
    for (size_t i = 0; i < axes.size(); ++i) m.at(static_cast<int>(i), axes[i] - 1) = 1;
    return m;
}

Flag coordinate_flag(const PrimeField& F, const std::vector<std::vector<int>>& steps, int d) {
    Flag f{F, {}};
    for (const auto& axes : steps) f.steps.push_back(coord_subspace(axes, d));
    return f;
}

}  // namespace

TEST_CASE("flag validation and type") {
    PrimeField F(101);
    Flag f = coordinate_flag(F, {{1}, {1, 2}, {1, 2, 3}}, 3);
    validate_flag(f);
    CHECK(flag_type(f) == Composition{1, 1, 1});

    Flag partial = coordinate_flag(F, {{1, 3}, {1, 2, 3}}, 3);
    validate_flag(partial);
    CHECK(flag_type(partial) == Composition{2, 1});

    Flag broken = coordinate_flag(F, {{2}, {1, 3}, {1, 2, 3}}, 3);
    CHECK_THROWS_AS(validate_flag(broken), DimensionMismatch);
    Flag short_flag = coordinate_flag(F, {{1}, {1, 2}}, 3);
    CHECK_THROWS_AS(validate_flag(short_flag), DimensionMismatch);
}

TEST_CASE("stability under the operator") {
    PrimeField F(101);
    NilpotentOperator x = make_nilpotent({2, 1}, F);
    NilpotentOperator zero = make_nilpotent({1, 1, 1}, F);

    Flag good = coordinate_flag(F, {{1}, {1, 2}, {1, 2, 3}}, 3);
    Flag bad = coordinate_flag(F, {{2}, {1, 2}, {1, 2, 3}}, 3);
    CHECK(is_x_stable(zero, good));
    CHECK(is_x_stable(zero, bad));
    CHECK(is_x_stable(x, good));
    CHECK_FALSE(is_x_stable(x, bad));  // x e_2 = e_1 leaves the first step
}

TEST_CASE("restriction jordan type") {
    PrimeField F(101);
    NilpotentOperator x = make_nilpotent({2, 1}, F);
    CHECK(restriction_jordan_type(x, MatFp(0, 3)) == Partition{});
    CHECK(restriction_jordan_type(x, MatFp::identity(3)) == Partition{2, 1});
    CHECK(restriction_jordan_type(x, coord_subspace({1, 2}, 3)) == Partition{2});
    CHECK(restriction_jordan_type(x, coord_subspace({1, 3}, 3)) == Partition{1, 1});
    CHECK_THROWS_AS(restriction_jordan_type(x, coord_subspace({2}, 3)), NotInvariant);
}

TEST_CASE("tableau of a flag") {
    PrimeField F(101);
    NilpotentOperator x = make_nilpotent({2, 1}, F);

    Flag complete = coordinate_flag(F, {{1}, {1, 2}, {1, 2, 3}}, 3);
    CHECK(tableau_of_flag(x, complete) == parse_tableau("1,2;3"));

    Flag other = coordinate_flag(F, {{1}, {1, 3}, {1, 2, 3}}, 3);
    CHECK(tableau_of_flag(x, other) == parse_tableau("1,3;2"));

    Flag partial = coordinate_flag(F, {{1, 3}, {1, 2, 3}}, 3);
    CHECK(tableau_of_flag(x, partial) == parse_tableau("1,2;1"));

    Flag unstable = coordinate_flag(F, {{2}, {1, 2}, {1, 2, 3}}, 3);
    CHECK_THROWS_AS(tableau_of_flag(x, unstable), NotStable);

    // zero operator: boxes stack down the first column in content order
    NilpotentOperator zero = make_nilpotent({1, 1, 1, 1, 1}, F);
    Flag f5 = coordinate_flag(F, {{1, 2}, {1, 2, 3, 4}, {1, 2, 3, 4, 5}}, 5);
    CHECK(tableau_of_flag(zero, f5) == parse_tableau("1;1;2;2;3"));
}

TEST_CASE("relative position of coordinate flags") {
    PrimeField F(101);
    Flag f = coordinate_flag(F, {{1}, {1, 2}, {1, 2, 3}}, 3);
    CHECK(relative_position(f, f) == parse_matrix("1,0,0;0,1,0;0,0,1"));

    Flag opposite = coordinate_flag(F, {{3}, {3, 2}, {1, 2, 3}}, 3);
    CHECK(relative_position(f, opposite) == parse_matrix("0,0,1;0,1,0;1,0,0"));

    // column sums follow the first argument, row sums the second
    Flag partial = coordinate_flag(F, {{1, 3}, {1, 2, 3}}, 3);
    RelPosMatrix m = relative_position(partial, f);
    CHECK(col_sums(m) == flag_type(partial));
    CHECK(row_sums(m) == flag_type(f));
    CHECK(m == parse_matrix("1,0;0,1;1,0"));
}

TEST_CASE("coarsening a complete flag") {
    PrimeField F(101);
    Flag f = coordinate_flag(F, {{1}, {1, 2}, {1, 2, 3}}, 3);

    Flag same = forget(f, {1, 1, 1});
    CHECK(same.steps.size() == 3);
    CHECK(flag_type(same) == Composition{1, 1, 1});

    Flag trivial = forget(f, {3});
    CHECK(trivial.steps.size() == 1);
    CHECK(flag_type(trivial) == Composition{3});

    Flag two = forget(f, {2, 1});
    CHECK(two.steps.size() == 2);
    CHECK(two.steps[0] == f.steps[1]);

    Flag partial = coordinate_flag(F, {{1, 3}, {1, 2, 3}}, 3);
    CHECK_THROWS_AS(forget(partial, {2, 1}), SizeMismatch);
    CHECK_THROWS_AS(forget(f, {2, 2}), SizeMismatch);
}

TEST_CASE("flag json round trip") {
    PrimeField F(10007);
    Flag f = coordinate_flag(F, {{1, 3}, {1, 2, 3}}, 3);
    std::string text = flag_to_json(f);
    Flag back = flag_from_json(text);
    CHECK(back.field.p == 10007);
    CHECK(back.steps == f.steps);
    CHECK_THROWS_AS(flag_from_json(R"({"p": 7, "steps": [[[1,0]],[[1,0]]]})"), DimensionMismatch);
}
