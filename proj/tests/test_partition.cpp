#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rskflags/partition.hpp"

using namespace rskflags;

TEST_CASE("partition predicate") {
    CHECK(is_partition({}));
    CHECK(is_partition({3, 1, 1}));
    CHECK_FALSE(is_partition({1, 2}));
    CHECK_FALSE(is_partition({2, 0}));
    CHECK(is_composition({1, 3, 1}));
    CHECK_FALSE(is_composition({1, 0}));
}

TEST_CASE("conjugate transposes the diagram") {
    CHECK(conjugate({3, 1, 1}) == Partition{3, 1, 1});
    CHECK(conjugate({2, 2, 1}) == Partition{3, 2});
    CHECK(conjugate({}) == Partition{});
    for (int d = 0; d <= 7; ++d)
        for (const auto& p : partitions_of(d)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("partition counts match the classical sequence") {
    // p(0..9) = 1,1,2,3,5,7,11,15,22,30
    int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
    for (int d = 0; d <= 9; ++d) CHECK(partitions_of(d).size() == static_cast<size_t>(expected[d]));
}

TEST_CASE("composition counts are powers of two") {
    for (int d = 1; d <= 8; ++d)
        CHECK(compositions_of(d).size() == static_cast<size_t>(1) << (d - 1));
    CHECK(compositions_of(0).size() == 1);
    // bounded number of parts
    CHECK(compositions_of(6, 4).size() == 26);  // C(5,0)+C(5,1)+C(5,2)+C(5,3)
    // bounded part size
    CHECK(compositions_of(5, 0, 3).size() == 13);
}

TEST_CASE("partial sums") {
    CHECK(partial_sums({2, 2, 1}) == std::vector<int>{2, 4, 5});
    CHECK(partial_sums({}) == std::vector<int>{});
}
