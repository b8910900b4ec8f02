#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "rskflags/errors.hpp"
#include "rskflags/linalg.hpp"
#include "rskflags/nilpotent.hpp"
#include "rskflags/sampler.hpp"

using namespace rskflags;

namespace {

MatFp from_rows(std::vector<std::vector<uint64_t>> rows, int cols) {
    MatFp m(static_cast<int>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][static_cast<size_t>(j)];
    return m;
}

// Independent view of a subspace over F_2: the set of all its vectors as
// bitmasks, built by closing the basis under addition.
std::set<unsigned> f2_span(const MatFp& basis) {
    std::set<unsigned> pts{0};
    for (int i = 0; i < basis.rows; ++i) {
        unsigned v = 0;
        for (int j = 0; j < basis.cols; ++j)
            if (basis.at(i, j)) v |= 1u << j;
        std::set<unsigned> next = pts;
        for (unsigned w : pts) next.insert(w ^ v);
        pts = std::move(next);
    }
    return pts;
}

int f2_dim(const std::set<unsigned>& pts) {
    int d = 0;
    size_t n = pts.size();
    while (n > 1) {
        n >>= 1;
        ++d;
    }
    return d;
}

}  // namespace

TEST_CASE("field arithmetic") {
    PrimeField F(10007);
    CHECK(F.add(10000, 10) == 3);
    CHECK(F.sub(3, 10) == 10000);
    CHECK(F.mul(10006, 10006) == 1);
    for (uint64_t a : {1ull, 2ull, 5000ull, 10006ull}) CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK(F.reduce(-1) == 10006);
    CHECK_THROWS(PrimeField(10));
    CHECK(PrimeField::is_prime(2));
    CHECK(PrimeField::is_prime(101));
    CHECK_FALSE(PrimeField::is_prime(10001));  // 73 * 137
}

TEST_CASE("rref, rank and canonical row space") {
    PrimeField F(7);
    MatFp m = from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}, 3);
    CHECK(rank_of(F, m) == 2);
    MatFp r = row_space(F, m);
    CHECK(r.rows == 2);
    // canonical form is unique: same space from different generators
    MatFp m2 = from_rows({{1, 3, 4}, {0, 1, 1}}, 3);
    CHECK(row_space(F, m2) == r);
}

TEST_CASE("null space is the right kernel") {
    PrimeField F(5);
    MatFp m = from_rows({{1, 2, 0}, {0, 0, 1}}, 3);
    MatFp k = null_space(F, m);
    CHECK(k.rows == 1);
    MatFp prod = mul(F, m, transpose(k));
    for (uint64_t v : prod.a) CHECK(v == 0);
    CHECK(null_space(F, MatFp(0, 4)).rows == 4);
    CHECK(null_space(F, MatFp::identity(3)).rows == 0);
}

TEST_CASE("containment and membership") {
    PrimeField F(11);
    MatFp big = from_rows({{1, 0, 0}, {0, 1, 0}}, 3);
    MatFp small = from_rows({{3, 5, 0}}, 3);
    CHECK(rows_contained(F, small, big));
    CHECK_FALSE(rows_contained(F, big, small));
    MatFp basis = big;
    auto pivots = rref(F, basis);
    CHECK(in_row_space(F, basis, pivots, {7, 2, 0}));
    CHECK_FALSE(in_row_space(F, basis, pivots, {0, 0, 1}));
}

TEST_CASE("intersection dimensions agree with a point-set oracle over F_2") {
    PrimeField F(2);
    Rng rng(31337);
    const int d = 4;
    for (int trial = 0; trial < 100; ++trial) {
        MatFp a(2, d), b(2, d);
        for (auto& e : a.a) e = rng.below(2);
        for (auto& e : b.a) e = rng.below(2);
        std::set<unsigned> pa = f2_span(a), pb = f2_span(b);
        std::set<unsigned> inter;
        for (unsigned v : pa)
            if (pb.count(v)) inter.insert(v);
        CHECK(dim_intersect(F, a, b) == f2_dim(inter));
        MatFp basis = intersect_rows(F, a, b);
        CHECK(basis.rows == f2_dim(inter));
        CHECK(f2_span(basis) == inter);
    }
}

TEST_CASE("matrix powers") {
    PrimeField F(3);
    MatFp a = from_rows({{0, 1}, {0, 0}}, 2);
    CHECK(power(F, a, 0) == MatFp::identity(2));
    CHECK(power(F, a, 2) == MatFp(2, 2));
}

TEST_CASE("jordan type from rank sequences") {
    PrimeField F(101);
    NilpotentOperator x = make_nilpotent({3, 2, 2, 1}, F);
    CHECK(jordan_type_of(F, x.matrix) == Partition{3, 2, 2, 1});
    CHECK(jordan_type_of(F, MatFp(3, 3)) == Partition{1, 1, 1});
    NilpotentOperator big = make_nilpotent({4}, F);
    CHECK(jordan_type_of(F, big.matrix) == Partition{4});
    CHECK_THROWS_AS(jordan_type_of(F, MatFp::identity(2)), NotInvariant);
}

TEST_CASE("jordan matrix layout") {
    PrimeField F(5);
    NilpotentOperator x = make_nilpotent({2, 1}, F);
    // e_2 -> e_1, e_1 -> 0, e_3 -> 0 as column action
    MatFp e2(1, 3);
    e2.at(0, 1) = 1;
    MatFp img = image_of_rows(F, e2, x.matrix);
    REQUIRE(img.rows == 1);
    CHECK(img.at(0, 0) == 1);
    CHECK(img.at(0, 1) == 0);
    CHECK(img.at(0, 2) == 0);
    CHECK(make_nilpotent({1, 1, 1}, F).matrix == MatFp(3, 3));
    NilpotentOperator full = make_nilpotent({3}, F);
    CHECK(rank_of(F, full.matrix) == 2);
}

TEST_CASE("images and preimages under operator powers") {
    PrimeField F(7);
    NilpotentOperator x = make_nilpotent({2, 1}, F);
    // preimage of 0 is the kernel, spanned by e_1 and e_3
    MatFp ker = preimage_of_rows(F, MatFp(0, 3), x.matrix);
    CHECK(ker.rows == 2);
    MatFp e1(1, 3), e3(1, 3);
    e1.at(0, 0) = 1;
    e3.at(0, 2) = 1;
    CHECK(rows_contained(F, e1, ker));
    CHECK(rows_contained(F, e3, ker));
    // preimage of the kernel is everything
    CHECK(preimage_of_rows(F, ker, x.matrix).rows == 3);
    // image of everything is spanned by e_1
    MatFp img = image_of_rows(F, MatFp::identity(3), x.matrix);
    CHECK(img.rows == 1);
    CHECK(rows_contained(F, img, e1));
}
