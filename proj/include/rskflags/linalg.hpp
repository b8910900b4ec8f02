#pragma once

#include <cstdint>
#include <vector>

namespace rskflags {

/// Exact arithmetic modulo a prime p < 2^31 (products fit in uint64_t).
struct PrimeField {
    uint64_t p;

    explicit PrimeField(uint64_t prime);

    uint64_t add(uint64_t a, uint64_t b) const {
        uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p - b; }
    uint64_t mul(uint64_t a, uint64_t b) const { return (a * b) % p; }
    uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p - a; }
    uint64_t inv(uint64_t a) const;
    uint64_t reduce(long long v) const;

    static bool is_prime(uint64_t n);

    bool operator==(const PrimeField& o) const { return p == o.p; }
};

/// Dense row-major matrix over a prime field. Subspaces of F_p^d are stored as
/// basis matrices whose rows span them; a 0 x d matrix is the zero subspace.
struct MatFp {
    int rows = 0;
    int cols = 0;
    std::vector<uint64_t> a;

    MatFp() = default;
    MatFp(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c), 0) {}

    uint64_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    uint64_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static MatFp identity(int n);

    bool operator==(const MatFp&) const = default;
};

MatFp mul(const PrimeField& F, const MatFp& A, const MatFp& B);
MatFp transpose(const MatFp& A);
MatFp vstack(const MatFp& A, const MatFp& B);
MatFp power(const PrimeField& F, const MatFp& A, int t);

// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref(const PrimeField& F, MatFp& A);

int rank_of(const PrimeField& F, MatFp A);

// Canonical basis of the row space: rref with zero rows dropped.
MatFp row_space(const PrimeField& F, const MatFp& A);

// Basis rows of the right kernel {v : A v^T = 0}.
MatFp null_space(const PrimeField& F, const MatFp& A);

// v must have A.cols entries; A must be in rref form with the given pivots.
bool in_row_space(const PrimeField& F, const MatFp& rref_basis, const std::vector<int>& pivots,
                  const std::vector<uint64_t>& v);

// Row-space intersection of two subspaces of the same ambient space.
MatFp intersect_rows(const PrimeField& F, const MatFp& A, const MatFp& B);

int dim_sum(const PrimeField& F, const MatFp& A, const MatFp& B);
int dim_intersect(const PrimeField& F, const MatFp& A, const MatFp& B);

// rowspace(sub) subseteq rowspace(sup)
bool rows_contained(const PrimeField& F, const MatFp& sub, const MatFp& sup);

}  // namespace rskflags
