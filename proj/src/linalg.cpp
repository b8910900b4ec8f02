#include "rskflags/linalg.hpp"

#include <stdexcept>

#include "rskflags/errors.hpp"

namespace rskflags {

bool PrimeField::is_prime(uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint64_t q = 3; q * q <= n; q += 2)
        if (n % q == 0) return false;
    return true;
}

PrimeField::PrimeField(uint64_t prime) : p(prime) {
    if (p >= (1ull << 31)) throw std::invalid_argument("modulus too large");
    if (!is_prime(p)) throw std::invalid_argument("modulus is not prime");
}

uint64_t PrimeField::inv(uint64_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    // extended Euclid
    long long t = 0, new_t = 1;
    long long r = static_cast<long long>(p), new_r = static_cast<long long>(a % p);
    while (new_r != 0) {
        long long q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<uint64_t>(t);
}

uint64_t PrimeField::reduce(long long v) const {
    long long m = v % static_cast<long long>(p);
    if (m < 0) m += static_cast<long long>(p);
    return static_cast<uint64_t>(m);
}

MatFp MatFp::identity(int n) {
    MatFp m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatFp mul(const PrimeField& F, const MatFp& A, const MatFp& B) {
    if (A.cols != B.rows) throw DimensionMismatch("matrix product shape");
    MatFp C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            uint64_t aik = A.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < B.cols; ++j)
                C.at(i, j) = F.add(C.at(i, j), F.mul(aik, B.at(k, j)));
        }
    return C;
}

MatFp transpose(const MatFp& A) {
    MatFp T(A.cols, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

MatFp vstack(const MatFp& A, const MatFp& B) {
    if (A.rows == 0) return B;
    if (B.rows == 0) return A;
    if (A.cols != B.cols) throw DimensionMismatch("vstack widths differ");
    MatFp C(A.rows + B.rows, A.cols);
    std::copy(A.a.begin(), A.a.end(), C.a.begin());
    std::copy(B.a.begin(), B.a.end(), C.a.begin() + A.a.size());
    return C;
}

MatFp power(const PrimeField& F, const MatFp& A, int t) {
    if (A.rows != A.cols) throw DimensionMismatch("power of non-square matrix");
    MatFp R = MatFp::identity(A.rows);
    for (int i = 0; i < t; ++i) R = mul(F, R, A);
    return R;
}

std::vector<int> rref(const PrimeField& F, MatFp& A) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < A.cols && r < A.rows; ++c) {
        int pivot = -1;
        for (int i = r; i < A.rows; ++i)
            if (A.at(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < A.cols; ++j) std::swap(A.at(pivot, j), A.at(r, j));
        uint64_t s = F.inv(A.at(r, c));
        for (int j = c; j < A.cols; ++j) A.at(r, j) = F.mul(A.at(r, j), s);
        for (int i = 0; i < A.rows; ++i) {
            if (i == r || A.at(i, c) == 0) continue;
            uint64_t f = A.at(i, c);
            for (int j = c; j < A.cols; ++j)
                A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank_of(const PrimeField& F, MatFp A) { return static_cast<int>(rref(F, A).size()); }

MatFp row_space(const PrimeField& F, const MatFp& A) {
    MatFp R = A;
    auto pivots = rref(F, R);
    MatFp out(static_cast<int>(pivots.size()), A.cols);
    std::copy(R.a.begin(), R.a.begin() + out.a.size(), out.a.begin());
    return out;
}

MatFp null_space(const PrimeField& F, const MatFp& A) {
    MatFp R = A;
    auto pivots = rref(F, R);
    int n = A.cols;
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    MatFp K(n - static_cast<int>(pivots.size()), n);
    int k = 0;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        K.at(k, free) = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            K.at(k, pivots[i]) = F.neg(R.at(static_cast<int>(i), free));
        ++k;
    }
    return K;
}

bool in_row_space(const PrimeField& F, const MatFp& rref_basis, const std::vector<int>& pivots,
                  const std::vector<uint64_t>& v) {
    std::vector<uint64_t> residual = v;
    for (size_t i = 0; i < pivots.size(); ++i) {
        uint64_t coeff = residual[static_cast<size_t>(pivots[i])];
        if (coeff == 0) continue;
        for (int j = 0; j < rref_basis.cols; ++j)
            residual[static_cast<size_t>(j)] =
                F.sub(residual[static_cast<size_t>(j)], F.mul(coeff, rref_basis.at(static_cast<int>(i), j)));
    }
    for (uint64_t x : residual)
        if (x != 0) return false;
    return true;
}

MatFp intersect_rows(const PrimeField& F, const MatFp& A, const MatFp& B) {
    if (A.cols != B.cols) throw DimensionMismatch("ambient dimensions differ");
    // v lies in both row spaces iff it satisfies both annihilators
    MatFp constraints = vstack(null_space(F, A), null_space(F, B));
    if (constraints.rows == 0) return row_space(F, MatFp::identity(A.cols));
    return null_space(F, constraints);
}

int dim_sum(const PrimeField& F, const MatFp& A, const MatFp& B) {
    return rank_of(F, vstack(A, B));
}

int dim_intersect(const PrimeField& F, const MatFp& A, const MatFp& B) {
    return rank_of(F, A) + rank_of(F, B) - dim_sum(F, A, B);
}

bool rows_contained(const PrimeField& F, const MatFp& sub, const MatFp& sup) {
    return dim_sum(F, sub, sup) == rank_of(F, sup);
}

}  // namespace rskflags
