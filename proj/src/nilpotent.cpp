#include "rskflags/nilpotent.hpp"

#include <algorithm>

#include "rskflags/errors.hpp"

namespace rskflags {

NilpotentOperator make_nilpotent(const Partition& lambda, const PrimeField& field) {
    if (!is_partition(lambda)) throw DimensionMismatch("Jordan type must be a partition");
    int d = weight(lambda);
    NilpotentOperator x{field, d, lambda, MatFp(d, d), {}};
    int offset = 0;
    for (int part : lambda) {
        for (int j = 1; j < part; ++j)
            x.matrix.at(offset + j - 1, offset + j) = 1;  // e_{offset+j+1} -> e_{offset+j}
        offset += part;
    }
    x.pow.reserve(static_cast<size_t>(d) + 1);
    x.pow.push_back(MatFp::identity(d));
    for (int t = 1; t <= d; ++t) x.pow.push_back(mul(field, x.pow.back(), x.matrix));
    return x;
}

Partition jordan_type_of(const PrimeField& F, const MatFp& A) {
    if (A.rows != A.cols) throw DimensionMismatch("operator must be square");
    int n = A.rows;
    // ranks of successive powers; stop when the power vanishes
    std::vector<int> ranks{n};
    MatFp P = A;
    for (int t = 1; t <= n && ranks.back() > 0; ++t) {
        ranks.push_back(rank_of(F, P));
        P = mul(F, P, A);
    }
    if (ranks.back() != 0) throw NotInvariant("operator is not nilpotent");
    // ranks[t-1] - ranks[t] = number of parts >= t
    std::vector<int> count_ge;
    for (size_t t = 1; t < ranks.size(); ++t) count_ge.push_back(ranks[t - 1] - ranks[t]);
    Partition lambda;
    for (size_t i = 0; i < count_ge.size(); ++i) {
        int mult = count_ge[i] - (i + 1 < count_ge.size() ? count_ge[i + 1] : 0);
        for (int k = 0; k < mult; ++k) lambda.push_back(static_cast<int>(i) + 1);
    }
    std::sort(lambda.rbegin(), lambda.rend());
    return lambda;
}

MatFp image_of_rows(const PrimeField& F, const MatFp& basis, const MatFp& op_power) {
    if (basis.rows == 0) return MatFp(0, op_power.cols);
    return row_space(F, mul(F, basis, transpose(op_power)));
}

MatFp preimage_of_rows(const PrimeField& F, const MatFp& target, const MatFp& op_power) {
    MatFp ann = target.rows == 0 ? MatFp::identity(op_power.cols) : null_space(F, target);
    if (ann.rows == 0) return row_space(F, MatFp::identity(op_power.cols));
    // v maps into the target iff ann * P * v^T = 0
    return null_space(F, mul(F, ann, op_power));
}

MatFp restrict_operator(const PrimeField& F, const MatFp& colact, const MatFp& basis_rref,
                        const std::vector<int>& pivots) {
    int k = basis_rref.rows;
    MatFp images = mul(F, basis_rref, transpose(colact));
    MatFp out(k, k);
    for (int i = 0; i < k; ++i) {
        std::vector<uint64_t> row(images.a.begin() + static_cast<size_t>(i) * images.cols,
                                  images.a.begin() + static_cast<size_t>(i + 1) * images.cols);
        if (!in_row_space(F, basis_rref, pivots, row))
            throw NotInvariant("subspace is not invariant under the operator");
        // rref coordinates can be read off the pivot columns; the transpose
        // puts the result back into column-action convention
        for (int j = 0; j < k; ++j) out.at(j, i) = row[static_cast<size_t>(pivots[j])];
    }
    return out;
}

}  // namespace rskflags
