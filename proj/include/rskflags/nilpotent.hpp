#pragma once

#include "rskflags/linalg.hpp"
#include "rskflags/partition.hpp"

namespace rskflags {

/// Nilpotent operator in Jordan form, one block per part of jordan_type, with
/// ones on the superdiagonal (column action: matrix * v^T). Powers 0..dim are
/// precomputed since flag construction asks for them constantly.
struct NilpotentOperator {
    PrimeField field;
    int dim = 0;
    Partition jordan_type;
    MatFp matrix;
    std::vector<MatFp> pow;

    const MatFp& power_of(int t) const { return pow[static_cast<size_t>(t >= dim ? dim : t)]; }
};

NilpotentOperator make_nilpotent(const Partition& lambda, const PrimeField& field);

// Jordan type from the rank sequence of powers; throws NotInvariant if A is
// not nilpotent.
Partition jordan_type_of(const PrimeField& F, const MatFp& A);

// Row space of {v * P^T : v in rowspace(basis)} where P acts on columns.
MatFp image_of_rows(const PrimeField& F, const MatFp& basis, const MatFp& op_power);

// {v : v mapped under op_power lies in rowspace(target)}
MatFp preimage_of_rows(const PrimeField& F, const MatFp& target, const MatFp& op_power);

// Matrix (column action) of the operator induced on the row space of
// basis_rref, in the coordinates of its rows. basis_rref must be in reduced
// echelon form with the given pivots; throws NotInvariant when the space does
// not map into itself.
MatFp restrict_operator(const PrimeField& F, const MatFp& colact, const MatFp& basis_rref,
                        const std::vector<int>& pivots);

}  // namespace rskflags
