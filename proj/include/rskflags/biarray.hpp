#pragma once

#include <utility>
#include <vector>

#include "rskflags/partition.hpp"

namespace rskflags {

/// Ordering convention for two-rowed arrays. Both keep the top row weakly
/// increasing; they differ on the bottom row within a run of equal top values:
///   Antilex: bottom weakly decreasing
///   Lex:     bottom weakly increasing
enum class ArrayOrder { Antilex, Lex };

/// Two-rowed array of d column pairs. A pair (r, c) encodes one unit in entry
/// (row r, column c) of the corresponding nonnegative-integer matrix, so the
/// top row has the matrix's row indices and the bottom row its column indices.
struct BiArray {
    std::vector<int> top;
    std::vector<int> bottom;
    ArrayOrder order = ArrayOrder::Antilex;

    bool operator==(const BiArray& o) const { return top == o.top && bottom == o.bottom; }
    int size() const { return static_cast<int>(top.size()); }
};

/// Nonnegative-integer matrix classifying a pair of flags up to simultaneous
/// change of basis. Row sums give the type of the second flag, column sums the
/// type of the first.
struct RelPosMatrix {
    std::vector<std::vector<int>> entries;

    bool operator==(const RelPosMatrix&) const = default;
    auto operator<=>(const RelPosMatrix&) const = default;

    int num_rows() const { return static_cast<int>(entries.size()); }
    int num_cols() const { return entries.empty() ? 0 : static_cast<int>(entries[0].size()); }
    int total() const;
};

Composition row_sums(const RelPosMatrix& m);
Composition col_sums(const RelPosMatrix& m);

// Margins must be positive (a zero row or column has no flag-type reading);
// the zero-size matrix is allowed. Throws DimensionMismatch otherwise.
void validate_matrix(const RelPosMatrix& m);

bool satisfies_order(const BiArray& a);

// Checks equal row lengths, positive entries and the declared order.
// Throws SizeMismatch / NotAntilexOrdered / NotLexOrdered.
void validate_array(const BiArray& a);

// Emits each pair (r, c) with multiplicity entries[r][c], ordered per the
// requested convention.
BiArray matrix_to_array(const RelPosMatrix& m, ArrayOrder order);

// Inverse of matrix_to_array; dimensions are the maximal indices present.
RelPosMatrix array_to_matrix(const BiArray& a);

// Orders a raw multiset of (top, bottom) pairs into a valid BiArray.
BiArray sorted_to_order(std::vector<std::pair<int, int>> pairs, ArrayOrder order);

// All matrices with the given column sums mu and row sums nu (positive parts).
std::vector<RelPosMatrix> enumerate_matrices(const Composition& mu, const Composition& nu);

// Identity permutation array (1..d / 1..d).
BiArray identity_array(int d, ArrayOrder order);

bool is_permutation_array(const BiArray& a);

}  // namespace rskflags
