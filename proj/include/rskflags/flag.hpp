#pragma once

#include <string>

#include "rskflags/biarray.hpp"
#include "rskflags/nilpotent.hpp"
#include "rskflags/tableau.hpp"

namespace rskflags {

/// Nested chain of subspaces 0 < F_1 < ... < F_n = F_p^d, each stored as a
/// reduced-row-echelon basis so equality and containment are canonical
/// comparisons. The type lists the successive dimension jumps.
struct Flag {
    PrimeField field;
    std::vector<MatFp> steps;

    int ambient_dim() const { return steps.empty() ? 0 : steps.back().cols; }
    int num_steps() const { return static_cast<int>(steps.size()); }
};

Composition flag_type(const Flag& f);

// Checks nesting with positive jumps and that the last step is the full space.
void validate_flag(const Flag& f);

// x(F_i) inside F_{i-1} for every i, with F_0 = 0.
bool is_x_stable(const NilpotentOperator& x, const Flag& f);

// Jordan type of x restricted to the row space of w. Throws NotInvariant if
// x(W) is not inside W.
Partition restriction_jordan_type(const NilpotentOperator& x, const MatFp& w);

// The tableau whose entry-<=-i boxes form the Jordan type of x|_{F_i}; the
// boxes added at step i get entry i. Requires is_x_stable.
Tableau tableau_of_flag(const NilpotentOperator& x, const Flag& f);

// Relative position matrix: entry (r, c) counts dim of
// (F_c & G_r) / (F_c & G_{r-1} + F_{c-1} & G_r), so column sums give f's type
// and row sums give g's type.
RelPosMatrix relative_position(const Flag& f, const Flag& g);

// Keeps the steps at the partial sums of mu; f must be a complete flag.
Flag forget(const Flag& f, const Composition& mu);

// JSON form: {"p": ..., "type": [...], "steps": [[[row], ...], ...]}
Flag flag_from_json(const std::string& text);
std::string flag_to_json(const Flag& f);

}  // namespace rskflags
