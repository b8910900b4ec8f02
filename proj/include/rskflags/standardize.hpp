#pragma once

#include "rskflags/biarray.hpp"
#include "rskflags/tableau.hpp"

namespace rskflags {

/// Standardization of a row-strict tableau: the k-th value class is relabeled
/// with its block of consecutive integers, assigned top row first. Equal
/// entries of a row-strict tableau sit in distinct rows, so this is well
/// defined.
Tableau standardize_tableau_row_strict(const Tableau& t);

/// Classical standardization: each value class relabeled left to right.
Tableau standardize_tableau_classical(const Tableau& t);

/// Array standardization for the antilex convention: top becomes 1..d, each
/// bottom value class is relabeled decreasingly from left to right.
BiArray standardize_array_antilex(const BiArray& a);

/// Lex convention: bottom value classes relabeled increasingly left to right.
BiArray standardize_array_lex(const BiArray& a);

/// Inverse of standardize_array_antilex on its image: collapses the top row to
/// nu-blocks and each bottom entry to the index of the mu-block containing it.
/// Throws MembershipError when p is not the standardization of any array with
/// these contents.
BiArray destandardize_array(const BiArray& p, const Composition& mu, const Composition& nu);

}  // namespace rskflags
