#pragma once

#include <utility>

#include "rskflags/biarray.hpp"
#include "rskflags/tableau.hpp"

namespace rskflags {

/// 1-based (row, column) of a tableau box.
struct BoxPos {
    int row = 0;
    int col = 0;
    bool operator==(const BoxPos&) const = default;
};

/// Row bumping where z displaces the leftmost entry >= z. Preserves the
/// row-strict convention. Returns the updated tableau and the new box.
std::pair<Tableau, BoxPos> row_insert_row_strict(const Tableau& t, int z);

/// Row bumping where z displaces the leftmost entry > z (the classical rule,
/// preserving weakly increasing rows).
std::pair<Tableau, BoxPos> row_insert_classical(const Tableau& t, int z);

/// Inserts the bottom row of an antilex-ordered array, recording top entries.
/// Returns (insertion tableau P, recording tableau Q); both are row-strict,
/// content(P) = bottom content, content(Q) = top content.
std::pair<Tableau, Tableau> rsk_row_strict(const BiArray& a);

/// Reverse bumping: at each step removes the box holding the largest entry of
/// the recording tableau, taking the lowest row on ties. Inverse of
/// rsk_row_strict; output is antilex-ordered.
BiArray rsk_inverse_row_strict(const Tableau& p, const Tableau& q);

/// Classical correspondence on lex-ordered arrays; both outputs are classical
/// semistandard. Agrees with rsk_row_strict on permutation arrays.
std::pair<Tableau, Tableau> rsk_classical(const BiArray& a);

}  // namespace rskflags
