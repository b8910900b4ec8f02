#pragma once

#include <compare>
#include <vector>

#include "rskflags/partition.hpp"

namespace rskflags {

/// Rows of positive integer entries, left-justified. Two filling conventions
/// are used throughout:
///   row-strict: strictly increasing along rows, weakly increasing down columns
///   classical:  weakly increasing along rows, strictly increasing down columns
struct Tableau {
    std::vector<std::vector<int>> rows;

    bool operator==(const Tableau&) const = default;
    auto operator<=>(const Tableau&) const = default;

    bool empty() const { return rows.empty(); }
    int size() const;  // number of boxes
};

// Row lengths; throws MalformedTableau if they increase or a row is empty.
Partition shape(const Tableau& t);

// content(t)[i-1] = multiplicity of entry i, up to the maximum entry.
// Throws GappedContent if some value below the maximum never appears.
Composition content(const Tableau& t);

bool is_standard(const Tableau& t);
bool is_semistandard_row_strict(const Tableau& t);
bool is_semistandard_classical(const Tableau& t);

// All row-strict semistandard tableaux of the given shape and content, in
// row-reading lexicographic order. Throws SizeMismatch if |shape| != |content|.
std::vector<Tableau> enumerate_semistandard_row_strict(const Partition& shape,
                                                       const Composition& content);

// Standard tableaux of the given shape (row-strict enumeration with content 1^d).
std::vector<Tableau> standard_tableaux(const Partition& shape);

}  // namespace rskflags
