#pragma once

#include <vector>

namespace rskflags {

// Weakly decreasing sequence of positive integers. The empty sequence is the
// partition of 0.
using Partition = std::vector<int>;

// Positive integers, order significant, not necessarily decreasing.
using Composition = std::vector<int>;

bool is_partition(const Partition& p);
bool is_composition(const Composition& c);

// Sum of parts.
int weight(const Composition& c);

// Transposed diagram: conjugate(p)[k] = number of parts of p that are > k.
Partition conjugate(const Partition& p);

// All partitions of d in decreasing lexicographic order; partitions_of(0) = { () }.
std::vector<Partition> partitions_of(int d);

// All compositions of d. max_parts/max_part of 0 mean unbounded.
std::vector<Composition> compositions_of(int d, int max_parts = 0, int max_part = 0);

// (c1, c1+c2, ..., |c|)
std::vector<int> partial_sums(const Composition& c);

}  // namespace rskflags
