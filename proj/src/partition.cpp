#include "rskflags/partition.hpp"

#include <algorithm>
#include <numeric>

namespace rskflags {

bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

bool is_composition(const Composition& c) {
    return std::all_of(c.begin(), c.end(), [](int x) { return x >= 1; });
}

int weight(const Composition& c) {
    return std::accumulate(c.begin(), c.end(), 0);
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    Partition q(p[0], 0);
    for (int part : p)
        for (int k = 0; k < part; ++k) q[k] += 1;
    return q;
}

static void partitions_rec(int remaining, int max_part, Partition& acc,
                           std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(acc);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        acc.push_back(part);
        partitions_rec(remaining - part, part, acc, out);
        acc.pop_back();
    }
}

std::vector<Partition> partitions_of(int d) {
    std::vector<Partition> out;
    Partition acc;
    partitions_rec(d, d, acc, out);
    return out;
}

static void compositions_rec(int remaining, int max_parts, int max_part, Composition& acc,
                             std::vector<Composition>& out) {
    if (remaining == 0) {
        out.push_back(acc);
        return;
    }
    if (max_parts > 0 && static_cast<int>(acc.size()) >= max_parts) return;
    int hi = max_part > 0 ? std::min(remaining, max_part) : remaining;
    for (int part = 1; part <= hi; ++part) {
        acc.push_back(part);
        compositions_rec(remaining - part, max_parts, max_part, acc, out);
        acc.pop_back();
    }
}

std::vector<Composition> compositions_of(int d, int max_parts, int max_part) {
    std::vector<Composition> out;
    Composition acc;
    compositions_rec(d, max_parts, max_part, acc, out);
    return out;
}

std::vector<int> partial_sums(const Composition& c) {
    std::vector<int> out(c.size());
    int run = 0;
    for (size_t i = 0; i < c.size(); ++i) {
        run += c[i];
        out[i] = run;
    }
    return out;
}

}  // namespace rskflags
