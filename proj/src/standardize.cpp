#include "rskflags/standardize.hpp"

#include <algorithm>
#include <map>

#include "rskflags/errors.hpp"

namespace rskflags {

namespace {

// Relabels each value class with consecutive integers in the order the class's
// boxes appear in `positions_of`, which must list (sort key, row, col) tuples.
Tableau relabel(const Tableau& t, std::map<int, std::vector<std::pair<int, int>>> classes) {
    Tableau out = t;
    int next = 1;
    for (auto& [value, boxes] : classes) {
        (void)value;
        for (auto [r, c] : boxes) out.rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = next++;
    }
    return out;
}

}  // namespace

Tableau standardize_tableau_row_strict(const Tableau& t) {
    if (!is_semistandard_row_strict(t)) throw NotSemistandard("tableau is not row-strict");
    std::map<int, std::vector<std::pair<int, int>>> classes;
    for (size_t r = 0; r < t.rows.size(); ++r)
        for (size_t c = 0; c < t.rows[r].size(); ++c)
            classes[t.rows[r][c]].emplace_back(static_cast<int>(r), static_cast<int>(c));
    // within a class, assign top row first
    for (auto& [value, boxes] : classes) {
        (void)value;
        std::sort(boxes.begin(), boxes.end());
    }
    return relabel(t, std::move(classes));
}

Tableau standardize_tableau_classical(const Tableau& t) {
    if (!is_semistandard_classical(t)) throw NotSemistandard("tableau is not classical semistandard");
    std::map<int, std::vector<std::pair<int, int>>> classes;
    for (size_t r = 0; r < t.rows.size(); ++r)
        for (size_t c = 0; c < t.rows[r].size(); ++c)
            classes[t.rows[r][c]].emplace_back(static_cast<int>(r), static_cast<int>(c));
    // within a class, assign left to right
    for (auto& [value, boxes] : classes) {
        (void)value;
        std::sort(boxes.begin(), boxes.end(), [](const auto& a, const auto& b) {
            return a.second != b.second ? a.second < b.second : a.first < b.first;
        });
    }
    return relabel(t, std::move(classes));
}

namespace {

BiArray standardize_array(const BiArray& a, bool decreasing) {
    validate_array(a);
    int d = a.size();
    BiArray out;
    out.order = a.order;
    out.top.resize(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) out.top[k] = k + 1;
    out.bottom.assign(static_cast<size_t>(d), 0);

    std::map<int, std::vector<int>> classes;  // bottom value -> positions, left to right
    for (int k = 0; k < d; ++k) classes[a.bottom[k]].push_back(k);
    int next = 1;
    for (auto& [value, positions] : classes) {
        (void)value;
        int block = static_cast<int>(positions.size());
        for (size_t i = 0; i < positions.size(); ++i) {
            int label = decreasing ? next + block - 1 - static_cast<int>(i)
                                   : next + static_cast<int>(i);
            out.bottom[positions[i]] = label;
        }
        next += block;
    }
    return out;
}

}  // namespace

BiArray standardize_array_antilex(const BiArray& a) {
    if (a.order != ArrayOrder::Antilex) throw NotAntilexOrdered("array is not antilex-ordered");
    return standardize_array(a, /*decreasing=*/true);
}

BiArray standardize_array_lex(const BiArray& a) {
    if (a.order != ArrayOrder::Lex) throw NotLexOrdered("array is not lex-ordered");
    return standardize_array(a, /*decreasing=*/false);
}

BiArray destandardize_array(const BiArray& p, const Composition& mu, const Composition& nu) {
    if (!is_permutation_array(p)) throw MembershipError("input is not a permutation array");
    if (!is_composition(mu) || !is_composition(nu)) throw SizeMismatch("contents must be positive");
    int d = p.size();
    if (weight(mu) != d || weight(nu) != d) throw SizeMismatch("content weights differ from array length");

    BiArray out;
    out.order = ArrayOrder::Antilex;
    out.top.reserve(static_cast<size_t>(d));
    for (size_t i = 0; i < nu.size(); ++i)
        out.top.insert(out.top.end(), static_cast<size_t>(nu[i]), static_cast<int>(i) + 1);

    std::vector<int> block_of(static_cast<size_t>(d) + 1, 0);
    {
        int v = 1;
        for (size_t j = 0; j < mu.size(); ++j)
            for (int k = 0; k < mu[j]; ++k) block_of[v++] = static_cast<int>(j) + 1;
    }
    out.bottom.reserve(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) out.bottom.push_back(block_of[p.bottom[k]]);

    // p must actually be the standardization of the result, not merely produce
    // an ordered array; checking the order alone misses permutations that pick
    // a class's labels in the wrong sequence.
    if (!satisfies_order(out)) throw MembershipError("collapsed array violates the antilex order");
    BiArray roundtrip = standardize_array_antilex(out);
    if (!(roundtrip == p)) throw MembershipError("permutation is not the standardization of any array with these contents");
    return out;
}

}  // namespace rskflags
