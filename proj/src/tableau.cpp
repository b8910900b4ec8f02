#include "rskflags/tableau.hpp"

#include <algorithm>

#include "rskflags/errors.hpp"

namespace rskflags {

int Tableau::size() const {
    int n = 0;
    for (const auto& row : rows) n += static_cast<int>(row.size());
    return n;
}

Partition shape(const Tableau& t) {
    Partition s;
    s.reserve(t.rows.size());
    for (size_t r = 0; r < t.rows.size(); ++r) {
        if (t.rows[r].empty()) throw MalformedTableau("empty row in tableau");
        if (r > 0 && t.rows[r].size() > t.rows[r - 1].size())
            throw MalformedTableau("row lengths increase");
        s.push_back(static_cast<int>(t.rows[r].size()));
    }
    return s;
}

Composition content(const Tableau& t) {
    int max_entry = 0;
    for (const auto& row : t.rows)
        for (int e : row) {
            if (e < 1) throw MalformedTableau("non-positive entry");
            max_entry = std::max(max_entry, e);
        }
    Composition mu(max_entry, 0);
    for (const auto& row : t.rows)
        for (int e : row) mu[e - 1] += 1;
    for (int i = 0; i < max_entry; ++i)
        if (mu[i] == 0) throw GappedContent("entry " + std::to_string(i + 1) + " never appears");
    return mu;
}

static bool valid_diagram(const Tableau& t) {
    for (size_t r = 0; r < t.rows.size(); ++r) {
        if (t.rows[r].empty()) return false;
        if (r > 0 && t.rows[r].size() > t.rows[r - 1].size()) return false;
    }
    return true;
}

bool is_semistandard_row_strict(const Tableau& t) {
    if (!valid_diagram(t)) return false;
    for (size_t r = 0; r < t.rows.size(); ++r) {
        const auto& row = t.rows[r];
        for (size_t c = 0; c < row.size(); ++c) {
            if (row[c] < 1) return false;
            if (c > 0 && row[c] <= row[c - 1]) return false;             // strict along rows
            if (r > 0 && row[c] < t.rows[r - 1][c]) return false;        // weak down columns
        }
    }
    return true;
}

bool is_semistandard_classical(const Tableau& t) {
    if (!valid_diagram(t)) return false;
    for (size_t r = 0; r < t.rows.size(); ++r) {
        const auto& row = t.rows[r];
        for (size_t c = 0; c < row.size(); ++c) {
            if (row[c] < 1) return false;
            if (c > 0 && row[c] < row[c - 1]) return false;              // weak along rows
            if (r > 0 && row[c] <= t.rows[r - 1][c]) return false;       // strict down columns
        }
    }
    return true;
}

bool is_standard(const Tableau& t) {
    if (!valid_diagram(t)) return false;
    int d = t.size();
    std::vector<bool> seen(static_cast<size_t>(d) + 1, false);
    for (const auto& row : t.rows)
        for (int e : row) {
            if (e < 1 || e > d || seen[e]) return false;
            seen[e] = true;
        }
    for (size_t r = 0; r < t.rows.size(); ++r) {
        const auto& row = t.rows[r];
        for (size_t c = 0; c < row.size(); ++c) {
            if (c > 0 && row[c] <= row[c - 1]) return false;
            if (r > 0 && row[c] <= t.rows[r - 1][c]) return false;
        }
    }
    return true;
}

namespace {

struct FillState {
    const Partition& sh;
    Composition remaining;
    Tableau work;
    std::vector<Tableau>* out;
};

// Row-major DFS trying smaller entries first, so results come out in
// row-reading lexicographic order.
void fill_cell(FillState& st, size_t r, size_t c) {
    if (r == st.sh.size()) {
        st.out->push_back(st.work);
        return;
    }
    size_t nr = r, nc = c + 1;
    if (static_cast<int>(nc) == st.sh[r]) {
        nr = r + 1;
        nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, st.work.rows[r][c - 1] + 1);
    if (r > 0) lo = std::max(lo, st.work.rows[r - 1][c]);
    int n = static_cast<int>(st.remaining.size());
    for (int v = lo; v <= n; ++v) {
        if (st.remaining[v - 1] == 0) continue;
        st.remaining[v - 1] -= 1;
        st.work.rows[r][c] = v;
        fill_cell(st, nr, nc);
        st.remaining[v - 1] += 1;
    }
}

}  // namespace

std::vector<Tableau> enumerate_semistandard_row_strict(const Partition& sh,
                                                       const Composition& mu) {
    if (!is_partition(sh)) throw MalformedTableau("shape is not a partition");
    if (!is_composition(mu)) throw MalformedTableau("content is not a composition");
    if (weight(sh) != weight(mu)) throw SizeMismatch("|shape| != |content|");
    std::vector<Tableau> out;
    if (sh.empty()) {
        out.push_back(Tableau{});
        return out;
    }
    Tableau work;
    for (int len : sh) work.rows.emplace_back(static_cast<size_t>(len), 0);
    FillState st{sh, mu, std::move(work), &out};
    fill_cell(st, 0, 0);
    return out;
}

std::vector<Tableau> standard_tableaux(const Partition& sh) {
    return enumerate_semistandard_row_strict(sh, Composition(static_cast<size_t>(weight(sh)), 1));
}

}  // namespace rskflags
