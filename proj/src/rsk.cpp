#include "rskflags/rsk.hpp"

#include <algorithm>

#include "rskflags/errors.hpp"

namespace rskflags {

namespace {

// ge: bump leftmost entry >= z (row-strict rule); otherwise leftmost entry > z.
BoxPos insert_unchecked(Tableau& t, int z, bool ge) {
    size_t r = 0;
    for (;; ++r) {
        if (r == t.rows.size()) {
            t.rows.push_back({z});
            return {static_cast<int>(r) + 1, 1};
        }
        auto& row = t.rows[r];
        auto it = ge ? std::lower_bound(row.begin(), row.end(), z)
                     : std::upper_bound(row.begin(), row.end(), z);
        if (it == row.end()) {
            row.push_back(z);
            return {static_cast<int>(r) + 1, static_cast<int>(row.size())};
        }
        std::swap(*it, z);  // z takes the box, the old entry bumps down
    }
}

}  // namespace

std::pair<Tableau, BoxPos> row_insert_row_strict(const Tableau& t, int z) {
    if (!is_semistandard_row_strict(t)) throw NotSemistandard("tableau is not row-strict");
    if (z < 1) throw MalformedTableau("non-positive entry inserted");
    Tableau out = t;
    BoxPos pos = insert_unchecked(out, z, /*ge=*/true);
    return {std::move(out), pos};
}

std::pair<Tableau, BoxPos> row_insert_classical(const Tableau& t, int z) {
    if (!is_semistandard_classical(t)) throw NotSemistandard("tableau is not classical semistandard");
    if (z < 1) throw MalformedTableau("non-positive entry inserted");
    Tableau out = t;
    BoxPos pos = insert_unchecked(out, z, /*ge=*/false);
    return {std::move(out), pos};
}

static std::pair<Tableau, Tableau> rsk_forward(const BiArray& a, bool ge) {
    validate_array(a);
    Tableau p, q;
    for (int k = 0; k < a.size(); ++k) {
        BoxPos pos = insert_unchecked(p, a.bottom[k], ge);
        if (pos.row > static_cast<int>(q.rows.size())) q.rows.emplace_back();
        q.rows[pos.row - 1].push_back(a.top[k]);
    }
    return {std::move(p), std::move(q)};
}

std::pair<Tableau, Tableau> rsk_row_strict(const BiArray& a) {
    if (a.order != ArrayOrder::Antilex) throw NotAntilexOrdered("array is not antilex-ordered");
    return rsk_forward(a, /*ge=*/true);
}

std::pair<Tableau, Tableau> rsk_classical(const BiArray& a) {
    if (a.order != ArrayOrder::Lex) throw NotLexOrdered("array is not lex-ordered");
    return rsk_forward(a, /*ge=*/false);
}

BiArray rsk_inverse_row_strict(const Tableau& p, const Tableau& q) {
    if (!is_semistandard_row_strict(p)) throw NotSemistandard("insertion tableau is not row-strict");
    if (!is_semistandard_row_strict(q)) throw NotSemistandard("recording tableau is not row-strict");
    if (shape(p) != shape(q)) throw ShapeMismatch("tableaux have different shapes");

    Tableau pw = p, qw = q;
    int d = pw.size();
    std::vector<int> top(static_cast<size_t>(d)), bottom(static_cast<size_t>(d));

    for (int k = d - 1; k >= 0; --k) {
        // box with the largest recording entry; lowest row wins ties
        int best_row = -1;
        for (size_t r = 0; r < qw.rows.size(); ++r) {
            if (qw.rows[r].empty()) continue;
            if (best_row < 0 || qw.rows[r].back() >= qw.rows[best_row].back())
                best_row = static_cast<int>(r);
        }
        top[k] = qw.rows[best_row].back();
        qw.rows[best_row].pop_back();

        int y = pw.rows[best_row].back();
        pw.rows[best_row].pop_back();
        for (int r = best_row - 1; r >= 0; --r) {
            // reverse of "bump leftmost >= z": y displaces the rightmost entry <= y
            auto& row = pw.rows[r];
            auto it = std::upper_bound(row.begin(), row.end(), y);
            std::swap(*std::prev(it), y);
        }
        bottom[k] = y;

        while (!pw.rows.empty() && pw.rows.back().empty()) pw.rows.pop_back();
        while (!qw.rows.empty() && qw.rows.back().empty()) qw.rows.pop_back();
    }

    BiArray out{std::move(top), std::move(bottom), ArrayOrder::Antilex};
    validate_array(out);
    return out;
}

}  // namespace rskflags
