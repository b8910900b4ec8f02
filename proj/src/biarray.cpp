#include "rskflags/biarray.hpp"

#include <algorithm>
#include <numeric>

#include "rskflags/errors.hpp"

namespace rskflags {

int RelPosMatrix::total() const {
    int s = 0;
    for (const auto& row : entries) s += std::accumulate(row.begin(), row.end(), 0);
    return s;
}

Composition row_sums(const RelPosMatrix& m) {
    Composition nu;
    nu.reserve(m.entries.size());
    for (const auto& row : m.entries)
        nu.push_back(std::accumulate(row.begin(), row.end(), 0));
    return nu;
}

Composition col_sums(const RelPosMatrix& m) {
    Composition mu(static_cast<size_t>(m.num_cols()), 0);
    for (const auto& row : m.entries)
        for (size_t j = 0; j < row.size(); ++j) mu[j] += row[j];
    return mu;
}

void validate_matrix(const RelPosMatrix& m) {
    size_t cols = m.entries.empty() ? 0 : m.entries[0].size();
    for (const auto& row : m.entries) {
        if (row.size() != cols) throw DimensionMismatch("ragged matrix");
        for (int e : row)
            if (e < 0) throw DimensionMismatch("negative matrix entry");
    }
    if (m.num_rows() > 0 && cols == 0) throw DimensionMismatch("rows without columns");
    for (int s : row_sums(m))
        if (s < 1) throw DimensionMismatch("zero row sum");
    for (int s : col_sums(m))
        if (s < 1) throw DimensionMismatch("zero column sum");
}

bool satisfies_order(const BiArray& a) {
    for (size_t k = 1; k < a.top.size(); ++k) {
        if (a.top[k] < a.top[k - 1]) return false;
        if (a.top[k] == a.top[k - 1]) {
            if (a.order == ArrayOrder::Antilex && a.bottom[k] > a.bottom[k - 1]) return false;
            if (a.order == ArrayOrder::Lex && a.bottom[k] < a.bottom[k - 1]) return false;
        }
    }
    return true;
}

void validate_array(const BiArray& a) {
    if (a.top.size() != a.bottom.size()) throw SizeMismatch("top/bottom lengths differ");
    for (size_t k = 0; k < a.top.size(); ++k)
        if (a.top[k] < 1 || a.bottom[k] < 1) throw SizeMismatch("non-positive array entry");
    if (!satisfies_order(a)) {
        if (a.order == ArrayOrder::Antilex)
            throw NotAntilexOrdered("array violates the antilexicographic order");
        throw NotLexOrdered("array violates the lexicographic order");
    }
}

BiArray sorted_to_order(std::vector<std::pair<int, int>> pairs, ArrayOrder order) {
    if (order == ArrayOrder::Antilex) {
        std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
            return x.first != y.first ? x.first < y.first : x.second > y.second;
        });
    } else {
        std::sort(pairs.begin(), pairs.end());
    }
    BiArray a;
    a.order = order;
    a.top.reserve(pairs.size());
    a.bottom.reserve(pairs.size());
    for (const auto& [u, v] : pairs) {
        a.top.push_back(u);
        a.bottom.push_back(v);
    }
    return a;
}

BiArray matrix_to_array(const RelPosMatrix& m, ArrayOrder order) {
    validate_matrix(m);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<size_t>(m.total()));
    for (int r = 0; r < m.num_rows(); ++r)
        for (int c = 0; c < m.num_cols(); ++c)
            for (int k = 0; k < m.entries[r][c]; ++k) pairs.emplace_back(r + 1, c + 1);
    return sorted_to_order(std::move(pairs), order);
}

RelPosMatrix array_to_matrix(const BiArray& a) {
    validate_array(a);
    int rows = a.top.empty() ? 0 : *std::max_element(a.top.begin(), a.top.end());
    int cols = a.bottom.empty() ? 0 : *std::max_element(a.bottom.begin(), a.bottom.end());
    RelPosMatrix m;
    m.entries.assign(static_cast<size_t>(rows), std::vector<int>(static_cast<size_t>(cols), 0));
    for (size_t k = 0; k < a.top.size(); ++k) m.entries[a.top[k] - 1][a.bottom[k] - 1] += 1;
    return m;
}

namespace {

void fill_row(const Composition& mu, const Composition& nu, size_t r, Composition& col_left,
              RelPosMatrix& work, std::vector<RelPosMatrix>& out) {
    if (r == nu.size()) {
        if (std::all_of(col_left.begin(), col_left.end(), [](int x) { return x == 0; }))
            out.push_back(work);
        return;
    }
    // distribute nu[r] units over the columns, bounded by what each column still takes
    size_t n = mu.size();
    std::vector<int> row(n, 0);
    auto rec = [&](auto&& self, size_t c, int left) -> void {
        if (c == n) {
            if (left == 0) {
                work.entries[r] = row;
                fill_row(mu, nu, r + 1, col_left, work, out);
            }
            return;
        }
        int hi = std::min(left, col_left[c]);
        for (int v = 0; v <= hi; ++v) {
            row[c] = v;
            col_left[c] -= v;
            self(self, c + 1, left - v);
            col_left[c] += v;
        }
        row[c] = 0;
    };
    rec(rec, 0, nu[r]);
}

}  // namespace

std::vector<RelPosMatrix> enumerate_matrices(const Composition& mu, const Composition& nu) {
    if (weight(mu) != weight(nu)) throw SizeMismatch("margin totals differ");
    std::vector<RelPosMatrix> out;
    if (nu.empty()) {
        out.push_back(RelPosMatrix{});
        return out;
    }
    RelPosMatrix work;
    work.entries.assign(nu.size(), std::vector<int>(mu.size(), 0));
    Composition col_left = mu;
    fill_row(mu, nu, 0, col_left, work, out);
    return out;
}

BiArray identity_array(int d, ArrayOrder order) {
    BiArray a;
    a.order = order;
    a.top.resize(static_cast<size_t>(d));
    std::iota(a.top.begin(), a.top.end(), 1);
    a.bottom = a.top;
    return a;
}

bool is_permutation_array(const BiArray& a) {
    int d = a.size();
    if (static_cast<int>(a.bottom.size()) != d) return false;
    std::vector<bool> seen(static_cast<size_t>(d) + 1, false);
    for (int k = 0; k < d; ++k) {
        if (a.top[k] != k + 1) return false;
        int v = a.bottom[k];
        if (v < 1 || v > d || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

}  // namespace rskflags
