#include "rskflags/flag.hpp"

#include <algorithm>

#include "json.hpp"
#include "rskflags/errors.hpp"

namespace rskflags {

Composition flag_type(const Flag& f) {
    Composition mu;
    int prev = 0;
    for (const auto& step : f.steps) {
        mu.push_back(step.rows - prev);
        prev = step.rows;
    }
    return mu;
}

void validate_flag(const Flag& f) {
    if (f.steps.empty()) throw DimensionMismatch("flag has no steps");
    int d = f.steps.back().cols;
    int prev_dim = 0;
    for (size_t i = 0; i < f.steps.size(); ++i) {
        const MatFp& step = f.steps[i];
        if (step.cols != d) throw DimensionMismatch("ambient dimensions differ between steps");
        if (step.rows <= prev_dim) throw DimensionMismatch("dimension jumps must be positive");
        if (rank_of(f.field, step) != step.rows) throw DimensionMismatch("step basis is not independent");
        if (i > 0 && !rows_contained(f.field, f.steps[i - 1], step))
            throw DimensionMismatch("steps are not nested");
        prev_dim = step.rows;
    }
    if (f.steps.back().rows != d) throw DimensionMismatch("last step must be the full space");
}

bool is_x_stable(const NilpotentOperator& x, const Flag& f) {
    if (f.ambient_dim() != x.dim) throw DimensionMismatch("flag and operator dimensions differ");
    for (size_t i = 0; i < f.steps.size(); ++i) {
        MatFp image = image_of_rows(x.field, f.steps[i], x.matrix);
        if (i == 0) {
            if (image.rows != 0) return false;
        } else if (!rows_contained(x.field, image, f.steps[i - 1])) {
            return false;
        }
    }
    return true;
}

Partition restriction_jordan_type(const NilpotentOperator& x, const MatFp& w) {
    if (w.rows == 0) return {};
    if (w.cols != x.dim) throw DimensionMismatch("subspace lives in the wrong space");
    MatFp basis = w;
    auto pivots = rref(x.field, basis);
    if (static_cast<int>(pivots.size()) != w.rows) throw DimensionMismatch("basis rows are dependent");
    return jordan_type_of(x.field, restrict_operator(x.field, x.matrix, basis, pivots));
}

Tableau tableau_of_flag(const NilpotentOperator& x, const Flag& f) {
    validate_flag(f);
    if (!is_x_stable(x, f)) throw NotStable("flag is not stable under the operator");
    Tableau t;
    Partition prev;
    for (int i = 0; i < f.num_steps(); ++i) {
        Partition cur = restriction_jordan_type(x, f.steps[static_cast<size_t>(i)]);
        for (size_t r = 0; r < cur.size(); ++r) {
            int before = r < prev.size() ? prev[r] : 0;
            int grown = cur[r] - before;
            if (grown < 0 || grown > 1)
                throw ShapeConflict("restriction types do not nest one box per row");
            if (grown == 1) {
                if (r == t.rows.size()) t.rows.emplace_back();
                t.rows[r].push_back(i + 1);
            }
        }
        if (weight(cur) - weight(prev) != f.steps[static_cast<size_t>(i)].rows -
                                              (i > 0 ? f.steps[static_cast<size_t>(i - 1)].rows : 0))
            throw ShapeConflict("restriction types do not account for the dimension jump");
        prev = std::move(cur);
    }
    return t;
}

RelPosMatrix relative_position(const Flag& f, const Flag& g) {
    if (!(f.field == g.field)) throw DimensionMismatch("flags live over different fields");
    if (f.ambient_dim() != g.ambient_dim()) throw DimensionMismatch("ambient dimensions differ");
    const PrimeField& F = f.field;
    int n = f.num_steps(), m = g.num_steps();

    // D[c][r] = dim(F_c & G_r), with the zero subspace at index 0
    std::vector<std::vector<int>> D(static_cast<size_t>(n) + 1,
                                    std::vector<int>(static_cast<size_t>(m) + 1, 0));
    for (int c = 1; c <= n; ++c)
        for (int r = 1; r <= m; ++r)
            D[c][r] = dim_intersect(F, f.steps[static_cast<size_t>(c - 1)],
                                    g.steps[static_cast<size_t>(r - 1)]);

    RelPosMatrix out;
    out.entries.assign(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(n), 0));
    for (int r = 1; r <= m; ++r)
        for (int c = 1; c <= n; ++c)
            out.entries[r - 1][c - 1] = D[c][r] - D[c][r - 1] - D[c - 1][r] + D[c - 1][r - 1];
    return out;
}

Flag forget(const Flag& f, const Composition& mu) {
    validate_flag(f);
    Composition type = flag_type(f);
    if (!std::all_of(type.begin(), type.end(), [](int s) { return s == 1; }))
        throw SizeMismatch("only complete flags can be coarsened");
    if (!is_composition(mu) || weight(mu) != f.ambient_dim())
        throw SizeMismatch("coarsening type must be a composition of the dimension");
    Flag out{f.field, {}};
    for (int idx : partial_sums(mu)) out.steps.push_back(f.steps[static_cast<size_t>(idx - 1)]);
    return out;
}

Flag flag_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    PrimeField field(j.at("p").get<uint64_t>());
    Flag f{field, {}};
    for (const auto& step : j.at("steps")) {
        std::vector<std::vector<uint64_t>> rows = step.get<std::vector<std::vector<uint64_t>>>();
        int r = static_cast<int>(rows.size());
        int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
        MatFp m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
                throw ParseError("ragged basis matrix");
            for (int k = 0; k < c; ++k) m.at(i, k) = rows[static_cast<size_t>(i)][static_cast<size_t>(k)] % field.p;
        }
        f.steps.push_back(row_space(field, m));
    }
    validate_flag(f);
    if (j.contains("type") && j.at("type").get<Composition>() != flag_type(f))
        throw ParseError("declared type does not match the steps");
    return f;
}

std::string flag_to_json(const Flag& f) {
    nlohmann::json j;
    j["p"] = f.field.p;
    j["type"] = flag_type(f);
    auto steps = nlohmann::json::array();
    for (const auto& step : f.steps) {
        auto rows = nlohmann::json::array();
        for (int i = 0; i < step.rows; ++i) {
            auto row = nlohmann::json::array();
            for (int c = 0; c < step.cols; ++c) row.push_back(step.at(i, c));
            rows.push_back(row);
        }
        steps.push_back(rows);
    }
    j["steps"] = steps;
    return j.dump();
}

}  // namespace rskflags
