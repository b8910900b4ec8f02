#include "rskflags/sampler.hpp"

#include "rskflags/errors.hpp"
#include "rskflags/standardize.hpp"

namespace rskflags {

uint64_t fnv1a(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

uint64_t derive_seed(uint64_t master, uint64_t case_hash, uint64_t index) {
    Rng mixer(master ^ (case_hash * 0x9e3779b97f4a7c15ull) ^ (index + 1));
    return mixer.next();
}

namespace {

std::vector<uint64_t> random_vector_in(const PrimeField& F, const MatFp& basis, Rng& rng) {
    std::vector<uint64_t> v(static_cast<size_t>(basis.cols), 0);
    for (int i = 0; i < basis.rows; ++i) {
        uint64_t coeff = rng.below(F.p);
        if (coeff == 0) continue;
        for (int j = 0; j < basis.cols; ++j)
            v[static_cast<size_t>(j)] = F.add(v[static_cast<size_t>(j)], F.mul(coeff, basis.at(i, j)));
    }
    return v;
}

MatFp append_row(const MatFp& m, const std::vector<uint64_t>& v) {
    MatFp out(m.rows + 1, static_cast<int>(v.size()));
    std::copy(m.a.begin(), m.a.end(), out.a.begin());
    std::copy(v.begin(), v.end(), out.a.begin() + m.a.size());
    return out;
}

constexpr int kStepRetries = 256;

}  // namespace

FlagSample sample_stable_flag(const NilpotentOperator& x, const Composition& mu, Rng& rng,
                              int max_attempts) {
    if (!is_composition(mu)) throw SizeMismatch("type must be a composition");
    if (weight(mu) != x.dim) throw SizeMismatch("type weight differs from the dimension");
    const PrimeField& F = x.field;

    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        MatFp current(0, x.dim);
        std::vector<MatFp> steps;
        bool dead = false;
        for (int jump : mu) {
            MatFp allowed = preimage_of_rows(F, current, x.matrix);
            if (allowed.rows - current.rows < jump) {
                dead = true;  // this prefix cannot extend; start over
                break;
            }
            bool extended = false;
            for (int tries = 0; tries < kStepRetries && !extended; ++tries) {
                MatFp candidate = current;
                for (int k = 0; k < jump; ++k)
                    candidate = append_row(candidate, random_vector_in(F, allowed, rng));
                candidate = row_space(F, candidate);
                if (candidate.rows == current.rows + jump) {
                    current = std::move(candidate);
                    extended = true;
                }
            }
            if (!extended) {
                dead = true;
                break;
            }
            steps.push_back(current);
        }
        if (!dead) {
            Flag f{F, std::move(steps)};
            return {std::move(f), attempt};
        }
    }
    throw SamplingExhausted("no stable flag of the requested type found within " +
                            std::to_string(max_attempts) + " attempts");
}

namespace {

// Complete stable flag with tableau tstd, built from the top: the hyperplane
// below an i-dimensional stage whose restriction loses the box of entry i at
// column c is exactly one containing im(x) + ker(x^(c-1)) but not ker(x^c).
// That set is a linear space of functionals minus a linear subspace, so each
// level is sampled exactly; no level can be empty for a standard tableau.
std::vector<MatFp> sample_complete_stages(const NilpotentOperator& x, const Tableau& tstd,
                                          Rng& rng) {
    const PrimeField& F = x.field;
    int d = x.dim;
    std::vector<int> entry_col(static_cast<size_t>(d), 0);
    for (const auto& row : tstd.rows)
        for (size_t c = 0; c < row.size(); ++c)
            entry_col[static_cast<size_t>(row[c] - 1)] = static_cast<int>(c) + 1;

    std::vector<MatFp> stages(static_cast<size_t>(d));  // stages[i-1] has i rows, ambient coords
    MatFp basis = MatFp::identity(d);                   // rows span the current stage
    MatFp local = x.matrix;                             // column action in basis coordinates
    for (int i = d; i >= 1; --i) {
        stages[static_cast<size_t>(i - 1)] = row_space(F, basis);
        if (i == 1) break;
        int c = entry_col[static_cast<size_t>(i - 1)];

        MatFp image = row_space(F, transpose(local));
        MatFp mandatory = row_space(F, vstack(image, null_space(F, power(F, local, c - 1))));
        MatFp excluded = null_space(F, power(F, local, c));
        MatFp functionals = null_space(F, mandatory);
        MatFp too_small = null_space(F, row_space(F, vstack(mandatory, excluded)));
        if (functionals.rows <= too_small.rows)
            throw ShapeConflict("no hyperplane removes the requested box");
        MatFp too_small_rref = too_small;
        auto small_pivots = rref(F, too_small_rref);

        std::vector<uint64_t> phi;
        for (int tries = 0; tries < kStepRetries; ++tries) {
            phi = random_vector_in(F, functionals, rng);
            if (!in_row_space(F, too_small_rref, small_pivots, phi)) break;
            phi.clear();
        }
        if (phi.empty()) throw SamplingExhausted("functional draw kept hitting the excluded set");

        MatFp phi_mat(1, static_cast<int>(phi.size()));
        for (size_t j = 0; j < phi.size(); ++j) phi_mat.at(0, static_cast<int>(j)) = phi[j];
        MatFp hyper = null_space(F, phi_mat);
        auto hyper_pivots = rref(F, hyper);

        local = restrict_operator(F, local, hyper, hyper_pivots);
        basis = mul(F, hyper, basis);
    }
    return stages;
}

}  // namespace

FlagSample sample_flag_in_component(const NilpotentOperator& x, const Tableau& t, Rng& rng,
                                    int max_attempts) {
    if (!is_semistandard_row_strict(t)) throw NotSemistandard("tableau is not row-strict");
    if (shape(t) != x.jordan_type) throw ShapeMismatch("tableau shape differs from the Jordan type");
    if (x.dim == 0) throw SizeMismatch("zero-dimensional flags are not represented");
    const PrimeField& F = x.field;
    Composition mu = content(t);
    Tableau tstd = standardize_tableau_row_strict(t);

    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        Flag complete{F, sample_complete_stages(x, tstd, rng)};
        Flag f = forget(complete, mu);
        if (tableau_of_flag(x, f) == t) return {std::move(f), attempt};
    }
    throw SamplingExhausted("no flag with the requested tableau found within " +
                            std::to_string(max_attempts) + " attempts");
}

}  // namespace rskflags
