#include "rskflags/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"
#include "rskflags/errors.hpp"
#include "rskflags/flag.hpp"
#include "rskflags/rsk.hpp"
#include "rskflags/sampler.hpp"
#include "rskflags/standardize.hpp"
#include "rskflags/text_io.hpp"

namespace rskflags {

int effective_threads(int requested) {
    int n = requested;
    if (n <= 0) {
        if (const char* env = std::getenv("RSKFLAGS_THREADS")) n = std::atoi(env);
    }
#ifdef _OPENMP
    if (n <= 0) n = omp_get_max_threads();
    return std::clamp(n, 1, 1024);
#else
    (void)n;
    return 1;
#endif
}

RelPosMatrix rsk_matrix_of_tableaux(const Tableau& t, const Tableau& s) {
    return array_to_matrix(rsk_inverse_row_strict(t, s));
}

namespace {

std::string case_id(const std::string& kind, const Partition& lambda, const Composition& mu,
                    const Composition& nu, const Tableau& t, const Tableau& s, uint64_t prime) {
    return kind + "|" + format_sequence(lambda) + "|" + format_sequence(mu) + "|" +
           format_sequence(nu) + "|" + format_tableau(t) + "|" + format_tableau(s) + "|" +
           std::to_string(prime);
}

struct TrialResult {
    RelPosMatrix matrix;
    int attempts_f = 0;
    int attempts_g = 0;
};

}  // namespace

VerificationReport verify_main_theorem(const Partition& lambda, const Composition& mu,
                                       const Composition& nu, const Tableau& t, const Tableau& s,
                                       const RunOptions& opts) {
    if (shape(t) != lambda || shape(s) != lambda)
        throw ShapeMismatch("tableau shapes differ from lambda");
    if (content(t) != mu) throw SizeMismatch("content of the first tableau differs from mu");
    if (content(s) != nu) throw SizeMismatch("content of the second tableau differs from nu");

    VerificationReport rep;
    rep.kind = "theorem";
    rep.lambda = lambda;
    rep.mu = mu;
    rep.nu = nu;
    rep.t = t;
    rep.s = s;
    rep.prime = opts.prime;
    rep.seed = opts.seed;
    rep.trials = opts.trials;
    rep.expected_matrix = rsk_matrix_of_tableaux(t, s);

    PrimeField field(opts.prime);
    NilpotentOperator x = make_nilpotent(lambda, field);
    uint64_t hash = fnv1a(case_id(rep.kind, lambda, mu, nu, t, s, opts.prime));

    std::vector<TrialResult> results(static_cast<size_t>(opts.trials));
    std::vector<std::string> errors(static_cast<size_t>(opts.trials));
    // exceptions must not unwind across the parallel region; collect and rethrow
    auto run_trial = [&](int k) {
        try {
            Rng rng(derive_seed(opts.seed, hash, static_cast<uint64_t>(k)));
            FlagSample fs = sample_flag_in_component(x, t, rng, opts.max_attempts);
            FlagSample gs = sample_flag_in_component(x, s, rng, opts.max_attempts);
            results[static_cast<size_t>(k)] =
                TrialResult{relative_position(fs.flag, gs.flag), fs.attempts, gs.attempts};
        } catch (const std::exception& e) {
            errors[static_cast<size_t>(k)] = e.what();
        }
    };

    if (opts.parallel) {
        int nthreads = effective_threads(opts.threads);
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
        for (int k = 0; k < opts.trials; ++k) run_trial(k);
    } else {
        for (int k = 0; k < opts.trials; ++k) run_trial(k);
    }
    for (const auto& err : errors)
        if (!err.empty())
            throw SamplingExhausted("case T=" + format_tableau(t) + " S=" + format_tableau(s) +
                                    ": " + err);

    std::map<RelPosMatrix, int> counts;
    for (const auto& r : results) {
        counts[r.matrix] += 1;
        rep.attempts_histogram[r.attempts_f] += 1;
        rep.attempts_histogram[r.attempts_g] += 1;
    }
    // mode; ties resolve to the smaller matrix so reports are reproducible
    int best = 0;
    for (const auto& [m, c] : counts) {
        if (c > best) {
            best = c;
            rep.mode_matrix = m;
        }
    }
    auto it = counts.find(rep.expected_matrix);
    rep.agreement_count = it == counts.end() ? 0 : it->second;
    rep.pass = rep.mode_matrix == rep.expected_matrix;
    rep.agreement_ok = opts.trials > 0 && static_cast<double>(rep.agreement_count) >=
                                              opts.agreement_threshold * opts.trials;
    return rep;
}

std::vector<VerificationReport> verify_steinberg(const Partition& lambda, const RunOptions& opts) {
    int d = weight(lambda);
    Composition ones(static_cast<size_t>(d), 1);
    std::vector<Tableau> tabs = standard_tableaux(lambda);
    std::vector<VerificationReport> reports;
    reports.reserve(tabs.size() * tabs.size());
    for (const Tableau& t : tabs)
        for (const Tableau& s : tabs) {
            VerificationReport rep = verify_main_theorem(lambda, ones, ones, t, s, opts);
            rep.kind = "steinberg";
            reports.push_back(std::move(rep));
        }
    return reports;
}

namespace {

struct MarginPair {
    Composition mu, nu;
};

std::vector<MarginPair> margin_pairs(int d_max, int max_parts) {
    std::vector<MarginPair> out;
    for (int d = 0; d <= d_max; ++d) {
        auto comps = compositions_of(d, max_parts);
        for (const auto& mu : comps)
            for (const auto& nu : comps) out.push_back({mu, nu});
    }
    return out;
}

void note_failure(SweepSummary& sum, const std::string& note) {
    if (sum.failure_notes.size() < 20) sum.failure_notes.push_back(note);
}

template <typename CaseFn>
SweepSummary run_sweep(const std::string& kind, int d_max, int max_parts, bool parallel,
                       int threads, CaseFn check_pair) {
    SweepSummary sum;
    sum.kind = kind;
    std::vector<MarginPair> pairs = margin_pairs(d_max, max_parts);
    int n = static_cast<int>(pairs.size());
    std::vector<long long> checked(static_cast<size_t>(n), 0);
    std::vector<long long> failed(static_cast<size_t>(n), 0);
    std::vector<std::string> notes(static_cast<size_t>(n));

    auto run_one = [&](int i) {
        try {
            check_pair(pairs[static_cast<size_t>(i)], checked[static_cast<size_t>(i)],
                       failed[static_cast<size_t>(i)], notes[static_cast<size_t>(i)]);
        } catch (const std::exception& e) {
            failed[static_cast<size_t>(i)] += 1;
            notes[static_cast<size_t>(i)] = std::string("exception: ") + e.what();
        }
    };
    if (parallel) {
        int nthreads = effective_threads(threads);
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
        for (int i = 0; i < n; ++i) run_one(i);
    } else {
        for (int i = 0; i < n; ++i) run_one(i);
    }
    for (int i = 0; i < n; ++i) {
        sum.cases_checked += checked[static_cast<size_t>(i)];
        sum.failures += failed[static_cast<size_t>(i)];
        if (!notes[static_cast<size_t>(i)].empty()) note_failure(sum, notes[static_cast<size_t>(i)]);
    }
    return sum;
}

std::string pair_label(const MarginPair& mp) {
    return "mu=" + format_sequence(mp.mu) + " nu=" + format_sequence(mp.nu);
}

}  // namespace

SweepSummary verify_commutation_row_strict(int d_max, int max_parts, bool parallel, int threads) {
    return run_sweep(
        "commutation-row-strict", d_max, max_parts, parallel, threads,
        [](const MarginPair& mp, long long& checked, long long& failed, std::string& note) {
            for (const RelPosMatrix& m : enumerate_matrices(mp.mu, mp.nu)) {
                BiArray a = matrix_to_array(m, ArrayOrder::Antilex);
                auto [p, q] = rsk_row_strict(a);
                auto [ps, qs] = rsk_row_strict(standardize_array_antilex(a));
                ++checked;
                if (!(ps == standardize_tableau_row_strict(p) &&
                      qs == standardize_tableau_row_strict(q))) {
                    ++failed;
                    if (note.empty()) note = "square fails at " + pair_label(mp) + " array " + format_array(a);
                }
            }
        });
}

SweepSummary verify_commutation_classical(int d_max, int max_parts, bool parallel, int threads) {
    return run_sweep(
        "commutation-classical", d_max, max_parts, parallel, threads,
        [](const MarginPair& mp, long long& checked, long long& failed, std::string& note) {
            for (const RelPosMatrix& m : enumerate_matrices(mp.mu, mp.nu)) {
                BiArray a = matrix_to_array(m, ArrayOrder::Lex);
                auto [p, q] = rsk_classical(a);
                auto [ps, qs] = rsk_classical(standardize_array_lex(a));
                ++checked;
                if (!(ps == standardize_tableau_classical(p) &&
                      qs == standardize_tableau_classical(q))) {
                    ++failed;
                    if (note.empty()) note = "square fails at " + pair_label(mp) + " array " + format_array(a);
                }
            }
        });
}

SweepSummary verify_bijection(int d_max, int max_parts, bool parallel, int threads) {
    return run_sweep(
        "bijection", d_max, max_parts, parallel, threads,
        [](const MarginPair& mp, long long& checked, long long& failed, std::string& note) {
            auto fail = [&](const std::string& what) {
                ++failed;
                if (note.empty()) note = what + " at " + pair_label(mp);
            };
            int d = weight(mp.mu);
            std::vector<RelPosMatrix> matrices = enumerate_matrices(mp.mu, mp.nu);
            std::set<std::pair<Tableau, Tableau>> images;
            for (const RelPosMatrix& m : matrices) {
                BiArray a = matrix_to_array(m, ArrayOrder::Antilex);
                auto [p, q] = rsk_row_strict(a);
                ++checked;
                if (!is_semistandard_row_strict(p) || !is_semistandard_row_strict(q) ||
                    shape(p) != shape(q)) {
                    fail("malformed image pair");
                    continue;
                }
                if (!p.empty() && (content(p) != mp.mu || content(q) != mp.nu)) {
                    fail("image contents differ from the margins");
                    continue;
                }
                if (!(rsk_inverse_row_strict(p, q) == a)) fail("reverse bumping misses the array");
                if (!images.emplace(p, q).second) fail("two matrices share an image pair");
            }
            // independent enumeration of the codomain
            long long pair_count = 0;
            for (const Partition& lambda : partitions_of(d)) {
                auto ts = enumerate_semistandard_row_strict(lambda, mp.mu);
                auto ss = enumerate_semistandard_row_strict(lambda, mp.nu);
                pair_count += static_cast<long long>(ts.size()) * static_cast<long long>(ss.size());
                for (const Tableau& t : ts)
                    for (const Tableau& s : ss) {
                        ++checked;
                        if (!images.count({t, s})) fail("pair not reached by any matrix");
                        BiArray a = rsk_inverse_row_strict(t, s);
                        auto [p2, q2] = rsk_row_strict(a);
                        if (!(p2 == t && q2 == s)) fail("forward bumping misses the pair");
                    }
            }
            if (pair_count != static_cast<long long>(matrices.size()))
                fail("counting identity fails: " + std::to_string(matrices.size()) + " matrices vs " +
                     std::to_string(pair_count) + " pairs");
        });
}

std::string report_to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["kind"] = r.kind;
    j["lambda"] = r.lambda;
    j["mu"] = r.mu;
    j["nu"] = r.nu;
    j["T"] = format_tableau(r.t);
    j["S"] = format_tableau(r.s);
    j["p"] = r.prime;
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    j["agreement"] = r.agreement_count;
    j["mode_matrix"] = r.mode_matrix.entries;
    j["expected_matrix"] = r.expected_matrix.entries;
    j["verdict"] = r.pass ? "pass" : "fail";
    j["agreement_ok"] = r.agreement_ok;
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [attempts, count] : r.attempts_histogram)
        hist[std::to_string(attempts)] = count;
    j["attempts"] = hist;
    return j.dump();
}

std::string summary_to_json(const SweepSummary& s) {
    nlohmann::json j;
    j["kind"] = s.kind;
    j["cases"] = s.cases_checked;
    j["failures"] = s.failures;
    j["failure_notes"] = s.failure_notes;
    return j.dump();
}

std::string report_human_line(const VerificationReport& r) {
    std::string out = r.pass ? "pass" : "FAIL";
    out += "  lambda=" + format_sequence(r.lambda) + " mu=" + format_sequence(r.mu) +
           " nu=" + format_sequence(r.nu) + " T=" + format_tableau(r.t) +
           " S=" + format_tableau(r.s) + "  agreement " + std::to_string(r.agreement_count) + "/" +
           std::to_string(r.trials);
    return out;
}

}  // namespace rskflags
