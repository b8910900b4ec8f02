#pragma once

#include <map>
#include <string>

#include "rskflags/biarray.hpp"
#include "rskflags/partition.hpp"
#include "rskflags/tableau.hpp"

namespace rskflags {

struct RunOptions {
    int trials = 100;
    uint64_t prime = 10007;
    uint64_t seed = 42;
    int max_attempts = 10000;
    int threads = 0;        // 0: RSKFLAGS_THREADS env var, then all cores
    bool parallel = true;   // serial path kept as the reference implementation
    double agreement_threshold = 0.9;
};

/// Outcome of one randomized case. The verdict compares the mode of the
/// sampled matrices against the predicted one; the agreement fraction is
/// reported separately since individual samples may miss the generic locus.
struct VerificationReport {
    std::string kind;
    Partition lambda;
    Composition mu, nu;
    Tableau t, s;
    uint64_t prime = 0;
    uint64_t seed = 0;
    int trials = 0;
    int agreement_count = 0;
    RelPosMatrix mode_matrix;
    RelPosMatrix expected_matrix;
    bool pass = false;
    bool agreement_ok = false;
    std::map<int, int> attempts_histogram;  // per-sample construction attempts
};

struct SweepSummary {
    std::string kind;
    long long cases_checked = 0;
    long long failures = 0;
    std::vector<std::string> failure_notes;  // first few, for diagnosis
};

// The unique matrix whose insertion/recording pair is (t, s): reverse bumping
// then array-to-matrix. Throws ShapeMismatch / NotSemistandard.
RelPosMatrix rsk_matrix_of_tableaux(const Tableau& t, const Tableau& s);

// Samples `trials` independent pairs (F in the fiber of t, G in the fiber of
// s) for one nilpotent operator of type lambda and compares each relative
// position with rsk_matrix_of_tableaux(t, s).
VerificationReport verify_main_theorem(const Partition& lambda, const Composition& mu,
                                       const Composition& nu, const Tableau& t, const Tableau& s,
                                       const RunOptions& opts);

// All pairs of standard tableaux of shape lambda with complete flags.
std::vector<VerificationReport> verify_steinberg(const Partition& lambda, const RunOptions& opts);

// Checks that standardization commutes with the correspondence on every
// matrix with margins of weight <= d_max (all compositions; max_parts = 0
// means unbounded).
SweepSummary verify_commutation_row_strict(int d_max, int max_parts, bool parallel, int threads = 0);
SweepSummary verify_commutation_classical(int d_max, int max_parts, bool parallel, int threads = 0);

// Exhaustive roundtrips both ways plus the counting identity
// |M^{mu,nu}| = sum over shapes of #tableaux(shape,mu) * #tableaux(shape,nu).
SweepSummary verify_bijection(int d_max, int max_parts, bool parallel, int threads = 0);

std::string report_to_json(const VerificationReport& r);
std::string summary_to_json(const SweepSummary& s);
std::string report_human_line(const VerificationReport& r);

// Thread budget: explicit request, else RSKFLAGS_THREADS, else hardware.
int effective_threads(int requested);

}  // namespace rskflags
