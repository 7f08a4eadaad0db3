#ifndef PIRJOINT_VERIFY_HPP
#define PIRJOINT_VERIFY_HPP

#include <optional>

#include "pirjoint/scheme.hpp"

namespace pirjoint {

struct PrivacyReport {
    bool ok = false;
    /// per_db_distributions[db-1][k-1]: sorted multiset of query indices over
    /// all f. Privacy holds iff, per database, the multisets agree across k.
    std::vector<std::vector<std::vector<int>>> per_db_distributions;
    struct Violation {
        int db = 0;
        int k = 0;
        int k_prime = 0;
    };
    std::optional<Violation> first_violation;
};

/// Exhaustive over the finite randomness space; exact multiset comparison,
/// no sampling anywhere.
PrivacyReport check_privacy(const Scheme& s);

struct CorrectnessReport {
    bool ok = false;
    int pairs_checked = 0;  // (k*, f) pairs
    int trials = 0;         // random message tuples per pair
    std::vector<std::pair<int, int>> structural_failures;  // (k*, f) with uncovered coordinates
    struct ValueFailure {
        int k = 0;
        int f = 0;
        int trial = 0;
    };
    std::vector<ValueFailure> value_failures;
};

/// For every (k*, f): a message-independent row-space check once, plus
/// `trials` random message tuples simulated and compared exactly.
CorrectnessReport check_correctness(const Scheme& s, int trials, Rng& rng);

/// Exact separate-coding capacity (1 + T/N + ... + (T/N)^(K-1))^(-1),
/// exactly K terms.
Rational capacity_separate(int K, int N, int T);

struct BarrierReport {
    Rational rate;
    Rational c_perp;
    Rational margin;  // rate - c_perp
    bool broken = false;
};

/// Compares the scheme's exact rate against the separate-coding capacity of
/// its own (K, N, T) triple.
BarrierReport barrier_report(const Scheme& s);

/// Independent MDS oracle: enumerates every message tuple and checks the
/// storage map of each T-subset is injective. Returns nullopt when q^(K*L)
/// exceeds the exhaustive budget (2^20).
std::optional<bool> oracle_mds_injectivity(const JointCode& code);

/// Answers-level privacy oracle: rebuilds the per-database query-index
/// distributions from full transcripts over all (k*, f) and compares them.
bool oracle_privacy_transcript(const Scheme& s);

struct SweepRow {
    std::string param;  // e.g. "N=4" or "K=2, m=2"
    std::uint32_t q = 0;
    std::optional<BarrierReport> barrier;
    bool mds_ok = false;
    bool privacy_ok = false;
    bool correctness_ok = false;
    long attempts = 0;  // expanded-2n2 search attempts, 0 otherwise
    std::string error;  // construction failure, if any

    bool row_ok() const {
        return error.empty() && mds_ok && privacy_ok && correctness_ok && barrier &&
               barrier->broken;
    }
};

/// Builds and fully verifies one scheme per parameter point. Points are
/// (N, 1) for joint-2n2, (K, 1) for joint-parity, (K, m) for
/// expanded-parity and (N0, m) for expanded-2n2.
std::vector<SweepRow> barrier_sweep(Family family,
                                    const std::vector<std::pair<int, int>>& points, int trials,
                                    std::uint64_t seed);

}  // namespace pirjoint

#endif
