#include "pirjoint/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace pirjoint {

PrivacyReport check_privacy(const Scheme& s) {
    const auto& p = s.code.params;
    PrivacyReport report;
    report.ok = true;
    report.per_db_distributions.assign(p.N, {});
    for (int db = 1; db <= p.N; ++db) {
        auto& per_k = report.per_db_distributions[db - 1];
        per_k.assign(p.K, {});
        for (int k = 1; k <= p.K; ++k) {
            for (int fi = 0; fi < s.f_size; ++fi)
                per_k[k - 1].push_back(s.query_table[k - 1][fi][db - 1]);
            std::sort(per_k[k - 1].begin(), per_k[k - 1].end());
        }
        for (int k = 2; k <= p.K; ++k) {
            if (per_k[k - 1] != per_k[0]) {
                report.ok = false;
                if (!report.first_violation)
                    report.first_violation = PrivacyReport::Violation{db, 1, k};
            }
        }
    }
    return report;
}

CorrectnessReport check_correctness(const Scheme& s, int trials, Rng& rng) {
    if (trials < 1) throw ParamError("check_correctness: trials must be >= 1");
    const auto& p = s.code.params;
    CorrectnessReport report;
    report.ok = true;
    report.trials = trials;
    for (int k = 1; k <= p.K; ++k) {
        for (int fi = 0; fi < s.f_size; ++fi) {
            const int f = s.f_base + fi;
            ++report.pairs_checked;
            // Structural check: every desired coordinate must lie in the row
            // space regardless of message values.
            bool structural_ok = true;
            try {
                reconstruct(s, k, f, std::vector<Elem>(p.N, 0));
            } catch (const ReconstructionError&) {
                structural_ok = false;
                report.ok = false;
                report.structural_failures.emplace_back(k, f);
            }
            if (!structural_ok) continue;
            for (int trial = 0; trial < trials; ++trial) {
                std::vector<std::vector<Elem>> messages(p.K, std::vector<Elem>(p.L));
                for (auto& msg : messages)
                    for (auto& sym : msg)
                        sym = static_cast<Elem>(rng.uniform_below(s.code.field.q()));
                const auto storage = encode(s.code, messages);
                const auto queries = gen_queries(s, k, f);
                std::vector<Elem> answers(p.N);
                for (int db = 0; db < p.N; ++db)
                    answers[db] = answer(storage[db], queries[db]);
                if (reconstruct(s, k, f, answers) != messages[k - 1]) {
                    report.ok = false;
                    report.value_failures.push_back({k, f, trial});
                }
            }
        }
    }
    return report;
}

Rational capacity_separate(int K, int N, int T) {
    if (K < 1 || T < 1 || N < 1 || T > N) throw ParamError("capacity_separate: bad (K, N, T)");
    const Rational ratio(T, N);
    Rational sum(0);
    for (int i = 0; i < K; ++i) sum = sum + ratio.pow(static_cast<unsigned>(i));
    return sum.inverse();
}

BarrierReport barrier_report(const Scheme& s) {
    BarrierReport report;
    report.rate = retrieval_rate(s);
    report.c_perp = capacity_separate(s.code.params.K, s.code.params.N, s.code.params.T);
    report.margin = report.rate - report.c_perp;
    report.broken = report.margin > Rational(0);
    return report;
}

namespace {

// Odometer over all q^len message vectors; returns false after the last one.
bool next_tuple(std::vector<Elem>& tuple, std::uint32_t q) {
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (++tuple[i] < q) return true;
        tuple[i] = 0;
    }
    return false;
}

}  // namespace

std::optional<bool> oracle_mds_injectivity(const JointCode& code) {
    const auto& p = code.params;
    const std::size_t kl = static_cast<std::size_t>(p.K) * p.L;
    const double bits = kl * std::log2(static_cast<double>(code.field.q()));
    if (bits > 20.0) return std::nullopt;

    bool ok = true;
    for_each_subset(p.N, p.T, [&](const std::vector<int>& subset) {
        if (!ok) return;
        std::vector<Mat> blocks;
        for (const int db : subset) blocks.push_back(code.generators[db - 1]);
        const Mat stack = mat_vstack(blocks);
        const bool small = bits <= 16.0;
        std::set<std::vector<Elem>> images;
        std::vector<Elem> w(kl, 0);
        do {
            const auto img = mat_vec(code.field, stack, w);
            if (small) {
                if (!images.insert(img).second) {
                    ok = false;
                    return;
                }
            } else {
                // Linear map: a nonzero message hitting the zero image breaks
                // injectivity without needing to store every image.
                const bool w_zero = std::all_of(w.begin(), w.end(), [](Elem e) { return e == 0; });
                const bool img_zero =
                    std::all_of(img.begin(), img.end(), [](Elem e) { return e == 0; });
                if (img_zero && !w_zero) {
                    ok = false;
                    return;
                }
            }
        } while (next_tuple(w, code.field.q()));
    });
    return ok;
}

bool oracle_privacy_transcript(const Scheme& s) {
    const auto& p = s.code.params;
    // Fixed message instance; privacy is about indices, not values.
    const std::vector<std::vector<Elem>> messages(p.K, std::vector<Elem>(p.L, 0));
    const auto storage = encode(s.code, messages);
    std::vector<std::vector<std::vector<int>>> dist(
        p.N, std::vector<std::vector<int>>(p.K));
    for (int k = 1; k <= p.K; ++k)
        for (int fi = 0; fi < s.f_size; ++fi) {
            const int f = s.f_base + fi;
            Transcript t;
            t.k_star = k;
            t.f = f;
            t.queries = gen_queries(s, k, f);
            for (int db = 0; db < p.N; ++db)
                t.answers.push_back(answer(storage[db], t.queries[db]));
            try {
                t.reconstructed = reconstruct(s, k, f, t.answers);
            } catch (const ReconstructionError&) {
                // A broken scheme can still be judged for privacy; the
                // distributions only need the queries.
            }
            for (int db = 0; db < p.N; ++db) dist[db][k - 1].push_back(t.queries[db]);
        }
    for (int db = 0; db < p.N; ++db)
        for (int k = 0; k < p.K; ++k) std::sort(dist[db][k].begin(), dist[db][k].end());
    for (int db = 0; db < p.N; ++db)
        for (int k = 1; k < p.K; ++k)
            if (dist[db][k] != dist[db][0]) return false;
    return true;
}

std::vector<SweepRow> barrier_sweep(Family family, const std::vector<std::pair<int, int>>& points,
                                    int trials, std::uint64_t seed) {
    std::vector<SweepRow> rows;
    const Rng master(seed);
    for (std::size_t idx = 0; idx < points.size(); ++idx) {
        const auto [a, m] = points[idx];
        SweepRow row;
        std::ostringstream name;
        switch (family) {
            case Family::Joint2N2: name << "N=" << a; break;
            case Family::JointParity: name << "K=" << a; break;
            case Family::ExpandedParity: name << "K=" << a << ", m=" << m; break;
            case Family::Expanded2N2: name << "N0=" << a << ", m=" << m; break;
            case Family::Custom: throw UnsupportedFamilyError("barrier_sweep: custom family");
        }
        row.param = name.str();
        try {
            JointCode code;
            switch (family) {
                case Family::Joint2N2: code = build_joint_2n2(a); break;
                case Family::JointParity: code = build_joint_parity(a); break;
                case Family::ExpandedParity: code = build_expanded_parity(a, m); break;
                case Family::Expanded2N2: {
                    auto res = build_expanded_2n2(a, m, master.fork(idx).seed());
                    row.attempts = res.attempts;
                    code = std::move(res.code);
                    break;
                }
                case Family::Custom: break;
            }
            row.q = code.field.q();
            const Scheme scheme = make_scheme(code);
            row.mds_ok = verify_mds(code).ok;
            row.privacy_ok = check_privacy(scheme).ok;
            Rng rng = master.fork(1000 + idx);
            row.correctness_ok = check_correctness(scheme, trials, rng).ok;
            row.barrier = barrier_report(scheme);
        } catch (const Error& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace pirjoint
