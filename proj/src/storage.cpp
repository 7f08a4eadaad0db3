#include "pirjoint/storage.hpp"

#include <algorithm>
#include <sstream>

namespace pirjoint {

std::string family_name(Family f) {
    switch (f) {
        case Family::Joint2N2: return "joint-2n2";
        case Family::JointParity: return "joint-parity";
        case Family::ExpandedParity: return "expanded-parity";
        case Family::Expanded2N2: return "expanded-2n2";
        case Family::Custom: return "custom";
    }
    throw ParamError("family_name: bad enum value");
}

Family family_from_name(const std::string& s) {
    if (s == "joint-2n2") return Family::Joint2N2;
    if (s == "joint-parity") return Family::JointParity;
    if (s == "expanded-parity") return Family::ExpandedParity;
    if (s == "expanded-2n2") return Family::Expanded2N2;
    if (s == "custom") return Family::Custom;
    throw ParamError("unknown family: " + s);
}

void SystemParams::validate() const {
    if (K < 1 || N < 1 || T < 1 || L < 1 || M < 1 || m_factor < 1)
        throw ParamError("SystemParams: dimensions must be positive");
    constexpr int kDimBudget = 1 << 16;
    if (K > kDimBudget || N > kDimBudget || T > kDimBudget || L > kDimBudget ||
        M > kDimBudget || m_factor > kDimBudget)
        throw CapacityError("SystemParams: dimension exceeds the budget 2^16");
    if (T >= N) throw ParamError("SystemParams: requires T < N");
    if (static_cast<long long>(L) * K != static_cast<long long>(M) * T)
        throw ParamError("SystemParams: L*K != M*T");
    switch (family) {
        case Family::Joint2N2:
            if (K != 2 || T != 2 || N < 3 || L != N - 1 || M != N - 1 || m_factor != 1)
                throw ParamError("SystemParams: bad joint-2n2 shape");
            break;
        case Family::JointParity:
            if (K < 2 || N != K + 1 || T != K || L != 2 || M != 2 || m_factor != 1)
                throw ParamError("SystemParams: bad joint-parity shape");
            break;
        case Family::ExpandedParity:
            if (K < 2 || N != m_factor * (K + 1) || T != m_factor * K || L != 2 * m_factor ||
                M != 2)
                throw ParamError("SystemParams: bad expanded-parity shape");
            break;
        case Family::Expanded2N2: {
            if (K != 2 || N % m_factor != 0) throw ParamError("SystemParams: bad expanded-2n2 shape");
            const int n0 = N / m_factor;
            if (n0 < 3 || T != 2 * m_factor || L != m_factor * (n0 - 1) || M != n0 - 1)
                throw ParamError("SystemParams: bad expanded-2n2 shape");
            break;
        }
        case Family::Custom:
            break;
    }
}

namespace {

// Names of the stacked message symbols, per family convention. Column order
// matches the stacked message vector.
std::vector<std::string> symbol_names(const SystemParams& p) {
    std::vector<std::string> names(static_cast<std::size_t>(p.K) * p.L);
    auto put = [&](int k, int l, std::string s) { names[(k - 1) * p.L + l] = std::move(s); };
    switch (p.family) {
        case Family::Joint2N2:
            for (int l = 0; l < p.L; ++l) {
                put(1, l, "a_" + std::to_string(l));
                put(2, l, "b_" + std::to_string(l));
            }
            break;
        case Family::Expanded2N2: {
            const int m = p.m_factor;
            for (int i = 0; i * m < p.L; ++i)
                for (int j = 1; j <= m; ++j) {
                    put(1, i * m + j - 1,
                        "a_{" + std::to_string(i) + "," + std::to_string(j) + "}");
                    put(2, i * m + j - 1,
                        "b_{" + std::to_string(i) + "," + std::to_string(j) + "}");
                }
            break;
        }
        case Family::ExpandedParity: {
            const int m = p.m_factor;
            for (int k = 1; k <= p.K; ++k)
                for (int s = 1; s <= 2; ++s)
                    for (int j = 1; j <= m; ++j)
                        put(k, (s - 1) * m + j - 1,
                            "W^" + std::to_string(k) + "_{" + std::to_string(s) + "," +
                                std::to_string(j) + "}");
            break;
        }
        case Family::JointParity:
        case Family::Custom:
            for (int k = 1; k <= p.K; ++k)
                for (int l = 0; l < p.L; ++l)
                    put(k, l, "W^" + std::to_string(k) + "_" + std::to_string(l + 1));
            break;
    }
    return names;
}

std::vector<std::vector<std::string>> make_labels(const JointCode& code) {
    const auto names = symbol_names(code.params);
    std::vector<std::vector<std::string>> labels(code.params.N);
    for (int n = 0; n < code.params.N; ++n) {
        labels[n].reserve(code.params.M);
        for (int r = 0; r < code.params.M; ++r)
            labels[n].push_back(render_generator_row(code.generators[n], r, names));
    }
    return labels;
}

// alpha^(e mod (q-1)) with e possibly negative.
Elem alpha_power(const Field& f, long e) {
    const long ord = static_cast<long>(f.q()) - 1;
    long r = e % ord;
    if (r < 0) r += ord;
    return f.pow(f.alpha(), static_cast<std::uint64_t>(r));
}

// Guan reduction: N-1 = r * p^l with gcd(r, p) = 1.
int coprime_part(int n, int p) {
    while (n % p == 0) n /= p;
    return n;
}

struct PairValidation {
    std::optional<std::pair<int, int>> failing_pair;
    std::vector<CirculantCheck> checks;
};

// Checks every circulant difference pair (i, j), 3 <= i < j <= N, recording
// the common-root criterion verdict next to the direct rank. The rank is the
// deciding verdict; the in-field criterion is exact only when x^(N-1)-1
// splits over the field (r | q-1 for the p-coprime part r of N-1).
PairValidation validate_joint_2n2(const Field& f, int N, int offset) {
    PairValidation out;
    const int n = N - 1;
    const bool exact = (f.q() - 1) % coprime_part(n, static_cast<int>(f.p())) == 0;
    const Poly g = poly_xn_minus_one(f, static_cast<std::uint32_t>(n));
    for (int i = 3; i <= N; ++i) {
        for (int j = i + 1; j <= N; ++j) {
            std::vector<Elem> fc(static_cast<std::size_t>(j - i) + 1, 0);
            fc[0] = alpha_power(f, i - 2 - offset);
            fc[j - i] = f.neg(alpha_power(f, j - 2 - offset));
            const Poly fp((std::vector<Elem>(fc)));

            std::vector<Elem> row(n, 0);
            row[0] = fc[0];
            row[j - i] = fc[j - i];
            const bool full = mat_rank(f, circulant_from_row(f, row)) == static_cast<std::size_t>(n);

            CirculantCheck chk;
            chk.i = i;
            chk.j = j;
            chk.criterion_no_common_root = !common_root_exists(f, fp, g);
            chk.criterion_exact = exact;
            chk.full_rank = full;
            out.checks.push_back(chk);
            if (!full && !out.failing_pair) out.failing_pair = std::make_pair(i, j);
        }
    }
    return out;
}

JointCode assemble_joint_2n2(int N, const Field& f, int offset) {
    const int n = N - 1;
    JointCode code;
    code.params = SystemParams{2, N, 2, n, n, Family::Joint2N2, 1};
    code.params.validate();
    code.field = f;
    code.generators.reserve(N);
    const std::size_t cols = 2 * static_cast<std::size_t>(n);
    Mat g1(n, cols), g2(n, cols);
    for (int r = 0; r < n; ++r) {
        g1.at(r, r) = 1;
        g2.at(r, n + r) = 1;
    }
    code.generators.push_back(g1);
    code.generators.push_back(g2);
    for (int db = 3; db <= N; ++db) {
        Mat g(n, cols);
        const Elem coef = alpha_power(f, db - 2 - offset);
        for (int r = 0; r < n; ++r) {
            g.at(r, (db - 2 + r) % n) = coef;
            g.at(r, n + r) = 1;
        }
        code.generators.push_back(g);
    }
    code.labels = make_labels(code);
    return code;
}

}  // namespace

JointCode build_joint_2n2(int N, std::optional<Field> field, int exponent_offset,
                          std::vector<CirculantCheck>* checks) {
    if (N < 3) throw ParamError("build_joint_2n2: N must be >= 3");
    if (field) {
        const auto v = validate_joint_2n2(*field, N, exponent_offset);
        if (checks) *checks = v.checks;
        if (v.failing_pair) {
            std::ostringstream msg;
            msg << "build_joint_2n2: field " << field->name() << " too small for N=" << N
                << ": circulant pair (" << v.failing_pair->first << "," << v.failing_pair->second
                << ") is rank-deficient";
            throw ConstructionError(msg.str());
        }
        return assemble_joint_2n2(N, *field, exponent_offset);
    }
    // Smallest prime power satisfying its own Guan-remark bound, validated.
    const int general_bound = (N - 3) * (N - 1) + 2;
    for (std::uint32_t q = 2; q <= 4u * static_cast<std::uint32_t>(general_bound) + 64; ++q) {
        const auto pm = prime_power_decompose(q);
        if (!pm) continue;
        const int r = coprime_part(N - 1, static_cast<int>(pm->first));
        const int bound = (N - 3) * r + 2;
        if (static_cast<int>(q) < bound) continue;
        const Field f = make_field(pm->first, pm->second);
        const auto v = validate_joint_2n2(f, N, exponent_offset);
        if (v.failing_pair) continue;
        if (checks) *checks = v.checks;
        return assemble_joint_2n2(N, f, exponent_offset);
    }
    throw ConstructionError("build_joint_2n2: no admissible field found");  // unreachable
}

JointCode build_joint_parity(int K) {
    if (K < 2) throw ParamError("build_joint_parity: K must be >= 2");
    JointCode code;
    code.params = SystemParams{K, K + 1, K, 2, 2, Family::JointParity, 1};
    code.params.validate();
    code.field = make_field(2, 1);
    for (int db = 1; db <= K; ++db) {
        Mat g(2, 2 * static_cast<std::size_t>(K));
        g.at(0, 2 * static_cast<std::size_t>(db - 1)) = 1;
        g.at(1, 2 * static_cast<std::size_t>(db - 1) + 1) = 1;
        code.generators.push_back(g);
    }
    Mat sum(2, 2 * static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) {
        sum.at(0, 2 * static_cast<std::size_t>(k)) = 1;
        sum.at(1, 2 * static_cast<std::size_t>(k) + 1) = 1;
    }
    code.generators.push_back(sum);
    code.labels = make_labels(code);
    return code;
}

JointCode build_expanded_parity(int K, int m, std::optional<Field> field) {
    if (K < 2) throw ParamError("build_expanded_parity: K must be >= 2");
    if (m < 1) throw ParamError("build_expanded_parity: m must be >= 1");
    if ((static_cast<long long>(m) + 1) * K > Field::kOrderBudget ||
        static_cast<long long>(m) * (K + 1) > Field::kOrderBudget)
        throw CapacityError("build_expanded_parity: parameters exceed the field budget");
    const int stated_bound = (m + 1) * K;   // the documented precondition
    const int distinct_needed = m * (K + 1);  // Cauchy parameters actually used
    Field f = field ? *field : [&] {
        const auto pm = prime_power_decompose(
            next_prime_power(static_cast<std::uint32_t>(std::max(stated_bound, distinct_needed))));
        return make_field(pm->first, pm->second);
    }();
    if (static_cast<int>(f.q()) < stated_bound)
        throw ParamError("build_expanded_parity: field order below (m+1)K");
    if (static_cast<int>(f.q()) < distinct_needed)
        throw ParamError("build_expanded_parity: field cannot host " +
                         std::to_string(distinct_needed) + " distinct Cauchy parameters");

    std::vector<Elem> alphas, betas;
    for (int i = 1; i <= m; ++i) alphas.push_back(static_cast<Elem>(i - 1));
    for (int j = 1; j <= m * K; ++j) betas.push_back(static_cast<Elem>(m + j - 1));
    const Mat cauchy = cauchy_matrix(f, alphas, betas);

    const int L = 2 * m;
    JointCode code;
    code.params = SystemParams{K, m * (K + 1), m * K, L, 2, Family::ExpandedParity, m};
    code.params.validate();
    code.field = f;
    for (int group = 1; group <= K; ++group)
        for (int j = 1; j <= m; ++j) {
            Mat g(2, static_cast<std::size_t>(K) * L);
            g.at(0, (group - 1) * L + (j - 1)) = 1;      // segment 1, member j
            g.at(1, (group - 1) * L + m + (j - 1)) = 1;  // segment 2, member j
            code.generators.push_back(g);
        }
    for (int j = 1; j <= m; ++j) {
        Mat g(2, static_cast<std::size_t>(K) * L);
        for (int k = 1; k <= K; ++k)
            for (int i = 0; i < m; ++i) {
                const Elem c = cauchy.at(j - 1, (k - 1) * m + i);
                g.at(0, (k - 1) * L + i) = c;
                g.at(1, (k - 1) * L + m + i) = c;
            }
        code.generators.push_back(g);
    }
    code.labels = make_labels(code);
    return code;
}

namespace {

JointCode assemble_expanded_2n2(int N0, int m, const Field& f, const CoeffSet& cs) {
    const int n = N0 - 1;
    const int L = m * n;
    JointCode code;
    code.params = SystemParams{2, m * N0, 2 * m, L, n, Family::Expanded2N2, m};
    code.params.validate();
    code.field = f;
    for (int group = 1; group <= N0; ++group)
        for (int j = 1; j <= m; ++j) {
            Mat g(n, 2 * static_cast<std::size_t>(L));
            for (int i = 0; i < n; ++i) {
                if (group == 1) {
                    g.at(i, i * m + (j - 1)) = 1;
                } else if (group == 2) {
                    g.at(i, L + i * m + (j - 1)) = 1;
                } else {
                    const int shifted = (group - 2 + i) % n;
                    for (int t = 0; t < m; ++t) {
                        g.at(i, shifted * m + t) = cs.h[group - 3][j - 1][i][t];
                        g.at(i, L + i * m + t) = cs.g[group - 3][j - 1][i][t];
                    }
                }
            }
            code.generators.push_back(g);
        }
    code.labels = make_labels(code);
    return code;
}

}  // namespace

Expanded2N2Result build_expanded_2n2(int N0, int m, std::uint64_t seed, long max_attempts,
                                     std::uint32_t max_field) {
    if (N0 < 3) throw ParamError("build_expanded_2n2: N0 must be >= 3");
    if (m < 1) throw ParamError("build_expanded_2n2: m must be >= 1");
    if (max_attempts < 1) throw ParamError("build_expanded_2n2: max_attempts must be >= 1");
    if (static_cast<long long>(m) * N0 > (1 << 16) ||
        2LL * m * (N0 - 2) * (N0 - 1) + 2 > Field::kOrderBudget)
        throw CapacityError("build_expanded_2n2: parameters exceed the budget");

    Expanded2N2Result res;
    const Rng master(seed);
    std::uint32_t q =
        next_prime_power(static_cast<std::uint32_t>(2 * m * (N0 - 2) * (N0 - 1) + 2));
    for (std::uint64_t step = 0; q <= max_field; ++step) {
        const auto pm = prime_power_decompose(q);
        const Field f = make_field(pm->first, pm->second);
        res.fields_tried.push_back(q);
        for (long attempt = 0; attempt < max_attempts; ++attempt) {
            Rng rng = master.fork(step).fork(static_cast<std::uint64_t>(attempt));
            CoeffSet cs;
            cs.n0 = N0;
            cs.m = m;
            cs.seed = seed;
            cs.h.assign(N0 - 2, std::vector<std::vector<std::vector<Elem>>>(
                                    m, std::vector<std::vector<Elem>>(N0 - 1)));
            cs.g = cs.h;
            for (int n = 3; n <= N0; ++n)
                for (int j = 1; j <= m; ++j)
                    for (int i = 0; i < N0 - 1; ++i) {
                        auto& hv = cs.h[n - 3][j - 1][i];
                        auto& gv = cs.g[n - 3][j - 1][i];
                        hv.resize(m);
                        gv.resize(m);
                        for (int t = 0; t < m; ++t)
                            hv[t] = static_cast<Elem>(rng.uniform_below(f.q()));
                        for (int t = 0; t < m; ++t)
                            gv[t] = static_cast<Elem>(rng.uniform_below(f.q()));
                    }
            ++res.attempts;
            if (!coeffset_matrices_full_rank(f, cs)) {
                ++res.singular_coeff_rejections;
                continue;
            }
            JointCode code = assemble_expanded_2n2(N0, m, f, cs);
            if (!verify_mds(code).ok) {
                ++res.failing_subset_rejections;
                continue;
            }
            res.code = std::move(code);
            res.coeffs = std::move(cs);
            return res;
        }
        q = next_prime_power(2 * q);
    }
    std::ostringstream msg;
    msg << "build_expanded_2n2(N0=" << N0 << ", m=" << m << ", seed=" << seed
        << "): no admissible coefficients within " << res.attempts << " attempts over "
        << res.fields_tried.size() << " fields (max field " << max_field << "); "
        << res.singular_coeff_rejections << " singular-minor and "
        << res.failing_subset_rejections << " failing-subset rejections";
    throw SearchError(msg.str(), res.attempts, res.singular_coeff_rejections,
                      res.failing_subset_rejections);
}

JointCode build_separate_baseline(int K, int N, int T, const Field& field) {
    if (K < 1 || T < 1 || T >= N) throw ParamError("build_separate_baseline: bad (K, N, T)");
    if (static_cast<int>(field.q()) < N + T)
        throw ParamError("build_separate_baseline: need q >= N + T for Cauchy parameters");
    const int L = T;  // one coded symbol per message per database
    std::vector<Elem> alphas, betas;
    for (int n = 0; n < N; ++n) alphas.push_back(static_cast<Elem>(n));
    for (int t = 0; t < T; ++t) betas.push_back(static_cast<Elem>(N + t));
    const Mat cauchy = cauchy_matrix(field, alphas, betas);

    JointCode code;
    code.params = SystemParams{K, N, T, L, K, Family::Custom, 1};
    code.params.validate();
    code.field = field;
    for (int n = 1; n <= N; ++n) {
        Mat g(K, static_cast<std::size_t>(K) * L);
        for (int k = 0; k < K; ++k)
            for (int t = 0; t < T; ++t) g.at(k, k * L + t) = cauchy.at(n - 1, t);
        code.generators.push_back(g);
    }
    code.labels = make_labels(code);
    return code;
}

std::vector<Elem> stack_messages(const std::vector<std::vector<Elem>>& messages) {
    std::vector<Elem> w;
    for (const auto& msg : messages) w.insert(w.end(), msg.begin(), msg.end());
    return w;
}

std::vector<std::vector<Elem>> encode(const JointCode& code,
                                      const std::vector<std::vector<Elem>>& messages) {
    if (static_cast<int>(messages.size()) != code.params.K)
        throw ParamError("encode: expected K messages");
    for (const auto& msg : messages) {
        if (static_cast<int>(msg.size()) != code.params.L)
            throw ParamError("encode: expected L symbols per message");
        for (const auto s : msg)
            if (!code.field.is_valid(s)) throw ParamError("encode: symbol out of field range");
    }
    const auto w = stack_messages(messages);
    std::vector<std::vector<Elem>> storage;
    storage.reserve(code.params.N);
    for (const auto& g : code.generators) storage.push_back(mat_vec(code.field, g, w));
    return storage;
}

std::vector<std::vector<Elem>> mds_decode(const JointCode& code, const std::vector<int>& subset,
                                          const std::vector<std::vector<Elem>>& stored) {
    if (static_cast<int>(subset.size()) != code.params.T)
        throw ParamError("mds_decode: expected T database indices");
    if (stored.size() != subset.size())
        throw ParamError("mds_decode: stored rows must match subset size");
    std::vector<Mat> blocks;
    std::vector<Elem> b;
    for (std::size_t s = 0; s < subset.size(); ++s) {
        const int db = subset[s];
        if (db < 1 || db > code.params.N) throw ParamError("mds_decode: database index out of range");
        if (static_cast<int>(stored[s].size()) != code.params.M)
            throw ParamError("mds_decode: expected M symbols per database");
        blocks.push_back(code.generators[db - 1]);
        b.insert(b.end(), stored[s].begin(), stored[s].end());
    }
    const auto sol = mat_solve(code.field, mat_vstack(blocks), b);
    if (!sol.consistent || !sol.unique) {
        std::ostringstream msg;
        msg << "mds_decode: rank-deficient stack for subset {";
        for (std::size_t s = 0; s < subset.size(); ++s) msg << (s ? "," : "") << subset[s];
        msg << "}";
        throw DecodeError(msg.str());
    }
    std::vector<std::vector<Elem>> messages(code.params.K);
    for (int k = 0; k < code.params.K; ++k)
        messages[k].assign(sol.x.begin() + static_cast<long>(k) * code.params.L,
                           sol.x.begin() + static_cast<long>(k + 1) * code.params.L);
    return messages;
}

void for_each_subset(int n, int t, const std::function<void(const std::vector<int>&)>& fn) {
    if (t < 0 || t > n) return;
    std::vector<int> subset(t);
    for (int i = 0; i < t; ++i) subset[i] = i + 1;
    for (;;) {
        fn(subset);
        int i = t - 1;
        while (i >= 0 && subset[i] == n - t + i + 1) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < t; ++j) subset[j] = subset[j - 1] + 1;
    }
}

MdsReport verify_mds(const JointCode& code) {
    MdsReport report;
    report.ok = true;
    const std::size_t full = static_cast<std::size_t>(code.params.K) * code.params.L;
    for_each_subset(code.params.N, code.params.T, [&](const std::vector<int>& subset) {
        ++report.subsets_checked;
        std::vector<Mat> blocks;
        blocks.reserve(subset.size());
        for (const int db : subset) blocks.push_back(code.generators[db - 1]);
        if (mat_rank(code.field, mat_vstack(blocks)) != full) {
            report.ok = false;
            report.failing_subsets.push_back(subset);
        }
    });
    return report;
}

MinField2N2 min_field_2n2(int N) {
    if (N < 3) throw ParamError("min_field_2n2: N must be >= 3");
    MinField2N2 out;
    out.general_bound = (N - 3) * (N - 1) + 2;
    for (int p = 2; p <= std::max(2, out.general_bound); ++p) {
        if (!is_prime(static_cast<std::uint64_t>(p))) continue;
        const int r = coprime_part(N - 1, p);
        out.guan_bounds.emplace_back(p, (N - 3) * r + 2);
    }
    return out;
}

CoeffSet coeffset_from_code(const JointCode& code) {
    if (code.params.family != Family::Expanded2N2)
        throw ParamError("coeffset_from_code: not an expanded-2n2 code");
    const int m = code.params.m_factor;
    const int N0 = code.params.N / m;
    const int n = N0 - 1;
    const int L = code.params.L;
    CoeffSet cs;
    cs.n0 = N0;
    cs.m = m;
    cs.h.assign(N0 - 2,
                std::vector<std::vector<std::vector<Elem>>>(m, std::vector<std::vector<Elem>>(n)));
    cs.g = cs.h;
    for (int group = 3; group <= N0; ++group)
        for (int j = 1; j <= m; ++j) {
            const Mat& gmat = code.generators[static_cast<std::size_t>((group - 1) * m + j) - 1];
            for (int i = 0; i < n; ++i) {
                const int shifted = (group - 2 + i) % n;
                auto& hv = cs.h[group - 3][j - 1][i];
                auto& gv = cs.g[group - 3][j - 1][i];
                hv.resize(m);
                gv.resize(m);
                for (int t = 0; t < m; ++t) {
                    hv[t] = gmat.at(i, shifted * m + t);
                    gv[t] = gmat.at(i, L + i * m + t);
                }
            }
        }
    return cs;
}

std::string render_generator_row(const Mat& g, std::size_t row,
                                 const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t c = 0; c < g.cols(); ++c) {
        const Elem v = g.at(row, c);
        if (v == 0) continue;
        if (!out.empty()) out += "+";
        if (v != 1) out += std::to_string(v);
        out += names[c];
    }
    return out.empty() ? "0" : out;
}

bool coeffset_matrices_full_rank(const Field& f, const CoeffSet& cs,
                                 std::vector<std::string>* singular) {
    bool ok = true;
    const int n = cs.n0 - 1;
    for (int group = 3; group <= cs.n0; ++group)
        for (int i = 0; i < n; ++i) {
            for (const char which : {'H', 'G'}) {
                Mat m(cs.m, cs.m);
                for (int j = 0; j < cs.m; ++j) {
                    const auto& v =
                        which == 'H' ? cs.h[group - 3][j][i] : cs.g[group - 3][j][i];
                    for (int t = 0; t < cs.m; ++t) m.at(j, t) = v[t];
                }
                if (mat_rank(f, m) != static_cast<std::size_t>(cs.m)) {
                    ok = false;
                    if (singular)
                        singular->push_back(std::string(1, which) + "(" + std::to_string(group) +
                                            "," + std::to_string(i) + ")");
                    else
                        return false;
                }
            }
        }
    return ok;
}

}  // namespace pirjoint
