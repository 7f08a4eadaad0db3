#include "pirjoint/scheme.hpp"

namespace pirjoint {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

Scheme make_scheme(const JointCode& code) {
    Scheme s;
    s.code = code;
    const auto& p = code.params;
    switch (p.family) {
        case Family::Joint2N2:
        case Family::Expanded2N2: {
            const int m = p.family == Family::Expanded2N2 ? p.m_factor : 1;
            const int n0 = p.N / m;
            const int cycle = n0 - 1;
            s.f_base = 0;
            s.f_size = cycle;
            s.query_table.assign(
                2, std::vector<std::vector<int>>(cycle, std::vector<int>(p.N, 0)));
            for (int f = 0; f < cycle; ++f)
                for (int db = 1; db <= p.N; ++db) {
                    const int group = (db - 1) / m + 1;
                    s.query_table[0][f][db - 1] = f;
                    s.query_table[1][f][db - 1] =
                        group <= 2 ? f : mod(f - (group - 2), cycle);
                }
            break;
        }
        case Family::JointParity:
        case Family::ExpandedParity: {
            const int m = p.family == Family::ExpandedParity ? p.m_factor : 1;
            s.f_base = 1;
            s.f_size = 2;
            s.query_table.assign(p.K,
                                 std::vector<std::vector<int>>(2, std::vector<int>(p.N, 0)));
            for (int k = 1; k <= p.K; ++k)
                for (int fi = 0; fi < 2; ++fi)
                    for (int db = 1; db <= p.N; ++db) {
                        const int group = (db - 1) / m + 1;
                        // The desired group reads the opposite segment.
                        s.query_table[k - 1][fi][db - 1] = group == k ? 1 - fi : fi;
                    }
            break;
        }
        case Family::Custom:
            throw UnsupportedFamilyError(
                "make_scheme: custom codes carry no built-in query table");
    }
    return s;
}

std::vector<int> gen_queries(const Scheme& s, int k_star, int f) {
    if (k_star < 1 || k_star > s.code.params.K)
        throw ParamError("gen_queries: k_star out of range");
    if (f < s.f_base || f >= s.f_base + s.f_size)
        throw ParamError("gen_queries: f out of range");
    return s.query_table[k_star - 1][f - s.f_base];
}

Elem answer(const std::vector<Elem>& storage_n, int query) {
    if (query < 0 || static_cast<std::size_t>(query) >= storage_n.size())
        throw ParamError("answer: query index out of range");
    return storage_n[query];
}

std::vector<Elem> reconstruct(const Scheme& s, int k_star, int f,
                              const std::vector<Elem>& answers) {
    const auto& p = s.code.params;
    if (answers.size() != static_cast<std::size_t>(p.N))
        throw ParamError("reconstruct: expected one answer per database");
    const auto queries = gen_queries(s, k_star, f);

    // Known linear forms, one generator row per answer, as columns of a
    // (K*L) x N system so each desired coordinate is a target vector.
    const std::size_t kl = static_cast<std::size_t>(p.K) * p.L;
    Mat forms(kl, p.N);
    for (int db = 0; db < p.N; ++db)
        for (std::size_t c = 0; c < kl; ++c)
            forms.at(c, db) = s.code.generators[db].at(queries[db], c);

    std::vector<Elem> out(p.L, 0);
    for (int l = 0; l < p.L; ++l) {
        std::vector<Elem> target(kl, 0);
        target[static_cast<std::size_t>(k_star - 1) * p.L + l] = 1;
        const auto sol = mat_solve(s.code.field, forms, target);
        if (!sol.consistent)
            throw ReconstructionError("reconstruct: coordinate " + std::to_string(l) +
                                      " of message " + std::to_string(k_star) +
                                      " is outside the answer row space");
        Elem v = 0;
        for (int db = 0; db < p.N; ++db)
            v = s.code.field.add(v, s.code.field.mul(sol.x[db], answers[db]));
        out[l] = v;
    }
    return out;
}

Rational retrieval_rate(const Scheme& s) {
    // One symbol per database per query, all symbols from one alphabet.
    return Rational(s.code.params.L, static_cast<std::int64_t>(s.code.params.N) *
                                         s.answer_length);
}

Transcript simulate_retrieval(const Scheme& s, const std::vector<std::vector<Elem>>& messages,
                              int k_star, Rng& rng) {
    Transcript t;
    t.k_star = k_star;
    t.f = s.f_base + static_cast<int>(rng.uniform_below(s.f_size));
    t.queries = gen_queries(s, k_star, t.f);
    const auto storage = encode(s.code, messages);
    t.answers.reserve(storage.size());
    for (std::size_t db = 0; db < storage.size(); ++db)
        t.answers.push_back(answer(storage[db], t.queries[db]));
    t.reconstructed = reconstruct(s, k_star, t.f, t.answers);
    t.download_count = static_cast<int>(t.answers.size()) * s.answer_length;
    return t;
}

}  // namespace pirjoint
