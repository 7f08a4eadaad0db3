#ifndef PIRJOINT_SCHEME_HPP
#define PIRJOINT_SCHEME_HPP

#include "pirjoint/rational.hpp"
#include "pirjoint/rng.hpp"
#include "pirjoint/storage.hpp"

namespace pirjoint {

/// A retrieval protocol over a joint code. Queries are stored-symbol indices:
/// every built-in family downloads exactly one stored symbol per database, so
/// the general query sets collapse to an index table.
struct Scheme {
    JointCode code;
    int f_base = 0;  // smallest randomness value (0 for 2n2 families, 1 for parity)
    int f_size = 0;
    /// query_table[k-1][f - f_base][db-1] = stored-symbol index in [0, M).
    std::vector<std::vector<std::vector<int>>> query_table;
    int answer_length = 1;

    std::vector<int> f_values() const {
        std::vector<int> v(f_size);
        for (int i = 0; i < f_size; ++i) v[i] = f_base + i;
        return v;
    }
};

struct Transcript {
    int k_star = 0;
    int f = 0;
    std::vector<int> queries;        // per database
    std::vector<Elem> answers;       // per database
    std::vector<Elem> reconstructed;  // L symbols
    int download_count = 0;
};

/// Builds the query table for a built-in family. Throws
/// UnsupportedFamilyError for custom codes (those need an explicit table).
Scheme make_scheme(const JointCode& code);

std::vector<int> gen_queries(const Scheme& s, int k_star, int f);

Elem answer(const std::vector<Elem>& storage_n, int query);

/// Generic linear reconstruction: collects the answered generator rows,
/// expresses each desired-message coordinate in their row space, and solves.
/// Throws ReconstructionError if a coordinate is not covered (a scheme bug).
std::vector<Elem> reconstruct(const Scheme& s, int k_star, int f,
                              const std::vector<Elem>& answers);

Rational retrieval_rate(const Scheme& s);

Transcript simulate_retrieval(const Scheme& s, const std::vector<std::vector<Elem>>& messages,
                              int k_star, Rng& rng);

}  // namespace pirjoint

#endif
