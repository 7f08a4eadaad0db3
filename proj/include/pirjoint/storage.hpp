#ifndef PIRJOINT_STORAGE_HPP
#define PIRJOINT_STORAGE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pirjoint/mat.hpp"
#include "pirjoint/rng.hpp"

namespace pirjoint {

enum class Family {
    Joint2N2,        // (2, N, 2), N >= 3
    JointParity,     // (K, K+1, K), K >= 2
    ExpandedParity,  // (K, m(K+1), mK)
    Expanded2N2,     // (2, m*N0, 2m)
    Custom,
};

std::string family_name(Family f);
Family family_from_name(const std::string& s);

struct SystemParams {
    int K = 0;  // message count
    int N = 0;  // database count
    int T = 0;  // MDS recovery threshold
    int L = 0;  // symbols per message
    int M = 0;  // symbols stored per database
    Family family = Family::Custom;
    int m_factor = 1;  // expansion multiplier, 1 for base codes

    void validate() const;  // shape invariants incl. L*K == M*T
};

/// A linear joint MDS storage code: database n stores generators[n-1] * w,
/// where w stacks the K messages (message k occupies columns
/// [(k-1)*L, k*L) in message-symbol order).
struct JointCode {
    SystemParams params;
    Field field;
    std::vector<Mat> generators;                   // N matrices, M x (K*L)
    std::vector<std::vector<std::string>> labels;  // N x M human-readable rows

    bool operator==(const JointCode& o) const {
        return params.K == o.params.K && params.N == o.params.N && params.T == o.params.T &&
               params.L == o.params.L && params.M == o.params.M &&
               params.family == o.params.family && params.m_factor == o.params.m_factor &&
               field == o.field && generators == o.generators && labels == o.labels;
    }
};

/// Random row vectors of the (2, m*N0, 2m) expansion: h[n-3][j-1][i] and
/// g[n-3][j-1][i] are the length-m combination rows applied to message
/// blocks a and b, for database (n, j), stored-symbol index i.
struct CoeffSet {
    int n0 = 0;
    int m = 0;
    std::vector<std::vector<std::vector<std::vector<Elem>>>> h;
    std::vector<std::vector<std::vector<std::vector<Elem>>>> g;
    std::uint64_t seed = 0;
};

struct MdsReport {
    bool ok = false;
    std::vector<std::vector<int>> failing_subsets;  // 1-based database indices
    long subsets_checked = 0;
};

/// Per-pair record of the circulant validation run by build_joint_2n2.
struct CirculantCheck {
    int i = 0;
    int j = 0;
    bool criterion_no_common_root = false;  // f, x^(N-1)-1 share no field root
    bool criterion_exact = false;           // in-field criterion is exact here
    bool full_rank = false;                 // direct rank of the circulant
};

/// (2, N, 2) base family. Databases 1 and 2 store the raw messages; database
/// n >= 3 stores alpha^(n-2-offset) times the cyclic shift of message 1 by
/// n-2, plus message 2, componentwise. When the field is omitted, the
/// smallest prime power passing its Guan-remark bound is chosen and
/// validated. Throws ConstructionError naming the failing pair if the field
/// cannot support the construction.
JointCode build_joint_2n2(int N, std::optional<Field> field = std::nullopt,
                          int exponent_offset = 0,
                          std::vector<CirculantCheck>* checks = nullptr);

/// (K, K+1, K) base family over GF(2): databases 1..K store their own
/// message, database K+1 stores the componentwise sum of all messages.
JointCode build_joint_parity(int K);

/// (K, m(K+1), mK) expansion: K groups of m databases store raw per-message
/// segment symbols; group K+1 database j stores Cauchy row j applied to the
/// stacked first and second segments.
JointCode build_expanded_parity(int K, int m, std::optional<Field> field = std::nullopt);

struct Expanded2N2Result {
    JointCode code;
    CoeffSet coeffs;
    long attempts = 0;                    // accepted attempt count (total draws)
    long singular_coeff_rejections = 0;   // draws rejected by an H/G minor
    long failing_subset_rejections = 0;   // draws rejected by a T-subset rank
    std::vector<std::uint32_t> fields_tried;
};

/// (2, m*N0, 2m) expansion by rejection sampling: coefficients are drawn
/// i.i.d. uniform from the working field; a draw is accepted only if every
/// H/G m x m minor is invertible and verify_mds passes on all subsets.
/// Starts at the smallest prime power >= 2m(N0-2)(N0-1)+2 and escalates to
/// the next prime power >= 2q after max_attempts rejections, up to
/// max_field. Deterministic in (seed, parameters).
Expanded2N2Result build_expanded_2n2(int N0, int m, std::uint64_t seed,
                                     long max_attempts = 256,
                                     std::uint32_t max_field = 1024);

/// Block-diagonal foil: each message independently (N, T)-MDS coded via
/// Cauchy rows (L = T, one symbol per message per database). Requires
/// q >= N + T.
JointCode build_separate_baseline(int K, int N, int T, const Field& field);

std::vector<std::vector<Elem>> encode(const JointCode& code,
                                      const std::vector<std::vector<Elem>>& messages);

/// Recover all K messages from the storage of the given T databases
/// (1-based). Throws DecodeError naming the subset if the stack is
/// rank-deficient.
std::vector<std::vector<Elem>> mds_decode(const JointCode& code, const std::vector<int>& subset,
                                          const std::vector<std::vector<Elem>>& stored);

/// Exhaustive over all C(N, T) subsets: ok iff every stacked matrix has rank
/// K*L.
MdsReport verify_mds(const JointCode& code);

struct MinField2N2 {
    int general_bound = 0;                          // (N-3)(N-1)+2
    std::vector<std::pair<int, int>> guan_bounds;  // (p, (N-3)r+2) with N-1 = r*p^l
};
MinField2N2 min_field_2n2(int N);

/// Extract the h/g coefficient rows of an expanded-2n2 code back out of its
/// generator matrices (used to re-verify serialized codes).
CoeffSet coeffset_from_code(const JointCode& code);

/// True iff every stacked H and G m x m matrix of the coefficient set is
/// invertible; optionally names the singular ones.
bool coeffset_matrices_full_rank(const Field& f, const CoeffSet& cs,
                                 std::vector<std::string>* singular = nullptr);

/// Visit all size-t subsets of {1..n} in lexicographic order.
void for_each_subset(int n, int t, const std::function<void(const std::vector<int>&)>& fn);

/// Render one generator row as a "+"-joined combination of named symbols,
/// canonical-integer coefficients, 1 omitted ("2a_2+b_0"). All-zero rows
/// render as "0".
std::string render_generator_row(const Mat& g, std::size_t row,
                                 const std::vector<std::string>& names);

std::vector<Elem> stack_messages(const std::vector<std::vector<Elem>>& messages);

}  // namespace pirjoint

#endif
