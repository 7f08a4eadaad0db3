#include "pirjoint/tables.hpp"

#include <sstream>

#include "pirjoint/scheme.hpp"

namespace pirjoint {

namespace {

const char* kRoman[] = {"I", "II",  "III", "IV", "V",   "VI",  "VII",
                        "VIII", "IX", "X",   "XI", "XII", "XIII", "XIV"};

std::string md_table(const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        out << "|";
        for (const auto& cell : rows[r]) out << " " << cell << " |";
        out << "\n";
        if (r == 0) {
            out << "|";
            for (std::size_t c = 0; c < rows[0].size(); ++c) out << " --- |";
            out << "\n";
        }
    }
    return out.str();
}

std::string caption(int index, const std::string& text) {
    return std::string("**Table ") + kRoman[index - 1] + ".** " + text + "\n";
}

// (2,4,2) over GF(3), exponent offset 1: the base example instance.
JointCode example_2n2() { return build_joint_2n2(4, make_field(3, 1), 1); }

std::vector<std::string> db_headers(int n) {
    std::vector<std::string> h;
    for (int i = 1; i <= n; ++i) h.push_back("Database-" + std::to_string(i));
    return h;
}

std::string stored_table(const JointCode& code) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back(db_headers(code.params.N));
    for (int r = 0; r < code.params.M; ++r) {
        std::vector<std::string> row;
        for (int db = 0; db < code.params.N; ++db) row.push_back(code.labels[db][r]);
        rows.push_back(std::move(row));
    }
    return md_table(rows);
}

std::string answers_table(const Scheme& s, int k_star,
                          const std::vector<std::vector<std::string>>& labels) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header = {"F"};
    for (const auto& h : db_headers(s.code.params.N)) header.push_back(h);
    rows.push_back(std::move(header));
    for (const int f : s.f_values()) {
        std::vector<std::string> row = {std::to_string(f)};
        const auto queries = gen_queries(s, k_star, f);
        for (int db = 0; db < s.code.params.N; ++db)
            row.push_back(labels[db][queries[db]]);
        rows.push_back(std::move(row));
    }
    return md_table(rows);
}

// Letter naming (a, b, c, ...) with 1-based subscripts, for the (3,4,3)
// tables.
std::vector<std::vector<std::string>> letter_labels(const JointCode& code) {
    std::vector<std::string> names(static_cast<std::size_t>(code.params.K) * code.params.L);
    for (int k = 0; k < code.params.K; ++k)
        for (int l = 0; l < code.params.L; ++l)
            names[k * code.params.L + l] =
                std::string(1, static_cast<char>('a' + k)) + "_" + std::to_string(l + 1);
    std::vector<std::vector<std::string>> labels(code.params.N);
    for (int db = 0; db < code.params.N; ++db)
        for (int r = 0; r < code.params.M; ++r)
            labels[db].push_back(render_generator_row(code.generators[db], r, names));
    return labels;
}

// W-notation with the aggregate database rendered as ΣW^k_r.
std::vector<std::vector<std::string>> parity_w_labels(const JointCode& code) {
    std::vector<std::vector<std::string>> labels(code.params.N);
    for (int db = 1; db <= code.params.N; ++db)
        for (int r = 1; r <= code.params.M; ++r)
            labels[db - 1].push_back(
                db <= code.params.K
                    ? "W^" + std::to_string(db) + "_" + std::to_string(r)
                    : "ΣW^k_" + std::to_string(r));
    return labels;
}

std::string table_viii_block(int K) {
    const JointCode code = build_joint_parity(K);
    const auto labels = parity_w_labels(code);
    std::vector<std::vector<std::string>> rows;
    rows.push_back(db_headers(code.params.N));
    for (int r = 0; r < code.params.M; ++r) {
        std::vector<std::string> row;
        for (int db = 0; db < code.params.N; ++db) row.push_back(labels[db][r]);
        rows.push_back(std::move(row));
    }
    return md_table(rows);
}

std::string table_ix_block(int K, int k_star) {
    const JointCode code = build_joint_parity(K);
    return answers_table(make_scheme(code), k_star, parity_w_labels(code));
}

// Symbolic storage grid of the (2, 2*4, 2*2) expansion example: groups of
// two databases share a column; h/g indices are flattened row-major across the two coded groups.
std::vector<std::vector<std::string>> expansion_example_cells() {
    auto coded = [](int group, int i) {
        const int shifted = (group - 2 + i) % 3;
        const int base = (group - 3) * 6 + 2 * i + 1;
        auto one = [&](int x) {
            return "h_" + std::to_string(x) + "·a_" + std::to_string(shifted) + "+g_" +
                   std::to_string(x) + "·b_" + std::to_string(i);
        };
        return "(" + one(base) + ", " + one(base + 1) + ")";
    };
    std::vector<std::vector<std::string>> cells(3);
    for (int i = 0; i < 3; ++i) {
        cells[i].push_back("(a_" + std::to_string(i) + ", a_" + std::to_string(i) + "')");
        cells[i].push_back("(b_" + std::to_string(i) + ", b_" + std::to_string(i) + "')");
        cells[i].push_back(coded(3, i));
        cells[i].push_back(coded(4, i));
    }
    return cells;
}

const std::vector<std::string> kExpansionHeaders = {"(DB1, DB2)", "(DB3, DB4)", "(DB5, DB6)",
                                                    "(DB7, DB8)"};

std::string note(const std::string& text) { return "> " + text + "\n"; }

}  // namespace

std::string table_file_name(int index) {
    return std::string("table_") + kRoman[index - 1] + ".md";
}

std::string render_reference_table(int index) {
    std::ostringstream out;
    switch (index) {
        case 1:
            out << caption(1, "Stored Variables.") << "\n" << stored_table(example_2n2());
            break;
        case 2:
        case 3: {
            const JointCode code = example_2n2();
            const int k_star = index - 1;
            out << caption(index, "Answers for W^" + std::to_string(k_star) + ".") << "\n"
                << answers_table(make_scheme(code), k_star, code.labels);
            break;
        }
        case 4: {
            JointCode code = build_joint_parity(3);
            code.labels = letter_labels(code);
            out << caption(4, "Stored Variables.") << "\n" << stored_table(code);
            break;
        }
        case 5:
        case 6:
        case 7: {
            const JointCode code = build_joint_parity(3);
            const int k_star = index - 4;
            out << caption(index, "Answers for W^" + std::to_string(k_star) + ".") << "\n"
                << answers_table(make_scheme(code), k_star, letter_labels(code));
            break;
        }
        case 8:
            out << caption(8, "Stored Variables.") << "\n";
            out << "K = 3:\n\n" << table_viii_block(3) << "\n";
            out << "K = 4:\n\n" << table_viii_block(4);
            break;
        case 9: {
            out << caption(9, "Answers for W^k.") << "\n";
            bool first = true;
            for (const int K : {3, 4})
                for (int k = 1; k <= K; ++k) {
                    if (!first) out << "\n";
                    first = false;
                    out << "K = " << K << ", k = " << k << ":\n\n" << table_ix_block(K, k);
                }
            break;
        }
        case 10: {
            out << caption(10, "Stored Variables.") << "\n"
                << note("Structural reproduction: C(i,:) is row i of the m × mK Cauchy "
                        "matrix; W_1 and W_2 stack the first and second segments of all "
                        "messages. Concrete entries live in expanded-parity CodeFiles.")
                << "\n";
            out << md_table({{"DB(1,:)", "DB(2,:)", "…", "DB(K,:)", "DB(K+1,1)", "…",
                              "DB(K+1,m)"},
                             {"W^1_1", "W^2_1", "…", "W^K_1", "C(1,:)·W_1", "…",
                              "C(m,:)·W_1"},
                             {"W^1_2", "W^2_2", "…", "W^K_2", "C(1,:)·W_2", "…",
                              "C(m,:)·W_2"}});
            break;
        }
        case 11: {
            out << caption(11, "Answers for W^k.") << "\n"
                << note("Structural reproduction: group k reads the segment opposite to F; "
                        "every other group and group K+1 read segment F.")
                << "\n";
            out << md_table({{"F", "DB(1,:)", "…", "DB(k,:)", "…", "DB(K,:)",
                              "DB(K+1,1)", "…", "DB(K+1,m)"},
                             {"1", "W^1_1", "…", "W^k_2", "…", "W^K_1",
                              "C(1,:)·W_1", "…", "C(m,:)·W_1"},
                             {"2", "W^1_2", "…", "W^k_1", "…", "W^K_2",
                              "C(1,:)·W_2", "…", "C(m,:)·W_2"}});
            break;
        }
        case 12: {
            out << caption(12, "Stored Variables.") << "\n"
                << note("Structural reproduction of the (2, 8, 4) expansion instance (N0 = 4, "
                        "m = 2): h_i and g_i are sampled length-2 coefficient rows, a_i = "
                        "(a_i; a_i') and b_i = (b_i; b_i'). Concrete values depend on the "
                        "seed; see the expanded-2n2 CodeFile.")
                << "\n";
            std::vector<std::vector<std::string>> rows = {kExpansionHeaders};
            for (const auto& r : expansion_example_cells()) rows.push_back(r);
            out << md_table(rows);
            break;
        }
        case 13:
        case 14: {
            const int k_star = index - 12;
            out << caption(index, "Answers for W^" + std::to_string(k_star) + ".") << "\n"
                << note("Structural reproduction; rows are indexed by the randomness F ∈ "
                        "{0,1,2}. Group n ≥ 3 answers stored row F when W^1 is desired "
                        "and row (F-(n-2)) mod 3 when W^2 is desired.")
                << "\n";
            const auto cells = expansion_example_cells();
            std::vector<std::vector<std::string>> rows;
            std::vector<std::string> header = {"F"};
            for (const auto& h : kExpansionHeaders) header.push_back(h);
            rows.push_back(std::move(header));
            for (int f = 0; f < 3; ++f) {
                std::vector<std::string> row = {std::to_string(f)};
                for (int col = 0; col < 4; ++col) {
                    const int group = col + 1;
                    const int idx = (k_star == 1 || group <= 2) ? f : (((f - (group - 2)) % 3) + 3) % 3;
                    row.push_back(cells[idx][col]);
                }
                rows.push_back(std::move(row));
            }
            out << md_table(rows);
            break;
        }
        default:
            throw ParamError("render_reference_table: index must be 1..14");
    }
    return out.str();
}

}  // namespace pirjoint
