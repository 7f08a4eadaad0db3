// Command-line front end: build and serialize joint MDS storage codes, run
// the exact verifiers, simulate retrievals, regenerate the reference tables,
// and sweep the capacity-barrier comparison.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pirjoint/codefile.hpp"
#include "pirjoint/tables.hpp"

namespace fs = std::filesystem;
using namespace pirjoint;
using nlohmann::ordered_json;

namespace {

std::uint64_t default_seed() {
    if (const char* env = std::getenv("PIRJOINT_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw ParamError("PIRJOINT_SEED is not an unsigned integer");
        }
    }
    return 0;
}

Field parse_field_spec(const std::string& spec) {
    std::uint32_t p = 0, m = 1;
    const auto caret = spec.find('^');
    try {
        if (caret == std::string::npos) {
            const auto q = static_cast<std::uint32_t>(std::stoul(spec));
            const auto pm = prime_power_decompose(q);
            if (!pm) throw ParamError("--field: " + spec + " is not a prime power");
            p = pm->first;
            m = pm->second;
        } else {
            p = static_cast<std::uint32_t>(std::stoul(spec.substr(0, caret)));
            m = static_cast<std::uint32_t>(std::stoul(spec.substr(caret + 1)));
        }
    } catch (const ParamError&) {
        throw;
    } catch (const std::exception&) {
        throw ParamError("--field: cannot parse '" + spec + "' (use q or p^m)");
    }
    return make_field(p, m);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParamError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParamError("cannot write " + path);
    out << content;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

std::vector<std::pair<int, int>> parse_range(const std::string& range, int m_factor) {
    // "A..B" inclusive; empty result when A > B.
    const auto dots = range.find("..");
    std::vector<std::pair<int, int>> points;
    try {
        if (dots == std::string::npos) {
            points.emplace_back(std::stoi(range), m_factor);
            return points;
        }
        const int a = std::stoi(range.substr(0, dots));
        const int b = std::stoi(range.substr(dots + 2));
        for (int v = a; v <= b; ++v) points.emplace_back(v, m_factor);
    } catch (const std::exception&) {
        throw ParamError("--range: cannot parse '" + range + "' (use A..B)");
    }
    return points;
}

int cmd_build(const std::string& family_str, int n, int k, int m_factor,
              const std::string& field_spec, int offset, std::uint64_t seed, long max_attempts,
              std::uint32_t max_field, const std::string& out_path) {
    const Family family = family_from_name(family_str);
    std::optional<Field> field;
    if (!field_spec.empty()) field = parse_field_spec(field_spec);

    JointCode code;
    Provenance prov;
    prov.seed = seed;
    switch (family) {
        case Family::Joint2N2:
            if (n < 3) throw ParamError("build: joint-2n2 needs --n >= 3");
            code = build_joint_2n2(n, field, offset);
            break;
        case Family::JointParity:
            if (k < 2) throw ParamError("build: joint-parity needs --k >= 2");
            code = build_joint_parity(k);
            break;
        case Family::ExpandedParity:
            if (k < 2) throw ParamError("build: expanded-parity needs --k >= 2");
            code = build_expanded_parity(k, m_factor, field);
            break;
        case Family::Expanded2N2: {
            if (n < 3) throw ParamError("build: expanded-2n2 needs --n (base N0) >= 3");
            auto res = build_expanded_2n2(n, m_factor, seed, max_attempts, max_field);
            code = std::move(res.code);
            prov.attempts = res.attempts;
            std::cout << "search: " << res.attempts << " attempt(s) over "
                      << res.fields_tried.size() << " field(s), "
                      << res.singular_coeff_rejections << " singular-minor and "
                      << res.failing_subset_rejections << " failing-subset rejections\n";
            break;
        }
        case Family::Custom:
            throw ParamError("build: custom codes cannot be built from parameters");
    }

    const auto mds = verify_mds(code);
    std::cout << "family " << family_name(code.params.family) << ": (K,N,T) = ("
              << code.params.K << "," << code.params.N << "," << code.params.T << "), field "
              << code.field.name() << ", " << mds.subsets_checked << " subset(s) "
              << (mds.ok ? "all full rank" : "RANK-DEFICIENT") << "\n";
    if (!mds.ok) {
        std::cerr << "build: constructed code failed MDS verification\n";
        return 1;
    }
    emit(out_path, codefile_to_json(code, prov));
    return 0;
}

int cmd_verify(const std::string& code_path, const std::string& check, int trials,
               std::uint64_t seed, const std::string& out_path) {
    if (check != "all" && check != "mds" && check != "privacy" && check != "correctness" &&
        check != "barrier")
        throw ParamError("--check: expected mds|privacy|correctness|barrier|all, got '" + check +
                         "'");
    const auto parsed = codefile_from_json(read_file(code_path));
    const auto& code = parsed.code;
    ordered_json reports = ordered_json::array();
    bool all_ok = true;
    auto want = [&](const std::string& kind) { return check == "all" || check == kind; };

    if (want("mds")) {
        const auto r = verify_mds(code);
        all_ok = all_ok && r.ok;
        reports.push_back(ordered_json::parse(report_file("mds", mds_report_json(r))));
        std::cout << "mds: " << (r.ok ? "ok" : "FAIL") << " (" << r.subsets_checked
                  << " subsets)\n";
        if (code.params.family == Family::Expanded2N2) {
            std::vector<std::string> singular;
            const bool hg_ok =
                coeffset_matrices_full_rank(code.field, coeffset_from_code(code), &singular);
            all_ok = all_ok && hg_ok;
            std::cout << "mds: coefficient minors " << (hg_ok ? "ok" : "FAIL");
            if (!hg_ok) std::cout << " (" << singular.size() << " singular)";
            std::cout << "\n";
        }
    }
    const bool needs_scheme = want("privacy") || want("correctness") || want("barrier");
    if (needs_scheme) {
        const Scheme scheme = make_scheme(code);
        if (want("privacy")) {
            const auto r = check_privacy(scheme);
            all_ok = all_ok && r.ok;
            reports.push_back(ordered_json::parse(report_file("privacy", privacy_report_json(r))));
            std::cout << "privacy: " << (r.ok ? "ok" : "FAIL") << "\n";
        }
        if (want("correctness")) {
            Rng rng(seed);
            const auto r = check_correctness(scheme, trials, rng);
            all_ok = all_ok && r.ok;
            reports.push_back(
                ordered_json::parse(report_file("correctness", correctness_report_json(r))));
            std::cout << "correctness: " << (r.ok ? "ok" : "FAIL") << " (" << r.pairs_checked
                      << " (k*,f) pairs x " << trials << " trials)\n";
        }
        if (want("barrier")) {
            const auto r = barrier_report(scheme);
            all_ok = all_ok && r.broken;
            reports.push_back(ordered_json::parse(report_file("barrier", barrier_report_json(r))));
            std::cout << "barrier: rate " << r.rate.str() << " vs C_perp " << r.c_perp.str()
                      << ", margin " << r.margin.str() << (r.broken ? " (broken)" : " (NOT broken)")
                      << "\n";
        }
    }
    if (!out_path.empty()) write_file(out_path, reports.dump(2) + "\n");
    return all_ok ? 0 : 1;
}

int cmd_retrieve(const std::string& code_path, int k_star, std::uint64_t seed,
                 const std::string& messages_path, const std::string& out_path) {
    const auto parsed = codefile_from_json(read_file(code_path));
    const auto& code = parsed.code;
    const Scheme scheme = make_scheme(code);
    Rng rng(seed);

    std::vector<std::vector<Elem>> messages;
    if (!messages_path.empty()) {
        const auto j = nlohmann::json::parse(read_file(messages_path));
        messages = j.get<std::vector<std::vector<Elem>>>();
    } else {
        messages.assign(code.params.K, std::vector<Elem>(code.params.L));
        for (auto& msg : messages)
            for (auto& sym : msg) sym = static_cast<Elem>(rng.uniform_below(code.field.q()));
    }

    const Transcript t = simulate_retrieval(scheme, messages, k_star, rng);
    const bool match = t.reconstructed == messages[k_star - 1];
    std::cout << "f = " << t.f << "\n";
    for (int db = 0; db < code.params.N; ++db)
        std::cout << "db " << db + 1 << ": query index " << t.queries[db] << " -> answer "
                  << t.answers[db] << "\n";
    std::cout << "reconstructed:";
    for (const auto v : t.reconstructed) std::cout << " " << v;
    std::cout << "\ndownload count: " << t.download_count << "\n"
              << (match ? "matches desired message" : "MISMATCH against desired message") << "\n";
    const auto report = report_file("transcript", transcript_json(t, match));
    if (!out_path.empty()) write_file(out_path, report);
    return match ? 0 : 1;
}

int cmd_tables(const std::string& out_dir, const std::string& golden_dir) {
    if (!out_dir.empty()) fs::create_directories(out_dir);
    int mismatches = 0;
    for (int i = 1; i <= kTableCount; ++i) {
        const std::string name = table_file_name(i);
        const std::string content = render_reference_table(i);
        if (!out_dir.empty()) write_file((fs::path(out_dir) / name).string(), content);
        if (!golden_dir.empty() && i <= kGoldenTableCount) {
            const std::string expected = read_file((fs::path(golden_dir) / name).string());
            if (content == expected) {
                std::cout << name << ": matches golden\n";
            } else {
                std::cout << name << ": MISMATCH against golden\n";
                ++mismatches;
            }
        }
    }
    if (out_dir.empty() && golden_dir.empty())
        for (int i = 1; i <= kTableCount; ++i) std::cout << render_reference_table(i) << "\n";
    return mismatches == 0 ? 0 : 1;
}

int cmd_sweep(const std::string& family_str, const std::string& range, int m_factor, int trials,
              std::uint64_t seed, const std::string& format, const std::string& out_path) {
    const Family family = family_from_name(family_str);
    const auto points = parse_range(range, m_factor);
    const auto rows = barrier_sweep(family, points, trials, seed);

    std::ostringstream table;
    if (format == "csv") {
        table << "param,q,rate,c_perp,margin,broken,mds,privacy,correctness,error\n";
        for (const auto& row : rows) {
            table << "\"" << row.param << "\"," << row.q << ",";
            if (row.barrier)
                table << row.barrier->rate.str() << "," << row.barrier->c_perp.str() << ","
                      << row.barrier->margin.str() << "," << (row.barrier->broken ? "yes" : "no");
            else
                table << ",,,";
            table << "," << (row.mds_ok ? "yes" : "no") << "," << (row.privacy_ok ? "yes" : "no")
                  << "," << (row.correctness_ok ? "yes" : "no") << ",\"" << row.error << "\"\n";
        }
    } else {
        table << "| param | q | rate | C_perp | margin | broken | mds | privacy | correctness |\n";
        table << "| --- | --- | --- | --- | --- | --- | --- | --- | --- |\n";
        for (const auto& row : rows) {
            table << "| " << row.param << " | " << row.q << " | ";
            if (row.barrier)
                table << row.barrier->rate.str() << " | " << row.barrier->c_perp.str() << " | "
                      << row.barrier->margin.str() << " | "
                      << (row.barrier->broken ? "yes" : "no");
            else
                table << "- | - | - | -";
            table << " | " << (row.mds_ok ? "yes" : "no") << " | "
                  << (row.privacy_ok ? "yes" : "no") << " | "
                  << (row.correctness_ok ? "yes" : "no") << " |";
            if (!row.error.empty()) table << " error: " << row.error;
            table << "\n";
        }
    }
    std::cout << table.str();
    if (!out_path.empty())
        write_file(out_path, report_file("sweep", sweep_json(family, rows)));
    for (const auto& row : rows)
        if (!row.row_ok()) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"joint MDS storage codes for private information retrieval"};
    app.require_subcommand(1);

    std::string family, field_spec, out_path, code_path, check = "all", messages_path;
    std::string range, format = "md", out_dir, golden_dir;
    int n = 0, k = 0, m_factor = 1, offset = 0, k_star = 1, trials = 20;
    std::uint64_t seed = 0;
    bool seed_given = false;
    long max_attempts = 256;
    std::uint32_t max_field = 1024;

    auto add_seed = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "RNG seed (default: $PIRJOINT_SEED or 0)")
            ->each([&](const std::string&) { seed_given = true; });
    };

    auto* build = app.add_subcommand("build", "construct a joint code and write its CodeFile");
    build->add_option("--family", family, "joint-2n2 | joint-parity | expanded-parity | expanded-2n2")
        ->required();
    build->add_option("--n", n, "N for joint-2n2, base N0 for expanded-2n2");
    build->add_option("--k", k, "K for the parity families");
    build->add_option("--m-factor", m_factor, "expansion multiplier m");
    build->add_option("--field", field_spec, "field order as q or p^m (optional)");
    build->add_option("--offset", offset, "exponent offset for joint-2n2 (1 = example tables)");
    add_seed(build);
    build->add_option("--max-attempts", max_attempts, "coefficient-search attempts per field");
    build->add_option("--max-field", max_field, "largest field order the search may reach");
    build->add_option("--out", out_path, "output CodeFile path (default stdout)");

    auto* verify = app.add_subcommand("verify", "run exact checks against a CodeFile");
    verify->add_option("--code", code_path, "CodeFile path")->required();
    verify->add_option("--check", check, "mds | privacy | correctness | barrier | all");
    verify->add_option("--trials", trials, "random message tuples per (k*, f)");
    add_seed(verify);
    verify->add_option("--out", out_path, "write the reports as a JSON array");

    auto* retrieve = app.add_subcommand("retrieve", "simulate one private retrieval");
    retrieve->add_option("--code", code_path, "CodeFile path")->required();
    retrieve->add_option("--k-star", k_star, "desired message index (1-based)")->required();
    add_seed(retrieve);
    retrieve->add_option("--messages", messages_path, "JSON K x L message file (default: random)");
    retrieve->add_option("--out", out_path, "write the transcript ReportFile");

    auto* tables = app.add_subcommand("tables", "regenerate the reference tables");
    tables->add_option("--out-dir", out_dir, "write table_*.md files here");
    tables->add_option("--golden", golden_dir, "compare tables I-IX byte-for-byte against this dir");

    auto* sweep = app.add_subcommand("sweep", "build + verify + barrier across a parameter range");
    sweep->add_option("--family", family, "family to sweep")->required();
    sweep->add_option("--range", range, "inclusive range A..B over N (2n2) or K (parity)")
        ->required();
    sweep->add_option("--m-factor", m_factor, "expansion multiplier for expanded families");
    sweep->add_option("--trials", trials, "correctness trials per row");
    add_seed(sweep);
    sweep->add_option("--format", format, "md | csv");
    sweep->add_option("--out", out_path, "write the sweep ReportFile");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!seed_given) seed = default_seed();
        if (build->parsed())
            return cmd_build(family, n, k, m_factor, field_spec, offset, seed, max_attempts,
                             max_field, out_path);
        if (verify->parsed()) return cmd_verify(code_path, check, trials, seed, out_path);
        if (retrieve->parsed())
            return cmd_retrieve(code_path, k_star, seed, messages_path, out_path);
        if (tables->parsed()) return cmd_tables(out_dir, golden_dir);
        if (sweep->parsed())
            return cmd_sweep(family, range, m_factor, trials, seed, format, out_path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
