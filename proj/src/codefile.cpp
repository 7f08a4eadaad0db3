#include "pirjoint/codefile.hpp"

namespace pirjoint {

using nlohmann::ordered_json;

namespace {

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string codefile_to_json(const JointCode& code, const Provenance& prov) {
    ordered_json j;
    j["schema_version"] = kCodeFileSchemaVersion;
    j["field"] = {{"p", code.field.p()},
                  {"m", code.field.m()},
                  {"modulus", code.field.modulus()},
                  {"alpha", code.field.alpha()}};
    j["params"] = {{"K", code.params.K},     {"N", code.params.N},
                   {"T", code.params.T},     {"L", code.params.L},
                   {"M", code.params.M},     {"family", family_name(code.params.family)},
                   {"m_factor", code.params.m_factor}};
    ordered_json gens = ordered_json::array();
    for (const auto& g : code.generators) {
        ordered_json grid = ordered_json::array();
        for (std::size_t r = 0; r < g.rows(); ++r) grid.push_back(g.row(r));
        gens.push_back(grid);
    }
    j["generators"] = gens;
    j["labels"] = code.labels;
    j["provenance"] = {{"seed", prov.seed},
                       {"attempts", prov.attempts},
                       {"tool_version", prov.tool_version}};
    return dump(j);
}

ParsedCodeFile codefile_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParamError(std::string("CodeFile: malformed JSON: ") + e.what());
    }
    try {
        ParsedCodeFile out;
        out.schema_version = j.at("schema_version").get<int>();
        if (out.schema_version != kCodeFileSchemaVersion)
            throw ParamError("CodeFile: unsupported schema_version");

        const auto& jf = j.at("field");
        const auto p = jf.at("p").get<std::uint32_t>();
        const auto m = jf.at("m").get<std::uint32_t>();
        const Field field = make_field(p, m);
        if (jf.at("modulus").get<std::vector<std::uint32_t>>() != field.modulus() ||
            jf.at("alpha").get<Elem>() != field.alpha())
            throw ParamError("CodeFile: field spec is not the canonical GF(" +
                             std::to_string(p) + "^" + std::to_string(m) + ")");

        const auto& jp = j.at("params");
        SystemParams params;
        params.K = jp.at("K").get<int>();
        params.N = jp.at("N").get<int>();
        params.T = jp.at("T").get<int>();
        params.L = jp.at("L").get<int>();
        params.M = jp.at("M").get<int>();
        params.family = family_from_name(jp.at("family").get<std::string>());
        params.m_factor = jp.at("m_factor").get<int>();
        params.validate();

        JointCode code;
        code.params = params;
        code.field = field;
        const auto& gens = j.at("generators");
        if (static_cast<int>(gens.size()) != params.N)
            throw ParamError("CodeFile: expected N generator grids");
        for (const auto& grid : gens) {
            if (static_cast<int>(grid.size()) != params.M)
                throw ParamError("CodeFile: expected M rows per generator");
            Mat g(params.M, static_cast<std::size_t>(params.K) * params.L);
            for (int r = 0; r < params.M; ++r) {
                const auto row = grid.at(r).get<std::vector<Elem>>();
                if (row.size() != g.cols()) throw ParamError("CodeFile: bad generator row length");
                for (std::size_t c = 0; c < row.size(); ++c) {
                    if (!field.is_valid(row[c]))
                        throw ParamError("CodeFile: generator entry out of field range");
                    g.at(r, c) = row[c];
                }
            }
            code.generators.push_back(std::move(g));
        }
        if (j.contains("labels") && !j.at("labels").is_null()) {
            code.labels = j.at("labels").get<std::vector<std::vector<std::string>>>();
            if (static_cast<int>(code.labels.size()) != params.N)
                throw ParamError("CodeFile: labels shape mismatch");
            for (const auto& per_db : code.labels)
                if (static_cast<int>(per_db.size()) != params.M)
                    throw ParamError("CodeFile: labels shape mismatch");
        }
        const auto& jprov = j.at("provenance");
        out.provenance.seed = jprov.at("seed").get<std::uint64_t>();
        out.provenance.attempts = jprov.at("attempts").get<long>();
        out.provenance.tool_version = jprov.at("tool_version").get<std::string>();
        out.code = std::move(code);
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw ParamError(std::string("CodeFile: schema error: ") + e.what());
    }
}

ordered_json rational_json(const Rational& r) {
    return ordered_json{{"num", r.num()}, {"den", r.den()}};
}

ordered_json mds_report_json(const MdsReport& r) {
    return ordered_json{{"ok", r.ok},
                        {"subsets_checked", r.subsets_checked},
                        {"failing_subsets", r.failing_subsets}};
}

ordered_json privacy_report_json(const PrivacyReport& r) {
    ordered_json per_db = ordered_json::array();
    for (std::size_t db = 0; db < r.per_db_distributions.size(); ++db)
        per_db.push_back(ordered_json{{"db", db + 1},
                                      {"distributions", r.per_db_distributions[db]}});
    ordered_json violation;
    if (r.first_violation)
        violation = ordered_json{{"db", r.first_violation->db},
                                 {"k", r.first_violation->k},
                                 {"k_prime", r.first_violation->k_prime}};
    return ordered_json{
        {"ok", r.ok}, {"per_db_distributions", per_db}, {"first_violation", violation}};
}

ordered_json correctness_report_json(const CorrectnessReport& r) {
    ordered_json value_failures = ordered_json::array();
    for (const auto& vf : r.value_failures)
        value_failures.push_back(ordered_json{{"k", vf.k}, {"f", vf.f}, {"trial", vf.trial}});
    return ordered_json{{"ok", r.ok},
                        {"pairs_checked", r.pairs_checked},
                        {"trials", r.trials},
                        {"structural_failures", r.structural_failures},
                        {"value_failures", value_failures}};
}

ordered_json barrier_report_json(const BarrierReport& r) {
    return ordered_json{{"rate", rational_json(r.rate)},
                        {"c_perp", rational_json(r.c_perp)},
                        {"margin", rational_json(r.margin)},
                        {"broken", r.broken}};
}

ordered_json transcript_json(const Transcript& t, bool matches_desired) {
    return ordered_json{{"k_star", t.k_star},
                        {"f", t.f},
                        {"queries", t.queries},
                        {"answers", t.answers},
                        {"reconstructed", t.reconstructed},
                        {"download_count", t.download_count},
                        {"matches_desired", matches_desired}};
}

ordered_json sweep_json(Family family, const std::vector<SweepRow>& rows) {
    ordered_json jrows = ordered_json::array();
    for (const auto& row : rows) {
        ordered_json jr;
        jr["param"] = row.param;
        jr["q"] = row.q;
        if (row.barrier) {
            jr["rate"] = rational_json(row.barrier->rate);
            jr["c_perp"] = rational_json(row.barrier->c_perp);
            jr["margin"] = rational_json(row.barrier->margin);
            jr["broken"] = row.barrier->broken;
        }
        jr["mds_ok"] = row.mds_ok;
        jr["privacy_ok"] = row.privacy_ok;
        jr["correctness_ok"] = row.correctness_ok;
        if (row.attempts > 0) jr["attempts"] = row.attempts;
        if (!row.error.empty()) jr["error"] = row.error;
        jr["row_ok"] = row.row_ok();
        jrows.push_back(std::move(jr));
    }
    return ordered_json{{"family", family_name(family)}, {"rows", jrows}};
}

std::string report_file(const std::string& kind, const ordered_json& payload) {
    return dump(ordered_json{{"kind", kind}, {"payload", payload}});
}

}  // namespace pirjoint
