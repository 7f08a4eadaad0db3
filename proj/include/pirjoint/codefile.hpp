#ifndef PIRJOINT_CODEFILE_HPP
#define PIRJOINT_CODEFILE_HPP

#include <string>

#include "pirjoint/verify.hpp"

#include <nlohmann/json.hpp>

namespace pirjoint {

inline constexpr int kCodeFileSchemaVersion = 1;
inline constexpr const char* kToolVersion = "pirjoint 1.0.0";

struct Provenance {
    std::uint64_t seed = 0;
    long attempts = 0;
    std::string tool_version = kToolVersion;
};

/// Serialized code: field spec (modulus digits little-endian over GF(p),
/// alpha canonical), params, generator grids of canonical integers, labels,
/// provenance. Serialization is byte-stable: ordered keys, two-space indent,
/// trailing newline.
std::string codefile_to_json(const JointCode& code, const Provenance& prov);

struct ParsedCodeFile {
    JointCode code;
    Provenance provenance;
    int schema_version = 0;
};

/// Parses and validates a CodeFile. The field spec must be the canonical
/// one for (p, m); entries must be in range; shapes must match the family.
ParsedCodeFile codefile_from_json(const std::string& text);

// ReportFile payloads. Rationals serialize as {"num", "den"}.
nlohmann::ordered_json rational_json(const Rational& r);
nlohmann::ordered_json mds_report_json(const MdsReport& r);
nlohmann::ordered_json privacy_report_json(const PrivacyReport& r);
nlohmann::ordered_json correctness_report_json(const CorrectnessReport& r);
nlohmann::ordered_json barrier_report_json(const BarrierReport& r);
nlohmann::ordered_json transcript_json(const Transcript& t, bool matches_desired);
nlohmann::ordered_json sweep_json(Family family, const std::vector<SweepRow>& rows);

/// Wraps a payload as {"kind": ..., "payload": ...} with stable formatting.
std::string report_file(const std::string& kind, const nlohmann::ordered_json& payload);

}  // namespace pirjoint

#endif
