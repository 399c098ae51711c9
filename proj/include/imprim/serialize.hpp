#pragma once

#include <json.hpp>
#include <string>

#include "imprim/mackey.hpp"

namespace imprim {

using Json = nlohmann::json;

// Complex entries are [re, im] pairs; matrices are row-major arrays of rows.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);
Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j);

// {"name": str, "order": n, "cayley": [[ids]]}
Json group_to_json(const FiniteGroup& g);
GroupPtr group_from_json(const Json& j);

// {"elements": [ids]} relative to a parent group.
Json subgroup_to_json(const Subgroup& h);
Subgroup subgroup_from_json(const Json& j, const GroupPtr& parent);

// {"group": name-or-inline, "dim": d, "matrices": [...]}
Json rep_to_json(const UnitaryRep& rep);
UnitaryRep rep_from_json(const Json& j);

Json theta_to_json(const ThetaWeight& theta);
ThetaWeight theta_from_json(const Json& j, const Subgroup& sub);

// {"rep": ..., "coset_space": {"group": ..., "subgroup": ...}, "atoms": [...]}
Json povm_to_json(const Povm& e);
Povm povm_from_json(const Json& j);

// {"A": matrix, "sigma": rep, "theta": values, ...}
Json admissible_to_json(const AdmissibleMap& a);
AdmissibleMap admissible_from_json(const Json& j, const UnitaryRep& pi);

// Canonical serialization: sorted keys (nlohmann objects are ordered maps),
// floats printed with 17 significant digits, no locale dependence. Reports
// compared byte-for-byte rely on this.
std::string canonical_dump(const Json& j, int indent = 2);

// FNV-1a 64-bit digest of the canonical form, as fixed-width hex.
std::string json_digest(const Json& j);

struct Report {
  std::string command;
  Json inputs;  // resolved flags and file digests
  struct Check {
    std::string name;
    bool pass = false;
    Json data;
  };
  std::vector<Check> checks;
  Json extra;  // command-specific top-level payload (merged into the JSON)
  std::uint64_t seed = 0;
  double tolerance = kDefaultTol;

  bool pass() const;
  Json to_json() const;
  std::string to_text(double wall_ms) const;
};

constexpr const char* kToolVersion = "imprim 0.1.0";

// Writes the canonical JSON (or the text rendering) to a path, "-" meaning
// stdout. Throws IoError when the destination cannot be written.
void save_report(const Report& report, const std::string& path,
                 const std::string& format, double wall_ms);

}  // namespace imprim
