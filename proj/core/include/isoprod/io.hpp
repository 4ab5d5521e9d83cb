#pragma once

#include "isoprod/search.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace isoprod::io {

/// Raised for malformed documents (bad JSON, wrong schema version, element
/// vectors that do not fit the group, ...).
class SchemaError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Asserted invariants carried by a construction document for golden checks.
struct ExpectedBlock {
    std::optional<long long> g_c, g_d, q, chi, k2, pg, e, b2, h2;
    std::optional<long long> albanese_fiber_genus, kernel_order, euler_ledger;
    std::optional<std::vector<long long>> kernel_type;
    std::optional<std::vector<Element>> kernel_elements;
    std::optional<std::vector<long long>> fiber_defects;
    std::optional<bool> extended_trivial;

    friend bool operator==(const ExpectedBlock&, const ExpectedBlock&) = default;
};

struct ConstructionDocument {
    AbelianGroup group;
    CoverDatum cover_c;
    CoverDatum cover_d;
    std::optional<EigenTable> eigen_table;
    std::optional<ExpectedBlock> expected;

    friend bool operator==(const ConstructionDocument&, const ConstructionDocument&) = default;
};

inline constexpr int kSchemaVersion = 1;

// JSON pieces. Parsing is context-dependent (element vectors are checked
// against the group), so these are named functions rather than ADL hooks.
nlohmann::json element_json(const Element& e);
Element element_from(const nlohmann::json& j, const AbelianGroup& group);
nlohmann::json group_json(const AbelianGroup& g);
AbelianGroup group_from(const nlohmann::json& j);
nlohmann::json rotation_json(const Rotation& r);
Rotation rotation_from(const nlohmann::json& j);
nlohmann::json cover_json(const CoverDatum& d);
CoverDatum cover_from(const nlohmann::json& j, const AbelianGroup& group);
nlohmann::json eigen_table_json(const EigenTable& t);
EigenTable eigen_table_from(const nlohmann::json& j, const AbelianGroup& group);
nlohmann::json record_json(const SurfaceRecord& r);
SurfaceRecord record_from(const nlohmann::json& j, const AbelianGroup& group);
nlohmann::json fiber_json(const FiberModel& f);
FiberModel fiber_from(const nlohmann::json& j,
                      std::optional<long long> default_smooth_genus = std::nullopt);

ConstructionDocument document_from_text(const std::string& text);
std::string document_to_text(const ConstructionDocument& doc);

/// One census entry as a single JSON line (stable key order, no whitespace).
std::string census_entry_line(const CensusEntry& entry);

/// "Z2^3", "Z4", "Z2xZ4" -> invariant factors. Throws SchemaError.
AbelianGroup parse_group_shorthand(const std::string& text);

}  // namespace isoprod::io
