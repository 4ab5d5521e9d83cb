#include "isoprod/io.hpp"

#include <cctype>

namespace isoprod::io {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end())
        throw SchemaError(std::string("missing field '") + key + "'");
    return *it;
}

long long int_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer())
        throw SchemaError(std::string("field '") + key + "' must be an integer");
    return v.get<long long>();
}

}  // namespace

json element_json(const Element& e) {
    return json(e.residues);
}

Element element_from(const json& j, const AbelianGroup& group) {
    if (!j.is_array())
        throw SchemaError("element must be an integer array");
    Element e;
    for (const json& v : j) {
        if (!v.is_number_integer())
            throw SchemaError("element entries must be integers");
        e.residues.push_back(v.get<int>());
    }
    if (!group.contains(e))
        throw SchemaError("element " + j.dump() + " does not fit group " + group.name());
    return e;
}

json group_json(const AbelianGroup& g) {
    return json(g.invariant_factors());
}

AbelianGroup group_from(const json& j) {
    if (!j.is_array())
        throw SchemaError("group must be an array of cyclic orders");
    std::vector<long long> factors;
    for (const json& v : j) {
        if (!v.is_number_integer() || v.get<long long>() < 1)
            throw SchemaError("group factors must be positive integers");
        factors.push_back(v.get<long long>());
    }
    return AbelianGroup(factors);
}

json rotation_json(const Rotation& r) {
    return json::array({r.num(), r.den()});
}

Rotation rotation_from(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw SchemaError("rotation number must be a [numerator, denominator] pair");
    if (j[1].get<long long>() == 0)
        throw SchemaError("rotation number with zero denominator");
    return Rotation(j[0].get<long long>(), j[1].get<long long>());
}

json cover_json(const CoverDatum& d) {
    json j;
    j["base_genus"] = d.base_genus();
    json branch = json::array();
    for (const Element& e : d.branch_elements())
        branch.push_back(element_json(e));
    j["branch"] = branch;
    if (d.handle_images()) {
        json handles = json::array();
        for (const Element& e : *d.handle_images())
            handles.push_back(element_json(e));
        j["handles"] = handles;
    }
    return j;
}

CoverDatum cover_from(const json& j, const AbelianGroup& group) {
    if (!j.is_object())
        throw SchemaError("cover must be an object");
    long long h = int_field(j, "base_genus");
    if (h < 0)
        throw SchemaError("base_genus must be nonnegative");
    const json& branch = field(j, "branch");
    if (!branch.is_array())
        throw SchemaError("branch must be an array of elements");
    std::vector<Element> branches;
    for (const json& e : branch)
        branches.push_back(element_from(e, group));
    std::optional<std::vector<Element>> handles;
    if (j.contains("handles")) {
        handles.emplace();
        for (const json& e : j["handles"])
            handles->push_back(element_from(e, group));
    }
    try {
        return CoverDatum(group, static_cast<int>(h), std::move(branches), std::move(handles));
    } catch (const std::invalid_argument& err) {
        throw SchemaError(err.what());
    }
}

json eigen_table_json(const EigenTable& t) {
    json entries = json::array();
    for (const auto& [chi, scalars] : t.entries) {
        json e;
        e["character"] = json(chi.dual_residues);
        if (scalars.v)
            e["v"] = rotation_json(*scalars.v);
        if (scalars.u)
            e["u"] = rotation_json(*scalars.u);
        entries.push_back(std::move(e));
    }
    return entries;
}

EigenTable eigen_table_from(const json& j, const AbelianGroup& group) {
    if (!j.is_array())
        throw SchemaError("eigen_table must be an array of entries");
    EigenTable t;
    for (const json& e : j) {
        const json& c = field(e, "character");
        Character chi;
        for (const json& v : c) {
            if (!v.is_number_integer())
                throw SchemaError("character entries must be integers");
            chi.dual_residues.push_back(v.get<int>());
        }
        if (!group.contains(chi))
            throw SchemaError("character " + c.dump() + " does not fit group " + group.name());
        EigenScalars scalars;
        if (e.contains("v"))
            scalars.v = rotation_from(e["v"]);
        if (e.contains("u"))
            scalars.u = rotation_from(e["u"]);
        if (!t.entries.emplace(std::move(chi), scalars).second)
            throw SchemaError("duplicate eigen table entry for " + c.dump());
    }
    return t;
}

json record_json(const SurfaceRecord& r) {
    json j;
    j["g_c"] = r.g_c;
    j["g_d"] = r.g_d;
    j["q"] = r.q;
    j["chi"] = r.chi;
    j["k2"] = r.k2;
    j["pg"] = r.pg;
    j["e"] = r.e;
    j["b2"] = r.b2;
    json kernel;
    json elems = json::array();
    for (const Element& e : r.trivial_kernel.elements())
        elems.push_back(element_json(e));
    kernel["elements"] = elems;
    kernel["order"] = r.trivial_kernel.order();
    kernel["type"] = group_json(r.trivial_kernel_type);
    j["kernel"] = kernel;
    if (r.albanese_fiber_genus)
        j["albanese_fiber_genus"] = *r.albanese_fiber_genus;
    return j;
}

SurfaceRecord record_from(const json& j, const AbelianGroup& group) {
    const json& kernel = field(j, "kernel");
    std::vector<Element> elems;
    for (const json& e : field(kernel, "elements"))
        elems.push_back(element_from(e, group));
    SurfaceRecord r{int_field(j, "g_c"),
                    int_field(j, "g_d"),
                    int_field(j, "q"),
                    int_field(j, "chi"),
                    int_field(j, "k2"),
                    int_field(j, "pg"),
                    int_field(j, "e"),
                    int_field(j, "b2"),
                    Subgroup(group, std::move(elems)),
                    group_from(field(kernel, "type")),
                    std::nullopt};
    if (j.contains("albanese_fiber_genus"))
        r.albanese_fiber_genus = int_field(j, "albanese_fiber_genus");
    if (int_field(kernel, "order") != r.trivial_kernel.order())
        throw SchemaError("kernel order does not match its element list");
    return r;
}

json fiber_json(const FiberModel& f) {
    json j;
    if (const auto* s = std::get_if<SmoothFiber>(&f)) {
        j["variant"] = "smooth";
        j["genus"] = s->genus;
    } else if (const auto* m = std::get_if<MultipleOfSmooth>(&f)) {
        j["variant"] = "multiple_smooth";
        j["m"] = m->multiplicity;
        j["h"] = m->component_genus;
    } else if (const auto* c = std::get_if<ReducedConfig>(&f)) {
        j["variant"] = "reduced";
        j["components"] = json(c->component_genera);
        json points = json::array();
        for (const OrdinaryPoint& p : c->points)
            points.push_back(json{{"branches", p.branches}});
        j["points"] = points;
    } else if (const auto* mr = std::get_if<MultipleOfReduced>(&f)) {
        j["variant"] = "multiple_reduced";
        j["m"] = mr->multiplicity;
        j["config"] = fiber_json(mr->config);
        j["config"].erase("variant");
    } else {
        j["variant"] = "asserted_cusp";
    }
    return j;
}

namespace {

ReducedConfig config_from(const json& j) {
    ReducedConfig c;
    for (const json& g : field(j, "components")) {
        if (!g.is_number_integer())
            throw SchemaError("component genera must be integers");
        c.component_genera.push_back(g.get<long long>());
    }
    for (const json& p : field(j, "points")) {
        OrdinaryPoint point;
        for (const json& b : field(p, "branches")) {
            if (!b.is_number_integer())
                throw SchemaError("branch counts must be integers");
            point.branches.push_back(b.get<int>());
        }
        c.points.push_back(std::move(point));
    }
    return c;
}

}  // namespace

FiberModel fiber_from(const json& j, std::optional<long long> default_smooth_genus) {
    std::string variant = field(j, "variant").get<std::string>();
    if (variant == "smooth") {
        if (j.contains("genus"))
            return SmoothFiber{int_field(j, "genus")};
        if (default_smooth_genus)
            return SmoothFiber{*default_smooth_genus};
        throw SchemaError("smooth fiber needs a genus");
    }
    if (variant == "multiple_smooth")
        return MultipleOfSmooth{static_cast<int>(int_field(j, "m")), int_field(j, "h")};
    if (variant == "reduced")
        return config_from(j);
    if (variant == "multiple_reduced")
        return MultipleOfReduced{static_cast<int>(int_field(j, "m")),
                                 config_from(field(j, "config"))};
    if (variant == "asserted_cusp")
        return AssertedCusp{};
    throw SchemaError("unknown fiber variant '" + variant + "'");
}

ConstructionDocument document_from_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& err) {
        throw SchemaError(std::string("not valid JSON: ") + err.what());
    }
    if (!j.is_object())
        throw SchemaError("document must be a JSON object");
    if (int_field(j, "schema") != kSchemaVersion)
        throw SchemaError("unsupported schema version");
    AbelianGroup group = group_from(field(j, "group"));
    CoverDatum cover_c = cover_from(field(j, "cover_c"), group);
    CoverDatum cover_d = cover_from(field(j, "cover_d"), group);
    ConstructionDocument doc{group, std::move(cover_c), std::move(cover_d), std::nullopt,
                             std::nullopt};
    if (j.contains("eigen_table"))
        doc.eigen_table = eigen_table_from(j["eigen_table"], group);
    if (j.contains("expected")) {
        const json& e = j["expected"];
        ExpectedBlock block;
        auto opt_int = [&](const char* key) -> std::optional<long long> {
            if (!e.contains(key))
                return std::nullopt;
            return int_field(e, key);
        };
        block.g_c = opt_int("g_c");
        block.g_d = opt_int("g_d");
        block.q = opt_int("q");
        block.chi = opt_int("chi");
        block.k2 = opt_int("k2");
        block.pg = opt_int("pg");
        block.e = opt_int("e");
        block.b2 = opt_int("b2");
        block.h2 = opt_int("h2");
        block.albanese_fiber_genus = opt_int("albanese_fiber_genus");
        block.kernel_order = opt_int("kernel_order");
        block.euler_ledger = opt_int("euler_ledger");
        if (e.contains("kernel_type")) {
            block.kernel_type = std::vector<long long>();
            for (const json& v : e["kernel_type"])
                block.kernel_type->push_back(v.get<long long>());
        }
        if (e.contains("kernel_elements")) {
            block.kernel_elements = std::vector<Element>();
            for (const json& v : e["kernel_elements"])
                block.kernel_elements->push_back(element_from(v, group));
        }
        if (e.contains("fiber_defects")) {
            block.fiber_defects = std::vector<long long>();
            for (const json& v : e["fiber_defects"])
                block.fiber_defects->push_back(v.get<long long>());
        }
        if (e.contains("extended_trivial")) {
            if (!e["extended_trivial"].is_boolean())
                throw SchemaError("extended_trivial must be a boolean");
            block.extended_trivial = e["extended_trivial"].get<bool>();
        }
        doc.expected = std::move(block);
    }
    return doc;
}

std::string document_to_text(const ConstructionDocument& doc) {
    json j;
    j["schema"] = kSchemaVersion;
    j["group"] = group_json(doc.group);
    j["cover_c"] = cover_json(doc.cover_c);
    j["cover_d"] = cover_json(doc.cover_d);
    if (doc.eigen_table)
        j["eigen_table"] = eigen_table_json(*doc.eigen_table);
    if (doc.expected) {
        const ExpectedBlock& b = *doc.expected;
        json e;
        auto put = [&e](const char* key, const std::optional<long long>& v) {
            if (v)
                e[key] = *v;
        };
        put("g_c", b.g_c);
        put("g_d", b.g_d);
        put("q", b.q);
        put("chi", b.chi);
        put("k2", b.k2);
        put("pg", b.pg);
        put("e", b.e);
        put("b2", b.b2);
        put("h2", b.h2);
        put("albanese_fiber_genus", b.albanese_fiber_genus);
        put("kernel_order", b.kernel_order);
        put("euler_ledger", b.euler_ledger);
        if (b.kernel_type)
            e["kernel_type"] = json(*b.kernel_type);
        if (b.kernel_elements) {
            json arr = json::array();
            for (const Element& el : *b.kernel_elements)
                arr.push_back(element_json(el));
            e["kernel_elements"] = arr;
        }
        if (b.fiber_defects)
            e["fiber_defects"] = json(*b.fiber_defects);
        if (b.extended_trivial)
            e["extended_trivial"] = *b.extended_trivial;
        j["expected"] = e;
    }
    return j.dump(2) + "\n";
}

std::string census_entry_line(const CensusEntry& entry) {
    json j;
    j["group"] = group_json(entry.group);
    j["cover_c"] = cover_json(entry.cover_c);
    j["cover_d"] = cover_json(entry.cover_d);
    j["free"] = entry.free;
    j["anomaly"] = entry.anomaly;
    if (entry.record)
        j["record"] = record_json(*entry.record);
    if (entry.witness)
        j["witness"] = element_json(*entry.witness);
    return j.dump();
}

AbelianGroup parse_group_shorthand(const std::string& text) {
    std::vector<long long> factors;
    size_t i = 0;
    auto parse_int = [&]() -> long long {
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        if (start == i)
            throw SchemaError("bad group shorthand '" + text + "'");
        return std::stoll(text.substr(start, i - start));
    };
    while (i < text.size()) {
        if (text[i] != 'Z' && text[i] != 'z')
            throw SchemaError("bad group shorthand '" + text + "'");
        ++i;
        long long n = parse_int();
        long long count = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            count = parse_int();
        }
        if (n < 2 || count < 1)
            throw SchemaError("bad group shorthand '" + text + "'");
        for (long long k = 0; k < count; ++k)
            factors.push_back(n);
        if (i < text.size()) {
            if (text[i] != 'x' && text[i] != 'X' && text[i] != '*')
                throw SchemaError("bad group shorthand '" + text + "'");
            ++i;
            if (i == text.size())
                throw SchemaError("bad group shorthand '" + text + "'");
        }
    }
    if (factors.empty())
        throw SchemaError("bad group shorthand '" + text + "'");
    return AbelianGroup(factors);
}

}  // namespace isoprod::io
