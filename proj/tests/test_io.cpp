#include "isoprod/io.hpp"

#include "families.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace isoprod;
using namespace isoprod::testing;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

const std::string kData = ISOPROD_DATA_DIR;

}  // namespace

TEST_CASE("bundled documents parse") {
    io::ConstructionDocument doc = io::document_from_text(slurp(kData + "/z2cubed_g5_r1.json"));
    CHECK(doc.group == AbelianGroup({2, 2, 2}));
    CHECK(doc.cover_c.base_genus() == 1);
    CHECK(doc.cover_c.handle_images().has_value());
    CHECK(doc.cover_d.branch_count() == 6);
    REQUIRE(doc.expected.has_value());
    CHECK(doc.expected->chi == 2);
    CHECK(doc.expected->kernel_type == std::vector<long long>{2, 2});
    CHECK_FALSE(doc.eigen_table.has_value());

    io::ConstructionDocument ext = io::document_from_text(slurp(kData + "/z2sq_g3_n1.json"));
    REQUIRE(ext.eigen_table.has_value());
    CHECK(ext.eigen_table->entries.size() == 2);
    CHECK(ext.expected->extended_trivial == true);
}

TEST_CASE("document serialization is canonical and idempotent") {
    for (const char* name : {"/z2cubed_g5_r1.json", "/z2cubed_g3_r2.json", "/z2sq_g3_n1.json",
                             "/nonfree_pair.json"}) {
        std::string text = slurp(kData + name);
        io::ConstructionDocument doc = io::document_from_text(text);
        std::string once = io::document_to_text(doc);
        io::ConstructionDocument reparsed = io::document_from_text(once);
        CHECK(reparsed == doc);
        CHECK(io::document_to_text(reparsed) == once);
    }
}

TEST_CASE("record json round trip") {
    ProductQuotient s = genus3_family(1);
    SurfaceRecord rec = invariants(s);
    nlohmann::json j = io::record_json(rec);
    SurfaceRecord back = io::record_from(j, s.group());
    CHECK(back == rec);
}

TEST_CASE("fiber json round trip") {
    std::vector<FiberModel> models{
        SmoothFiber{4},
        MultipleOfSmooth{2, 3},
        ReducedConfig{{1, 2}, {OrdinaryPoint{{1, 1}}}},
        MultipleOfReduced{2, ReducedConfig{{1}, {OrdinaryPoint{{2}}}}},
        AssertedCusp{},
    };
    for (const FiberModel& f : models)
        CHECK(io::fiber_from(io::fiber_json(f)) == f);
    CHECK(io::fiber_from(nlohmann::json{{"variant", "smooth"}}, 5) == FiberModel{SmoothFiber{5}});
    CHECK_THROWS_AS(io::fiber_from(nlohmann::json{{"variant", "smooth"}}), io::SchemaError);
    CHECK_THROWS_AS(io::fiber_from(nlohmann::json{{"variant", "spiky"}}), io::SchemaError);
}

TEST_CASE("eigen table json round trip") {
    AbelianGroup g({2, 2});
    EigenTable t = extended_family_table();
    CHECK(io::eigen_table_from(io::eigen_table_json(t), g) == t);
}

TEST_CASE("census entry lines parse back to equal records") {
    SearchParams params;
    params.groups = {AbelianGroup({2, 2})};
    for (const CensusEntry& e : run_census(params)) {
        nlohmann::json j = nlohmann::json::parse(io::census_entry_line(e));
        CHECK(io::group_from(j["group"]) == e.group);
        CHECK(io::cover_from(j["cover_c"], e.group) == e.cover_c);
        CHECK(io::cover_from(j["cover_d"], e.group) == e.cover_d);
        CHECK(j["free"].get<bool>() == e.free);
        REQUIRE(e.record.has_value());
        CHECK(io::record_from(j["record"], e.group) == *e.record);
    }
}

TEST_CASE("group shorthand parsing") {
    CHECK(io::parse_group_shorthand("Z2^3") == AbelianGroup({2, 2, 2}));
    CHECK(io::parse_group_shorthand("Z4") == AbelianGroup({4}));
    CHECK(io::parse_group_shorthand("Z2xZ4") == AbelianGroup({2, 4}));
    CHECK(io::parse_group_shorthand("z2*z4") == AbelianGroup({2, 4}));
    CHECK(io::parse_group_shorthand("Z4xZ2") == AbelianGroup({2, 4}));
    CHECK_THROWS_AS(io::parse_group_shorthand(""), io::SchemaError);
    CHECK_THROWS_AS(io::parse_group_shorthand("Q8"), io::SchemaError);
    CHECK_THROWS_AS(io::parse_group_shorthand("Z1"), io::SchemaError);
    CHECK_THROWS_AS(io::parse_group_shorthand("Z2^"), io::SchemaError);
    CHECK_THROWS_AS(io::parse_group_shorthand("Z2x"), io::SchemaError);
}

TEST_CASE("schema violations are rejected") {
    CHECK_THROWS_AS(io::document_from_text("not json"), io::SchemaError);
    CHECK_THROWS_AS(io::document_from_text("[1,2]"), io::SchemaError);
    CHECK_THROWS_AS(io::document_from_text(R"({"schema":99,"group":[2],)"
                                           R"("cover_c":{},"cover_d":{}})"),
                    io::SchemaError);
    // element vector too long for the group
    CHECK_THROWS_AS(io::document_from_text(R"({"schema":1,"group":[2],)"
                                           R"("cover_c":{"base_genus":1,"branch":[[1,0]]},)"
                                           R"("cover_d":{"base_genus":1,"branch":[]}})"),
                    io::SchemaError);
    // handle count mismatch surfaces as a schema error
    CHECK_THROWS_AS(io::document_from_text(R"({"schema":1,"group":[2],)"
                                           R"("cover_c":{"base_genus":1,"branch":[],)"
                                           R"("handles":[[1]]},)"
                                           R"("cover_d":{"base_genus":1,"branch":[]}})"),
                    io::SchemaError);
    CHECK_THROWS_AS(io::rotation_from(nlohmann::json::array({1, 0})), io::SchemaError);
    CHECK_THROWS_AS(io::rotation_from(nlohmann::json::array({1})), io::SchemaError);
}
