#include <fstream>
#include <regex>

#include "ahilb/report.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace ahilb;

namespace {

// Validator for the subset of JSON Schema used by the report schema.
struct Validator {
    Json root;
    std::vector<std::string> errors;

    static bool has_type(const Json& v, const std::string& t) {
        if (t == "object") return v.is_object();
        if (t == "array") return v.is_array();
        if (t == "string") return v.is_string();
        if (t == "integer") return v.is_number_integer();
        if (t == "boolean") return v.is_boolean();
        if (t == "null") return v.is_null();
        return false;
    }

    const Json& resolve(const Json& s) const {
        if (!s.contains("$ref")) return s;
        std::string ref = s["$ref"];
        REQUIRE(ref.rfind("#/$defs/", 0) == 0);
        return root["$defs"][ref.substr(8)];
    }

    void check(const Json& v, const Json& schema, const std::string& path) {
        const Json& s = resolve(schema);
        if (s.contains("type")) {
            bool ok = false;
            if (s["type"].is_array()) {
                for (const auto& t : s["type"]) ok |= has_type(v, t);
            } else {
                ok = has_type(v, s["type"]);
            }
            if (!ok) {
                errors.push_back(path + ": wrong type");
                return;
            }
        }
        if (s.contains("enum") && std::find(s["enum"].begin(), s["enum"].end(), v) == s["enum"].end())
            errors.push_back(path + ": not in enum");
        if (v.is_number_integer()) {
            if (s.contains("minimum") && v.get<Int>() < s["minimum"].get<Int>()) errors.push_back(path + ": below minimum");
            if (s.contains("maximum") && v.get<Int>() > s["maximum"].get<Int>()) errors.push_back(path + ": above maximum");
        }
        if (v.is_array()) {
            if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>()) errors.push_back(path + ": too short");
            if (s.contains("maxItems") && v.size() > s["maxItems"].get<std::size_t>()) errors.push_back(path + ": too long");
            if (s.contains("items"))
                for (std::size_t i = 0; i < v.size(); ++i) check(v[i], s["items"], path + "/" + std::to_string(i));
        }
        if (v.is_object()) {
            if (s.contains("required"))
                for (const auto& k : s["required"])
                    if (!v.contains(k.get<std::string>())) errors.push_back(path + ": missing " + k.get<std::string>());
            if (s.contains("properties"))
                for (const auto& [k, sub] : s["properties"].items())
                    if (v.contains(k)) check(v[k], sub, path + "/" + k);
        }
    }
};

Validator schema_validator() {
    std::ifstream f(AHILB_SCHEMA_PATH);
    REQUIRE(f.good());
    Validator v;
    v.root = Json::parse(f);
    return v;
}

std::vector<std::string> validate(const Json& doc) {
    Validator v = schema_validator();
    v.check(doc, v.root, "");
    return v.errors;
}

std::size_t count(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
    return n;
}

const char* const kFixtures[] = {"1/11(1,2,8)", "1/15(1,2,12)", "1/30(25,2,3)", "1/2(1,1,0)+1/2(0,1,1)",
                                 "1/3(1,2,0)+1/3(0,1,2)", "1/1(0,0,0)", "1/7(1,2,4)", "1/101(1,7,93)"};

}  // namespace

TEST_CASE("report of 1/11(1,2,8)") {
    Json doc = report_json(analyze("1/11(1,2,8)"));
    CHECK(doc["group"] == "1/11(1,2,8)");
    CHECK(doc["denominator"] == 11);
    CHECK(doc["order"] == 11);
    CHECK(doc["cyclic_word"] == Json::array({1, 3, 4, 1, 2, 3, 2, 2, 1, 6, 2}));
    CHECK(doc["corners"][0]["strengths"] == Json::array({3, 4}));
    CHECK(doc["corners"][1]["strengths"] == Json::array({2, 3, 2, 2}));
    CHECK(doc["corners"][2]["strengths"] == Json::array({6, 2}));
    CHECK(doc["partition"].size() == 8);
    CHECK(doc["champions"]["kind"] == "concurrent");
    CHECK(doc["champions"]["point"] == Json::array({3, 6, 2}));
    CHECK(!doc.contains("long_side"));
    CHECK(doc["fan"]["cones"].size() == 11);
    CHECK(doc["clusters"].size() == 11);
    CHECK(doc["dp6_count"] == 0);
}

TEST_CASE("report of 1/15(1,2,12) records the long side") {
    Json doc = report_json(analyze("1/15(1,2,12)"));
    CHECK(doc["long_side"]["side"] == "e1e2");
    CHECK(doc["long_side"]["c"] == 2);
    CHECK(doc["champions"]["kind"] == "long_side");
    for (const auto& t : doc["partition"]) CHECK(t["catchment"] != "e1e2");
}

TEST_CASE("reports match the schema") {
    for (const char* spec : kFixtures) {
        auto errors = validate(report_json(analyze(spec)));
        CHECK_MESSAGE(errors.empty(), spec << " " << (errors.empty() ? "" : errors[0]));
    }
    for (const auto& g : random_groups(103, 30, 60)) CHECK(validate(report_json(analyze(g))).empty());
}

TEST_CASE("schema check rejects broken reports") {
    Json doc = report_json(analyze("1/11(1,2,8)"));
    Json missing = doc;
    missing.erase("group");
    CHECK(!validate(missing).empty());
    Json bad_corner = doc;
    bad_corner["corners"][0]["corner"] = "e4";
    CHECK(!validate(bad_corner).empty());
    Json bad_triple = doc;
    bad_triple["fan"]["rays"][0] = Json::array({1, 2});
    CHECK(!validate(bad_triple).empty());
}

TEST_CASE("report JSON is deterministic and round trips") {
    for (const char* spec : kFixtures) {
        std::string a = report_json(analyze(spec)).dump(2);
        std::string b = report_json(analyze(spec)).dump(2);
        CHECK(a == b);
        CHECK(Json::parse(a).dump(2) == a);
    }
}

TEST_CASE("SVG output") {
    auto a = analyze("1/11(1,2,8)");
    std::string svg = render_svg(a);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg == render_svg(analyze("1/11(1,2,8)")));
    // One solid segment per edge of the partition: E = V + F - 1.
    std::set<Vec2> verts;
    for (const auto& t : a.partition.triangles) verts.insert(t.verts.begin(), t.verts.end());
    CHECK(count(svg, "stroke=\"black\"") == verts.size() + a.partition.triangles.size() - 1);
    CHECK(count(svg, "class=\"strength\"") == 8);
    CHECK(count(svg, "class=\"ratio\"") == 0);
    std::string labelled = render_svg(a, SvgOptions{true, 600.0});
    CHECK(labelled.find(">x²:y</text>") != std::string::npos);
    CHECK(labelled.find(">x¹¹</text>") != std::string::npos);
    CHECK(count(labelled, "class=\"ratio\"") == count(svg, "stroke=\"black\""));
}

TEST_CASE("SVG of the other fixtures") {
    auto a = analyze("1/30(25,2,3)");
    std::string svg = render_svg(a);
    CHECK(count(svg, "stroke=\"black\"") > 3);
    CHECK(count(svg, "stroke-dasharray") == a.fan.edges.size());
    std::string triv = render_svg(analyze("1/1(0,0,0)"));
    CHECK(count(triv, "stroke=\"black\"") == 3);
    CHECK(count(triv, "class=\"strength\"") == 0);
    std::regex coord("x1=\"(-?[0-9]+\\.[0-9]{3})\"");
    CHECK(std::regex_search(triv, coord));
}

TEST_CASE("text renderings") {
    auto a = analyze("1/3(1,2,0)+1/3(0,1,2)");
    std::string fan = fan_text(a);
    CHECK(fan.find("cones: 9") != std::string::npos);
    CHECK(fan.find("dP6 count: 1") != std::string::npos);
    std::string cl = clusters_text(a, std::size_t{0});
    CHECK(cl.rfind("cone 0:", 0) == 0);
    CHECK(cl.find("cone 1:") == std::string::npos);
    CHECK(count(clusters_text(a), "cone ") == 9);
    CHECK(cl.find("x y z = pi") != std::string::npos);
}
