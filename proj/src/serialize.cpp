#include "es/serialize.hpp"

#include <stdexcept>

namespace es {

void to_json(json& j, const Triple& t) {
    j = json{{"x", t.x}, {"y", t.y}, {"z", t.z}};
}

void from_json(const json& j, Triple& t) {
    j.at("x").get_to(t.x);
    j.at("y").get_to(t.y);
    j.at("z").get_to(t.z);
}

void to_json(json& j, const DuvWitness& w) {
    j = json{{"d", w.d}, {"u", w.u}, {"v", w.v}, {"n", w.n}};
}

void from_json(const json& j, DuvWitness& w) {
    j.at("d").get_to(w.d);
    j.at("u").get_to(w.u);
    j.at("v").get_to(w.v);
    j.at("n").get_to(w.n);
}

void to_json(json& j, const CongruenceClass& c) {
    j = json{{"q", c.q}, {"r", c.r}, {"d", c.d}, {"n", c.n}};
}

json census_record_to_json(const CensusRecord& rec) {
    json j;
    j["v"] = kCensusSchemaVersion;
    j["p"] = rec.p;
    if (auto h = rec.has_duv()) j["has_duv"] = *h; else j["has_duv"] = nullptr;
    if (rec.duv) j["duv"] = *rec.duv; else j["duv"] = nullptr;
    if (rec.gcd_ns) j["gcd_ns"] = *rec.gcd_ns; else j["gcd_ns"] = nullptr;
    j["xy"] = rec.xy;
    j["yz"] = rec.yz;
    j["mordell_hard"] = rec.mordell;
    if (rec.count) j["count"] = *rec.count; else j["count"] = nullptr;
    return j;
}

std::string census_record_to_line(const CensusRecord& rec) {
    return census_record_to_json(rec).dump();
}

CensusRecord census_record_from_line(const std::string& line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("census record: malformed JSON: ") + e.what());
    }
    try {
        if (!j.is_object() || j.at("v").get<int>() != kCensusSchemaVersion)
            throw std::invalid_argument("census record: unsupported schema version");
        CensusRecord rec;
        rec.p = j.at("p").get<u64>();
        if (!j.at("duv").is_null()) rec.duv = j.at("duv").get<std::vector<DuvWitness>>();
        if (!j.at("gcd_ns").is_null()) rec.gcd_ns = j.at("gcd_ns").get<std::vector<u64>>();
        rec.xy = j.at("xy").get<bool>();
        rec.yz = j.at("yz").get<bool>();
        rec.mordell = j.at("mordell_hard").get<bool>();
        if (!j.at("count").is_null()) rec.count = j.at("count").get<u64>();
        json has = j.at("has_duv");
        if (rec.duv ? (has.is_null() || has.get<bool>() != !rec.duv->empty()) : !has.is_null())
            throw std::invalid_argument("census record: has_duv disagrees with duv");
        return rec;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("census record: bad field: ") + e.what());
    }
}

}  // namespace es
