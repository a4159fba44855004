#include "hns/document.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "hns/errors.hpp"

namespace hns {

namespace {

using json = nlohmann::json;

// nlohmann silently keeps the last value for a repeated key; intercept key
// events per object depth to reject duplicates instead.
json parse_rejecting_duplicates(const std::string& text) {
    std::vector<std::set<std::string>> scopes;
    std::string last_key;
    const auto cb = [&](int /*depth*/, json::parse_event_t event, json& parsed) {
        switch (event) {
            case json::parse_event_t::object_start:
                scopes.emplace_back();
                break;
            case json::parse_event_t::object_end:
                scopes.pop_back();
                break;
            case json::parse_event_t::key: {
                const std::string key = parsed.get<std::string>();
                if (!scopes.back().insert(key).second)
                    throw ParseError(key, "duplicate key");
                break;
            }
            default:
                break;
        }
        return true;
    };
    try {
        return json::parse(text, cb);
    } catch (const json::parse_error& e) {
        throw ParseError("", std::string("invalid JSON: ") + e.what());
    }
}

double require_finite_number(const json& obj, const std::string& key) {
    if (!obj.contains(key)) throw ParseError(key, "missing");
    const json& v = obj.at(key);
    if (!v.is_number()) throw ParseError(key, "not a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ParseError(key, "not finite");
    return d;
}

}  // namespace

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

SystemDocument parse_system(const std::string& text) {
    const json j = parse_rejecting_duplicates(text);
    if (!j.is_object()) throw ParseError("", "document is not a JSON object");

    SystemDocument doc;
    if (!j.contains("name")) throw ParseError("name", "missing");
    if (!j.at("name").is_string()) throw ParseError("name", "not a string");
    doc.name = j.at("name").get<std::string>();
    if (doc.name.empty()) throw ParseError("name", "empty");

    if (!j.contains("constants")) throw ParseError("constants", "missing");
    const json& c = j.at("constants");
    if (!c.is_object()) throw ParseError("constants", "not an object");
    static const std::set<std::string> known = {"a11", "a12", "a22", "b11", "b12", "b22"};
    for (const auto& item : c.items())
        if (!known.contains(item.key())) throw ParseError(item.key(), "unknown constant");

    doc.constants.a11 = require_finite_number(c, "a11");
    doc.constants.a12 = require_finite_number(c, "a12");
    doc.constants.a22 = require_finite_number(c, "a22");
    doc.constants.b11 = require_finite_number(c, "b11");
    doc.constants.b12 = require_finite_number(c, "b12");
    doc.constants.b22 = require_finite_number(c, "b22");

    if (j.contains("description")) {
        if (!j.at("description").is_string()) throw ParseError("description", "not a string");
        doc.description = j.at("description").get<std::string>();
    }
    return doc;
}

std::string serialize(const SystemDocument& doc) {
    std::ostringstream out;
    out << "{\"name\":" << json(doc.name).dump();
    if (doc.description) out << ",\"description\":" << json(*doc.description).dump();
    const StructuralConstants& t = doc.constants;
    out << ",\"constants\":{"
        << "\"a11\":" << format_number(t.a11) << ",\"a12\":" << format_number(t.a12)
        << ",\"a22\":" << format_number(t.a22) << ",\"b11\":" << format_number(t.b11)
        << ",\"b12\":" << format_number(t.b12) << ",\"b22\":" << format_number(t.b22)
        << "}}";
    return out.str();
}

SystemDocument load_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("", "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_system(buf.str());
}

}  // namespace hns
