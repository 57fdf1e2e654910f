#include "orlov/report.hpp"

#include <algorithm>
#include <sstream>

namespace orlov {

nlohmann::ordered_json report_json(const Report& r) {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    j["params"] = r.params;
    std::vector<int> t = r.times;
    std::sort(t.begin(), t.end());
    j["times"] = t;
    j["gaps"] = nlohmann::ordered_json::array();
    for (const auto& g : r.gaps) j["gaps"].push_back({g.a, g.length});
    j["per_generator"] = r.per_generator;
    j["bounds"] = r.bounds;
    j["elapsed_ms"] = r.elapsed_ms ? nlohmann::ordered_json(*r.elapsed_ms) : nlohmann::ordered_json();
    j["version"] = kVersion;
    j["seed"] = 0;
    return j;
}

static std::string csv_cell(const nlohmann::ordered_json& v) {
    std::string s;
    if (v.is_string()) {
        s = v.get<std::string>();
    } else if (v.is_array()) {
        for (const auto& x : v) s += (s.empty() ? "" : " ") + (x.is_string() ? x.get<std::string>() : x.dump());
    } else {
        s = v.dump();
    }
    if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string q = "\"";
        for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    }
    return s;
}

std::string emit_report(const Report& r, const std::string& format) {
    const auto j = report_json(r);
    if (format == "json") return j.dump(2) + "\n";
    if (format != "csv") throw InvalidArgument("unknown format " + format);
    std::ostringstream os;
    if (!r.per_generator.empty()) {
        std::vector<std::string> cols;
        for (const auto& row : r.per_generator)
            for (const auto& [k, v] : row.items())
                if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
        for (size_t c = 0; c < cols.size(); ++c) os << (c ? "," : "") << cols[c];
        os << "\n";
        for (const auto& row : r.per_generator) {
            for (size_t c = 0; c < cols.size(); ++c)
                os << (c ? "," : "") << (row.contains(cols[c]) ? csv_cell(row[cols[c]]) : "");
            os << "\n";
        }
    } else {
        os << "key,value\n";
        os << "times," << csv_cell(j["times"]) << "\n";
        for (const auto& g : r.gaps) os << "gap," << g.a << " " << g.length << "\n";
        for (const auto& [k, v] : r.bounds.items()) os << k << "," << csv_cell(v) << "\n";
    }
    return os.str();
}

void validate_report(const nlohmann::ordered_json& j) {
    static const char* keys[] = {"command", "params", "times", "gaps", "per_generator",
                                 "bounds",  "elapsed_ms", "version", "seed"};
    if (!j.is_object()) throw InvalidArgument("report is not an object");
    for (const char* k : keys)
        if (!j.contains(k)) throw InvalidArgument(std::string("report lacks ") + k);
    size_t pos = 0;
    for (const auto& [k, v] : j.items()) {
        if (pos >= std::size(keys) || k != keys[pos]) throw InvalidArgument("report fields out of order at " + k);
        ++pos;
    }
    if (!j["command"].is_string()) throw InvalidArgument("command must be a string");
    if (!j["params"].is_object()) throw InvalidArgument("params must be an object");
    if (!j["times"].is_array()) throw InvalidArgument("times must be an array");
    std::vector<int> t;
    for (const auto& x : j["times"]) {
        if (!x.is_number_integer() || x.get<int>() < 0) throw InvalidArgument("bad time");
        t.push_back(x.get<int>());
    }
    if (!std::is_sorted(t.begin(), t.end()) || std::adjacent_find(t.begin(), t.end()) != t.end())
        throw InvalidArgument("times must be strictly increasing");
    std::vector<Gap> g;
    for (const auto& x : j["gaps"]) {
        if (!x.is_array() || x.size() != 2) throw InvalidArgument("gap must be a pair");
        g.push_back({x[0].get<int>(), x[1].get<int>()});
    }
    if (g != gaps(t)) throw InvalidArgument("gaps do not match times");
    if (!j["per_generator"].is_array()) throw InvalidArgument("per_generator must be an array");
    for (const auto& row : j["per_generator"]) {
        if (!row.is_object() || !row.contains("generator") || !row["generator"].is_array())
            throw InvalidArgument("per_generator rows need a generator list");
        if (row.contains("tritime") && !row["tritime"].is_null() && !row["tritime"].is_number_integer())
            throw InvalidArgument("tritime must be an integer or null");
    }
    if (!j["bounds"].is_object()) throw InvalidArgument("bounds must be an object");
    if (!j["elapsed_ms"].is_null() && !j["elapsed_ms"].is_number_integer())
        throw InvalidArgument("elapsed_ms must be an integer or null");
}

}  // namespace orlov
