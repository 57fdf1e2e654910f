#pragma once

#include "orlov/core.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace orlov {

inline constexpr const char* kVersion = "0.1.0";

struct Report {
    std::string command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    std::vector<int> times;
    std::vector<Gap> gaps;
    nlohmann::ordered_json per_generator = nlohmann::ordered_json::array();
    nlohmann::ordered_json bounds = nlohmann::ordered_json::object();
    std::optional<long long> elapsed_ms;
};

nlohmann::ordered_json report_json(const Report& r);
std::string emit_report(const Report& r, const std::string& format);
// Throws InvalidArgument when j does not follow the report schema.
void validate_report(const nlohmann::ordered_json& j);

// Full command line front end, args without the program name; returns the
// process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orlov
