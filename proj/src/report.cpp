#include "zkdesk/report.hpp"

#include "zkdesk/common.hpp"

#include <fstream>

namespace zkdesk {

nlohmann::ordered_json rational_json(const Rational& r) {
    nlohmann::ordered_json j;
    j["num"] = boost::multiprecision::numerator(r).str();
    j["den"] = boost::multiprecision::denominator(r).str();
    if (auto p = denominator_pow2(r)) j["den_pow2"] = *p;
    j["value"] = to_double(r);
    return j;
}

nlohmann::ordered_json report_skeleton(const std::string& subcommand) {
    nlohmann::ordered_json j;
    j["report"] = kReportSchema;
    j["tool"] = kToolVersion;
    j["subcommand"] = subcommand;
    j["config"] = nlohmann::ordered_json::object();
    j["results"] = nlohmann::ordered_json::object();
    return j;
}

void write_json_file(const std::string& path, const nlohmann::ordered_json& j) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw PreconditionError("cannot write report file: " + path);
    f << j.dump(2) << "\n";
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw PreconditionError("cannot write file: " + path);
    f << text;
}

} // namespace zkdesk
