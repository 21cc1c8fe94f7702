#include "ramsey/search_config.hpp"

#include <json.hpp>

#include <stdexcept>

namespace ramsey {

void SearchConfig::validate() const {
    if (cycle_cap < 3) throw std::invalid_argument("cycle cap must be at least 3");
    if (!(Rational(0) < target && target <= Rational(1))) {
        throw std::invalid_argument("target density must be in (0, 1]");
    }
    if (max_depth < 1) throw std::invalid_argument("max depth must be at least 1");
    if (power < 1 || power > 4) throw std::invalid_argument("power must be in 1..4");
}

std::string SearchConfig::header_line() const {
    // Hand-formatted so the byte layout is stable across library versions.
    std::string s = "{\"config\":{\"L\":";
    s += std::to_string(cycle_cap);
    s += ",\"target\":\"";
    s += target.to_string();
    s += "\",\"start_pred\":\"";
    s += start_pred.to_string();
    s += "\",\"end_pred\":\"";
    s += end_pred.to_string();
    s += "\",\"max_depth\":";
    s += std::to_string(max_depth);
    s += ",\"power\":";
    s += std::to_string(power);
    s += "},\"format_version\":1}";
    return s;
}

SearchConfig SearchConfig::from_header_line(const std::string& line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("header is not valid JSON: ") + e.what());
    }
    try {
        if (j.at("format_version").get<int>() != 1) {
            throw std::runtime_error("unsupported format version");
        }
        const auto& c = j.at("config");
        SearchConfig cfg;
        cfg.cycle_cap = c.at("L").get<int>();
        cfg.target = Rational::parse(c.at("target").get<std::string>());
        cfg.start_pred = EndpointPredicate::parse(c.at("start_pred").get<std::string>());
        cfg.end_pred = EndpointPredicate::parse(c.at("end_pred").get<std::string>());
        cfg.max_depth = c.at("max_depth").get<int>();
        cfg.power = c.at("power").get<int>();
        cfg.validate();
        return cfg;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("malformed header: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("malformed header: ") + e.what());
    }
}

bool operator==(const SearchConfig& a, const SearchConfig& b) {
    return a.cycle_cap == b.cycle_cap && a.target == b.target && a.start_pred == b.start_pred &&
           a.end_pred == b.end_pred && a.max_depth == b.max_depth && a.power == b.power;
}

}  // namespace ramsey
