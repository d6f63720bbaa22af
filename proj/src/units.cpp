#include "polycirc/units.hpp"

#include <cstdio>
#include <map>
#include <sstream>

#include "polycirc/errors.hpp"

namespace polycirc {

const char* to_string(Dimension dimension) {
    switch (dimension) {
        case Dimension::dimensionless: return "dimensionless";
        case Dimension::capacitance: return "capacitance";
        case Dimension::inductance: return "inductance";
        case Dimension::length: return "length";
        case Dimension::frequency: return "frequency";
        case Dimension::current: return "current";
        case Dimension::voltage: return "voltage";
        case Dimension::time: return "time";
    }
    return "?";
}

namespace {

struct UnitEntry {
    double scale;
    Dimension dimension;
};

const std::map<std::string, UnitEntry>& unit_table() {
    static const std::map<std::string, UnitEntry> table = {
        {"F", {1.0, Dimension::capacitance}},
        {"fF", {1e-15, Dimension::capacitance}},
        {"pF", {1e-12, Dimension::capacitance}},
        {"nF", {1e-9, Dimension::capacitance}},
        {"uF", {1e-6, Dimension::capacitance}},
        {"H", {1.0, Dimension::inductance}},
        {"nH", {1e-9, Dimension::inductance}},
        {"uH", {1e-6, Dimension::inductance}},
        {"mH", {1e-3, Dimension::inductance}},
        {"m", {1.0, Dimension::length}},
        {"cm", {1e-2, Dimension::length}},
        {"mm", {1e-3, Dimension::length}},
        {"um", {1e-6, Dimension::length}},
        {"µm", {1e-6, Dimension::length}},  // micro sign
        {"μm", {1e-6, Dimension::length}},  // greek mu
        {"Hz", {1.0, Dimension::frequency}},
        {"kHz", {1e3, Dimension::frequency}},
        {"MHz", {1e6, Dimension::frequency}},
        {"GHz", {1e9, Dimension::frequency}},
        {"A", {1.0, Dimension::current}},
        {"nA", {1e-9, Dimension::current}},
        {"uA", {1e-6, Dimension::current}},
        {"mA", {1e-3, Dimension::current}},
        {"V", {1.0, Dimension::voltage}},
        {"uV", {1e-6, Dimension::voltage}},
        {"mV", {1e-3, Dimension::voltage}},
        {"s", {1.0, Dimension::time}},
        {"ms", {1e-3, Dimension::time}},
        {"us", {1e-6, Dimension::time}},
        {"ns", {1e-9, Dimension::time}},
        {"ps", {1e-12, Dimension::time}},
    };
    return table;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

Quantity parse_quantity(const std::string& text) {
    const std::string cleaned = trim(text);
    if (cleaned.empty()) {
        throw ConfigError("empty value where a number was expected");
    }
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(cleaned, &consumed);
    } catch (const std::exception&) {
        throw ConfigError("cannot parse number from '" + cleaned + "'");
    }
    const std::string suffix = trim(cleaned.substr(consumed));
    if (suffix.empty()) {
        return {value, Dimension::dimensionless};
    }
    const auto& table = unit_table();
    const auto it = table.find(suffix);
    if (it == table.end()) {
        throw ConfigError("unknown unit suffix '" + suffix + "' in '" +
                          cleaned + "'");
    }
    return {value * it->second.scale, it->second.dimension};
}

double parse_quantity_as(const std::string& text, Dimension expected) {
    const Quantity q = parse_quantity(text);
    if (q.dimension != expected &&
        !(q.dimension == Dimension::dimensionless &&
          expected == Dimension::dimensionless)) {
        throw ConfigError("expected a " + std::string(to_string(expected)) +
                          ", got " + to_string(q.dimension) + " in '" +
                          trim(text) + "'");
    }
    return q.value;
}

std::string format_number(double value, int precision) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*g", precision, value);
    return buffer;
}

}  // namespace polycirc
