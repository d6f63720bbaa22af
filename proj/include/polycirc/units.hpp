#pragma once

#include <string>

namespace polycirc {

enum class Dimension {
    dimensionless,
    capacitance,
    inductance,
    length,
    frequency,
    current,
    voltage,
    time,
};

const char* to_string(Dimension dimension);

struct Quantity {
    double value = 0.0;  // SI base units
    Dimension dimension = Dimension::dimensionless;
};

// Parses "118.1 fF", "4619 um", "31.3 nA", "0.5" (dimensionless), ...
// Accepted suffixes: F fF pF nF uF | H nH uH mH | m mm cm um µm μm |
// Hz kHz MHz GHz | A nA uA mA | V uV mV | s ms us ns ps.
// Throws ConfigError naming the offending token.
Quantity parse_quantity(const std::string& text);

// Like parse_quantity but rejects any dimension other than `expected`,
// naming both dimensions in the error.
double parse_quantity_as(const std::string& text, Dimension expected);

// Shortest-round-trip style formatting used by all serialized output
// ("%.10g" unless another precision is given).
std::string format_number(double value, int precision = 10);

}  // namespace polycirc
