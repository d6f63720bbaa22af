#include "polycirc/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "polycirc/constants.hpp"
#include "polycirc/errors.hpp"
#include "polycirc/units.hpp"

namespace polycirc {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(int line, const std::string& message) {
    throw ConfigError("line " + std::to_string(line) + ": " + message);
}

std::vector<std::string> split_words(const std::string& s) {
    std::vector<std::string> words;
    std::istringstream in(s);
    std::string w;
    while (in >> w) words.push_back(w);
    return words;
}

// One parsed key = value with its source line.
struct Entry {
    std::string value;
    int line = 0;
};

struct Section {
    std::string type;
    std::string name;
    int line = 0;
    std::map<std::string, Entry> entries;
};

class SectionReader {
public:
    explicit SectionReader(Section& section) : section_(section) {}

    bool has(const std::string& key) const {
        return section_.entries.count(key) > 0;
    }

    std::string raw(const std::string& key) {
        auto it = section_.entries.find(key);
        if (it == section_.entries.end()) {
            fail(section_.line, section_.type + " '" + section_.name +
                                    "' is missing required key '" + key + "'");
        }
        return it->second.value;
    }

    double quantity(const std::string& key, Dimension dimension) {
        const std::string text = raw(key);
        try {
            return parse_quantity_as(text, dimension);
        } catch (const ConfigError& e) {
            fail(section_.entries.at(key).line,
                 std::string(e.what()) + " (key '" + key + "')");
        }
    }

    double required_quantity(const std::string& key, Dimension dimension) {
        return quantity(key, dimension);
    }

    std::optional<double> optional_quantity(const std::string& key,
                                            Dimension dimension) {
        if (!has(key)) return std::nullopt;
        return quantity(key, dimension);
    }

    long integer(const std::string& key) {
        const std::string text = raw(key);
        const int line = section_.entries.at(key).line;
        try {
            std::size_t used = 0;
            const long v = std::stol(trim(text), &used);
            if (used != trim(text).size()) {
                fail(line, "key '" + key + "' expects an integer, got '" +
                               text + "'");
            }
            return v;
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception&) {
            fail(line, "key '" + key + "' expects an integer, got '" + text +
                           "'");
        }
    }

    void finish(const std::set<std::string>& known) {
        for (const auto& [key, entry] : section_.entries) {
            if (!known.count(key)) {
                fail(entry.line, "unknown key '" + key + "' in [" +
                                     section_.type +
                                     (section_.name.empty()
                                          ? ""
                                          : " " + section_.name) +
                                     "]");
            }
        }
    }

    int line() const { return section_.line; }
    int line_of(const std::string& key) const {
        return section_.entries.at(key).line;
    }

private:
    Section& section_;
};

PotentialKind parse_potential_kind(const std::string& word, int line) {
    if (word == "josephson_cosine") return PotentialKind::josephson_cosine;
    if (word == "arcsin_sin_squared") return PotentialKind::arcsin_sin_squared;
    if (word == "custom_fourier") return PotentialKind::custom_fourier;
    if (word == "quartic_expansion") {
        fail(line,
             "potential 'quartic_expansion' is continuum-only and cannot be "
             "used for a charge-basis qubit");
    }
    fail(line, "unknown potential '" + word +
                   "' (expected josephson_cosine, arcsin_sin_squared or "
                   "custom_fourier)");
}

DriveWaveform parse_drive(const std::string& text, int line) {
    const auto words = split_words(text);
    if (words.empty()) fail(line, "empty drive specification");
    if (words[0] == "zero") {
        if (words.size() != 1) fail(line, "drive zero takes no arguments");
        return DriveWaveform::zero();
    }
    if (words[0] == "constant") {
        if (words.size() != 3) {
            fail(line, "drive constant expects '<value> <unit>', e.g. "
                       "'constant 1 uV'");
        }
        const double v =
            parse_quantity_as(words[1] + " " + words[2], Dimension::voltage);
        return DriveWaveform::constant(v);
    }
    if (words[0] == "sinusoid") {
        if (words.size() != 6) {
            fail(line, "drive sinusoid expects '<amp> <unit> <freq> <unit> "
                       "<phase>', e.g. 'sinusoid 1 uV 5 GHz 0'");
        }
        const double amp =
            parse_quantity_as(words[1] + " " + words[2], Dimension::voltage);
        const double freq =
            parse_quantity_as(words[3] + " " + words[4], Dimension::frequency);
        const double phase =
            parse_quantity_as(words[5], Dimension::dimensionless);
        return DriveWaveform::sinusoid(amp, freq, phase);
    }
    fail(line, "unknown drive kind '" + words[0] +
                   "' (expected zero, constant or sinusoid)");
}

}  // namespace

std::vector<double> parse_range_spec(const std::string& spec) {
    const std::string cleaned = trim(spec);
    if (cleaned.empty()) {
        throw ConfigError("empty range specification");
    }
    std::vector<double> values;
    if (cleaned.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream in(cleaned);
        std::string part;
        while (std::getline(in, part, ':')) parts.push_back(trim(part));
        if (parts.size() != 3) {
            throw ConfigError("range must be start:stop:step, got '" +
                              cleaned + "'");
        }
        double start = 0, stop = 0, step = 0;
        try {
            start = std::stod(parts[0]);
            stop = std::stod(parts[1]);
            step = std::stod(parts[2]);
        } catch (const std::exception&) {
            throw ConfigError("range must be numeric start:stop:step, got '" +
                              cleaned + "'");
        }
        if (!(step > 0.0) || stop < start) {
            throw ConfigError("range needs stop >= start and step > 0");
        }
        // inclusive of stop up to a half step of slack
        for (double v = start; v <= stop + 0.5 * step; v += step) {
            values.push_back(std::min(v, stop));
        }
        if (!values.empty() && values.size() >= 2 &&
            values[values.size() - 1] == values[values.size() - 2]) {
            values.pop_back();
        }
    } else {
        std::string normalized = cleaned;
        std::replace(normalized.begin(), normalized.end(), ',', ' ');
        for (const auto& word : split_words(normalized)) {
            try {
                values.push_back(std::stod(word));
            } catch (const std::exception&) {
                throw ConfigError("bad number '" + word + "' in value list");
            }
        }
    }
    if (values.empty()) {
        throw ConfigError("range specification produced no values");
    }
    return values;
}

RunConfig parse_config(const std::string& text) {
    std::vector<Section> sections;
    {
        std::istringstream in(text);
        std::string raw_line;
        int line_no = 0;
        Section* current = nullptr;
        while (std::getline(in, raw_line)) {
            ++line_no;
            std::string line = raw_line;
            if (const auto hash = line.find('#'); hash != std::string::npos) {
                line = line.substr(0, hash);
            }
            line = trim(line);
            if (line.empty()) continue;
            if (line.front() == '[') {
                if (line.back() != ']') {
                    fail(line_no, "unterminated section header");
                }
                const auto words =
                    split_words(line.substr(1, line.size() - 2));
                if (words.empty() || words.size() > 2) {
                    fail(line_no, "section header must be [type name]");
                }
                Section s;
                s.type = words[0];
                s.name = words.size() == 2 ? words[1] : "";
                s.line = line_no;
                sections.push_back(std::move(s));
                current = &sections.back();
                continue;
            }
            const auto eq = line.find('=');
            if (eq == std::string::npos) {
                fail(line_no, "expected 'key = value', got '" + line + "'");
            }
            if (!current) {
                fail(line_no, "key outside of any [section]");
            }
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (key.empty()) fail(line_no, "empty key");
            if (value.empty()) fail(line_no, "empty value for key '" + key + "'");
            if (current->entries.count(key)) {
                fail(line_no, "duplicate key '" + key + "'");
            }
            current->entries[key] = Entry{value, line_no};
        }
    }

    RunConfig config;
    std::set<std::string> names;  // per type uniqueness: "type/name"

    for (auto& section : sections) {
        if (!section.name.empty()) {
            const std::string id = section.type + "/" + section.name;
            if (!names.insert(id).second) {
                fail(section.line, "duplicate [" + section.type + " " +
                                       section.name + "] section");
            }
        }
        SectionReader reader(section);

        if (section.type == "qubit") {
            if (section.name.empty()) fail(section.line, "qubit needs a name");
            QubitConfig q;
            q.name = section.name;
            q.capacitance =
                reader.required_quantity("capacitance", Dimension::capacitance);
            q.inductance =
                reader.optional_quantity("inductance", Dimension::inductance);
            q.critical_current =
                reader.optional_quantity("critical_current", Dimension::current);
            if (!q.inductance && !q.critical_current) {
                fail(section.line, "qubit '" + q.name +
                                        "' requires an inductance or a "
                                        "critical current");
            }
            if (q.inductance && q.critical_current) {
                fail(section.line, "qubit '" + q.name +
                                        "' must give either an inductance or "
                                        "a critical current, not both");
            }
            if (reader.has("potential")) {
                q.potential = parse_potential_kind(reader.raw("potential"),
                                                   reader.line_of("potential"));
            }
            if (reader.has("fourier_coefficients")) {
                const std::string spec = reader.raw("fourier_coefficients");
                try {
                    q.custom_coefficients = parse_range_spec(spec);
                } catch (const ConfigError& e) {
                    fail(reader.line_of("fourier_coefficients"), e.what());
                }
            }
            if (q.potential == PotentialKind::custom_fourier &&
                q.custom_coefficients.empty()) {
                fail(section.line, "custom_fourier potential needs "
                                   "fourier_coefficients");
            }
            if (reader.has("ng")) {
                q.ng = reader.quantity("ng", Dimension::dimensionless);
            }
            if (reader.has("theta")) {
                q.theta = reader.quantity("theta", Dimension::dimensionless);
            }
            if (reader.has("drive_voltage")) {
                q.drive_voltage =
                    reader.quantity("drive_voltage", Dimension::voltage);
            }
            if (reader.has("nmax")) {
                q.n_max = static_cast<int>(reader.integer("nmax"));
            }
            q.coupling_capacitance = reader.optional_quantity(
                "coupling_capacitance", Dimension::capacitance);
            if (reader.has("resonator")) {
                q.resonator = reader.raw("resonator");
            }
            reader.finish({"capacitance", "inductance", "critical_current",
                           "potential", "fourier_coefficients", "ng", "theta",
                           "drive_voltage", "nmax", "coupling_capacitance",
                           "resonator"});
            config.qubits.push_back(std::move(q));
        } else if (section.type == "resonator") {
            if (section.name.empty()) {
                fail(section.line, "resonator needs a name");
            }
            ResonatorConfig r;
            r.name = section.name;
            r.inductance =
                reader.required_quantity("inductance", Dimension::inductance);
            r.capacitance =
                reader.required_quantity("capacitance", Dimension::capacitance);
            r.length = reader.optional_quantity("length", Dimension::length);
            r.substrate_dielectric = reader.optional_quantity(
                "epsilon_substrate", Dimension::dimensionless);
            reader.finish({"inductance", "capacitance", "length",
                           "epsilon_substrate"});
            config.resonators.push_back(std::move(r));
        } else if (section.type == "tline") {
            if (section.name.empty()) fail(section.line, "tline needs a name");
            TlineConfig t;
            t.name = section.name;
            t.cells = static_cast<int>(reader.integer("cells"));
            t.inductance =
                reader.required_quantity("inductance", Dimension::inductance);
            t.capacitance =
                reader.required_quantity("capacitance", Dimension::capacitance);
            reader.finish({"cells", "inductance", "capacitance"});
            config.tlines.push_back(std::move(t));
        } else if (section.type == "classical") {
            if (section.name.empty()) {
                fail(section.line, "classical run needs a name");
            }
            ClassicalConfig c;
            c.name = section.name;
            const std::string kind = reader.raw("kind");
            if (kind == "lc") {
                c.kind = ElementKind::inductor;
            } else if (kind == "junction") {
                c.kind = ElementKind::junction;
            } else {
                fail(reader.line_of("kind"),
                     "kind must be 'lc' or 'junction', got '" + kind + "'");
            }
            c.capacitance =
                reader.required_quantity("capacitance", Dimension::capacitance);
            c.inductance =
                reader.optional_quantity("inductance", Dimension::inductance);
            c.critical_current =
                reader.optional_quantity("critical_current", Dimension::current);
            if (c.kind == ElementKind::inductor && !c.inductance) {
                fail(section.line, "classical lc run needs an inductance");
            }
            if (c.kind == ElementKind::junction && !c.critical_current) {
                fail(section.line,
                     "classical junction run needs a critical current");
            }
            c.drive = parse_drive(reader.raw("drive"), reader.line_of("drive"));
            c.dt = reader.required_quantity("dt", Dimension::time);
            c.steps = reader.integer("steps");
            if (reader.has("n0")) {
                c.n0 = reader.quantity("n0", Dimension::dimensionless);
            }
            if (reader.has("phi0")) {
                c.phi0 = reader.quantity("phi0", Dimension::dimensionless);
            }
            reader.finish({"kind", "capacitance", "inductance",
                           "critical_current", "drive", "dt", "steps", "n0",
                           "phi0"});
            config.classical_runs.push_back(std::move(c));
        } else if (section.type == "sweep") {
            if (section.name.empty()) fail(section.line, "sweep needs a name");
            SweepConfig s;
            s.name = section.name;
            s.qubit = reader.raw("qubit");
            const std::string param = reader.raw("parameter");
            if (param == "ng") {
                s.parameter = SweepConfig::Parameter::ng;
            } else if (param == "ratio") {
                s.parameter = SweepConfig::Parameter::ratio;
            } else if (param == "inductance_nH") {
                s.parameter = SweepConfig::Parameter::inductance_nh;
            } else {
                fail(reader.line_of("parameter"),
                     "parameter must be ng, ratio or inductance_nH");
            }
            try {
                s.values = parse_range_spec(reader.raw("values"));
            } catch (const ConfigError& e) {
                fail(reader.line_of("values"), e.what());
            }
            reader.finish({"qubit", "parameter", "values"});
            config.sweeps.push_back(std::move(s));
        } else if (section.type == "options") {
            if (!section.name.empty()) {
                fail(section.line, "[options] takes no name");
            }
            if (reader.has("nmax")) {
                config.options.default_n_max =
                    static_cast<int>(reader.integer("nmax"));
            }
            if (reader.has("converge")) {
                const double hz =
                    reader.quantity("converge", Dimension::frequency);
                config.options.converge_tol = hz * kPlanck;
            }
            if (reader.has("dispersive_floor")) {
                config.options.dispersive_floor =
                    reader.quantity("dispersive_floor", Dimension::frequency);
            }
            if (reader.has("fourier_kmax")) {
                config.options.fourier_k_max =
                    static_cast<int>(reader.integer("fourier_kmax"));
            }
            if (reader.has("fourier_tol")) {
                config.options.fourier_tol =
                    reader.quantity("fourier_tol", Dimension::dimensionless);
            }
            if (reader.has("out")) {
                config.options.out_dir = reader.raw("out");
            }
            reader.finish({"nmax", "converge", "dispersive_floor",
                           "fourier_kmax", "fourier_tol", "out"});
        } else {
            fail(section.line, "unknown section type '" + section.type + "'");
        }
    }

    // resolve references
    for (const auto& qubit : config.qubits) {
        if (qubit.resonator && !config.find_resonator(*qubit.resonator)) {
            throw ConfigError("qubit '" + qubit.name +
                              "' references unknown resonator '" +
                              *qubit.resonator + "'");
        }
        if (qubit.resonator && !qubit.coupling_capacitance) {
            throw ConfigError("qubit '" + qubit.name +
                              "' has a resonator but no coupling_capacitance");
        }
    }
    for (const auto& sweep : config.sweeps) {
        if (!config.find_qubit(sweep.qubit)) {
            throw ConfigError("sweep '" + sweep.name +
                              "' references unknown qubit '" + sweep.qubit +
                              "'");
        }
    }
    return config;
}

const ResonatorConfig* RunConfig::find_resonator(
    const std::string& name) const {
    for (const auto& r : resonators) {
        if (r.name == name) return &r;
    }
    return nullptr;
}

const QubitConfig* RunConfig::find_qubit(const std::string& name) const {
    for (const auto& q : qubits) {
        if (q.name == name) return &q;
    }
    return nullptr;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

}  // namespace polycirc
