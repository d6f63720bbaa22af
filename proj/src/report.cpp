#include "polycirc/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <sstream>
#include <thread>

#include "polycirc/circuit.hpp"
#include "polycirc/constants.hpp"
#include "polycirc/errors.hpp"
#include "polycirc/resonator.hpp"
#include "polycirc/units.hpp"

namespace polycirc {

namespace {

// Index-parallel map with deterministic result order; first failure (by
// index) is rethrown after all workers join.
template <class Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const int workers =
        std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count;
                 i = next.fetch_add(1)) {
                try {
                    fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& error : errors) {
        if (error) std::rethrow_exception(error);
    }
}

PhasePotential make_potential(const QubitConfig& qubit) {
    switch (qubit.potential) {
        case PotentialKind::josephson_cosine:
            return PhasePotential::josephson_cosine();
        case PotentialKind::arcsin_sin_squared:
            return PhasePotential::arcsin_sin_squared();
        case PotentialKind::custom_fourier:
            return PhasePotential::custom_fourier(qubit.custom_coefficients);
        case PotentialKind::quartic_expansion:
            break;
    }
    throw ConfigError("potential kind not usable for a charge-basis qubit");
}

int series_k_max(const QubitConfig& qubit, const RunOptions& options) {
    switch (qubit.potential) {
        case PotentialKind::josephson_cosine:
            return 1;
        case PotentialKind::custom_fourier:
            return std::max<int>(
                1, static_cast<int>(qubit.custom_coefficients.size()) - 1);
        default:
            return options.fourier_k_max;
    }
}

}  // namespace

QubitReport analyze_qubit(const QubitConfig& qubit,
                          const ResonatorConfig* resonator,
                          const RunOptions& options) {
    QubitReport report;
    report.name = qubit.name;
    report.capacitance = qubit.capacitance;

    EnergyScales scales;
    if (qubit.inductance) {
        scales = scales_from_inductor(qubit.capacitance, *qubit.inductance);
        report.inductance = *qubit.inductance;
        report.junction = false;
    } else {
        const auto jj = josephson_params(*qubit.critical_current);
        scales = scales_from_junction(qubit.capacitance,
                                      *qubit.critical_current);
        report.inductance = jj.inductance;
        report.junction = true;
    }
    report.charging_energy = scales.charging_energy;
    report.ratio = scales.ratio;

    const auto series =
        potential_fourier(make_potential(qubit),
                          series_k_max(qubit, options), options.fourier_tol);
    report.fourier_truncation_warning = series.truncation_warning;
    report.fourier_reconstruction_error = series.max_reconstruction_error;
    const double n_g = qubit.ng.value_or(effective_offset(
        qubit.theta, qubit.capacitance, qubit.drive_voltage));

    int n_max = qubit.n_max.value_or(options.default_n_max);
    if (options.converge_tol) {
        const auto truncation = converge_truncation(
            scales, series, n_g, *options.converge_tol);
        n_max = truncation.n_max;
        report.truncation_search = true;
    }
    report.n_max_used = n_max;

    const auto spectrum =
        eigendecompose(build_charge_hamiltonian(scales, series, n_g, n_max));
    report.e01 = spectrum.e01;
    report.alpha = spectrum.alpha;
    report.n01 = number_matrix_element(spectrum, 0, 1);

    switch (qubit.potential) {
        case PotentialKind::josephson_cosine:
            report.perturbative_alpha =
                transmon_quartic_alpha(scales.charging_energy);
            break;
        case PotentialKind::arcsin_sin_squared:
            report.perturbative_alpha =
                perturbation_at(scales.ratio).alpha_over_ec *
                scales.charging_energy;
            break;
        default:
            break;
    }

    if (resonator) {
        CircuitParams pair;
        pair.qubit_capacitance = qubit.capacitance;
        pair.shunt_inductance = qubit.inductance;
        pair.critical_current = qubit.critical_current;
        pair.coupling_capacitance = *qubit.coupling_capacitance;
        pair.resonator_inductance = resonator->inductance;
        pair.resonator_capacitance = resonator->capacitance;
        pair.resonator_length = resonator->length;
        pair.substrate_dielectric = resonator->substrate_dielectric;
        pair.validate();

        ResonatorParams readout{resonator->inductance, resonator->capacitance,
                                resonator->length, std::nullopt};
        if (resonator->substrate_dielectric) {
            readout.effective_dielectric =
                effective_dielectric(*resonator->substrate_dielectric);
        }
        readout.validate();

        report.f_lumped =
            quarter_wave_frequency(readout.inductance, readout.capacitance);
        if (readout.length && readout.effective_dielectric) {
            report.f_analytic = quarter_wave_frequency_analytic(
                *readout.length, *readout.effective_dielectric);
        }
        const double f01 = report.e01 / kPlanck;
        auto couple = [&](double f_r, std::optional<double>& g_out,
                          std::optional<double>& chi_out) {
            const CouplingResult coupling = compute_coupling(
                pair.coupling_capacitance, pair.qubit_capacitance,
                pair.resonator_capacitance, f_r, f01, report.n01,
                options.dispersive_floor);
            g_out = coupling.g;
            chi_out = coupling.chi;
        };
        couple(*report.f_lumped, report.g_lumped, report.chi_lumped);
        if (report.f_analytic) {
            couple(*report.f_analytic, report.g_analytic, report.chi_analytic);
        }
    }
    return report;
}

std::vector<QubitReport> run_report(const RunConfig& config, int jobs) {
    std::vector<QubitReport> reports(config.qubits.size());
    parallel_for(config.qubits.size(), jobs, [&](std::size_t i) {
        const auto& qubit = config.qubits[i];
        const ResonatorConfig* resonator =
            qubit.resonator ? config.find_resonator(*qubit.resonator)
                            : nullptr;
        // failures carry the qubit's name
        try {
            reports[i] = analyze_qubit(qubit, resonator, config.options);
        } catch (const NumericalError& e) {
            throw NumericalError("qubit '" + qubit.name + "': " + e.what());
        } catch (const std::domain_error& e) {
            throw std::domain_error("qubit '" + qubit.name + "': " + e.what());
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("qubit '" + qubit.name + "': " +
                                        e.what());
        }
    });
    return reports;
}

OutputFormat parse_format(const std::string& name) {
    if (name == "table") return OutputFormat::table;
    if (name == "structured") return OutputFormat::structured;
    if (name == "csv") return OutputFormat::csv;
    throw ConfigError("unknown format '" + name +
                      "' (expected table, structured or csv)");
}

namespace {

std::string cell(const std::optional<double>& value, double unit_scale,
                 int precision = 6) {
    if (!value) return "-";
    return format_number(*value / unit_scale, precision);
}

}  // namespace

std::string render_report_table(const std::vector<QubitReport>& reports) {
    std::ostringstream out;
    const char* fmt = "%-18s %9s %8s %11s %10s %11s %13s %15s %8s %9s %12s %9s %10s %6s\n";
    char line[512];
    std::snprintf(line, sizeof(line), fmt, "qubit", "C_q(fF)", "L(nH)",
                  "E_c/h(MHz)", "E_pot/E_c", "E01/h(GHz)", "|alpha|(MHz)",
                  "alpha_pert(MHz)", "n01", "f_r(GHz)", "f_r_len(GHz)",
                  "g(MHz)", "chi(kHz)", "nmax");
    out << line;
    for (const auto& r : reports) {
        // table g/chi prefer the length-based resonator frequency
        const auto g = r.g_analytic ? r.g_analytic : r.g_lumped;
        const auto chi = r.chi_analytic ? r.chi_analytic : r.chi_lumped;
        std::snprintf(
            line, sizeof(line), fmt, r.name.c_str(),
            format_number(r.capacitance * 1e15, 6).c_str(),
            format_number(r.inductance * 1e9, 6).c_str(),
            format_number(r.charging_energy / kPlanck / 1e6, 6).c_str(),
            format_number(r.ratio, 6).c_str(),
            format_number(r.e01 / kPlanck / 1e9, 6).c_str(),
            format_number(std::abs(r.alpha) / kPlanck / 1e6, 6).c_str(),
            cell(r.perturbative_alpha, kPlanck * 1e6).c_str(),
            format_number(r.n01, 6).c_str(),
            cell(r.f_lumped, 1e9).c_str(), cell(r.f_analytic, 1e9).c_str(),
            cell(g, 1e6).c_str(), cell(chi, 1e3).c_str(),
            std::to_string(r.n_max_used).c_str());
        out << line;
    }
    out << "kappa = " << format_number(kCouplingCalibration, 10) << " ("
        << kCouplingCalibrationNote << ")\n";
    return out.str();
}

std::string render_report_structured(const std::vector<QubitReport>& reports) {
    std::ostringstream out;
    out << "report.kappa = " << format_number(kCouplingCalibration, 10)
        << " dimensionless\n";
    out << "report.kappa_note = " << kCouplingCalibrationNote << "\n";
    for (const auto& r : reports) {
        const std::string p = "qubit." + r.name + ".";
        out << p << "C_q = " << format_number(r.capacitance * 1e15, 10)
            << " fF\n";
        out << p << (r.junction ? "L_J = " : "L = ")
            << format_number(r.inductance * 1e9, 10) << " nH\n";
        out << p << "element = " << (r.junction ? "junction" : "inductor")
            << "\n";
        out << p << "E_c_over_h = "
            << format_number(r.charging_energy / kPlanck / 1e6, 10)
            << " MHz\n";
        out << p << "ratio = " << format_number(r.ratio, 10)
            << " dimensionless\n";
        out << p << "E01_over_h = "
            << format_number(r.e01 / kPlanck / 1e9, 10) << " GHz\n";
        out << p << "alpha_over_h = "
            << format_number(r.alpha / kPlanck / 1e6, 10) << " MHz\n";
        out << p << "alpha_abs_over_h = "
            << format_number(std::abs(r.alpha) / kPlanck / 1e6, 10)
            << " MHz\n";
        if (r.perturbative_alpha) {
            out << p << "alpha_pert_over_h = "
                << format_number(*r.perturbative_alpha / kPlanck / 1e6, 10)
                << " MHz\n";
        }
        out << p << "n01 = " << format_number(r.n01, 10)
            << " dimensionless\n";
        out << p << "nmax = " << r.n_max_used << " dimensionless\n";
        out << p << "truncation_search = "
            << (r.truncation_search ? "true" : "false") << "\n";
        if (r.fourier_truncation_warning) {
            out << p << "fourier_truncation_note = cosine series misses the "
                        "potential by "
                << format_number(r.fourier_reconstruction_error, 4)
                << " dimensionless in sup norm at the configured k_max; "
                   "spectroscopic quantities are unaffected well before "
                   "this level\n";
        }
        if (r.f_lumped) {
            out << p << "f_r = " << format_number(*r.f_lumped / 1e9, 10)
                << " GHz\n";
        }
        if (r.f_analytic) {
            out << p << "f_r_analytic = "
                << format_number(*r.f_analytic / 1e9, 10) << " GHz\n";
        }
        if (r.g_lumped) {
            out << p << "g = " << format_number(*r.g_lumped / 1e6, 10)
                << " MHz\n";
        }
        if (r.g_analytic) {
            out << p << "g_analytic = "
                << format_number(*r.g_analytic / 1e6, 10) << " MHz\n";
        }
        if (r.chi_lumped) {
            out << p << "chi = " << format_number(*r.chi_lumped / 1e3, 10)
                << " kHz\n";
        }
        if (r.chi_analytic) {
            out << p << "chi_analytic = "
                << format_number(*r.chi_analytic / 1e3, 10) << " kHz\n";
        }
    }
    return out.str();
}

std::string render_report_csv(const std::vector<QubitReport>& reports) {
    std::ostringstream out;
    out << "name,C_q_fF,L_nH,element,Ec_over_h_MHz,ratio,E01_GHz,alpha_MHz,"
           "alpha_pert_MHz,n01,f_r_GHz,f_r_analytic_GHz,g_MHz,"
           "g_analytic_MHz,chi_kHz,chi_analytic_kHz,nmax\n";
    for (const auto& r : reports) {
        out << r.name << ',' << format_number(r.capacitance * 1e15, 12) << ','
            << format_number(r.inductance * 1e9, 12) << ','
            << (r.junction ? "junction" : "inductor") << ','
            << format_number(r.charging_energy / kPlanck / 1e6, 12) << ','
            << format_number(r.ratio, 12) << ','
            << format_number(r.e01 / kPlanck / 1e9, 12) << ','
            << format_number(r.alpha / kPlanck / 1e6, 12) << ','
            << (r.perturbative_alpha
                    ? format_number(*r.perturbative_alpha / kPlanck / 1e6, 12)
                    : "")
            << ',' << format_number(r.n01, 12) << ','
            << (r.f_lumped ? format_number(*r.f_lumped / 1e9, 12) : "") << ','
            << (r.f_analytic ? format_number(*r.f_analytic / 1e9, 12) : "")
            << ',' << (r.g_lumped ? format_number(*r.g_lumped / 1e6, 12) : "")
            << ','
            << (r.g_analytic ? format_number(*r.g_analytic / 1e6, 12) : "")
            << ','
            << (r.chi_lumped ? format_number(*r.chi_lumped / 1e3, 12) : "")
            << ','
            << (r.chi_analytic ? format_number(*r.chi_analytic / 1e3, 12)
                               : "")
            << ',' << r.n_max_used << "\n";
    }
    return out.str();
}

std::string render_report(const std::vector<QubitReport>& reports,
                          OutputFormat format) {
    switch (format) {
        case OutputFormat::table: return render_report_table(reports);
        case OutputFormat::structured:
            return render_report_structured(reports);
        case OutputFormat::csv: return render_report_csv(reports);
    }
    return {};
}

std::string render_curve_csv(const std::vector<PerturbationResult>& rows) {
    std::ostringstream out;
    out << "ratio,delta0,delta1,delta2,alpha_over_Ec\n";
    for (const auto& r : rows) {
        out << format_number(r.ratio, 12) << ','
            << format_number(r.delta0, 12) << ','
            << format_number(r.delta1, 12) << ','
            << format_number(r.delta2, 12) << ','
            << format_number(r.alpha_over_ec, 12) << "\n";
    }
    return out.str();
}

std::vector<SweepRow> run_sweep(const SweepConfig& sweep,
                                const RunConfig& config, int jobs) {
    const QubitConfig* base = config.find_qubit(sweep.qubit);
    if (!base) {
        throw ConfigError("sweep references unknown qubit '" + sweep.qubit +
                          "'");
    }
    const auto series = potential_fourier(make_potential(*base),
                                          series_k_max(*base, config.options),
                                          config.options.fourier_tol);
    const int n_max = base->n_max.value_or(config.options.default_n_max);
    const double base_ng = base->ng.value_or(effective_offset(
        base->theta, base->capacitance, base->drive_voltage));

    std::vector<SweepRow> rows(sweep.values.size());
    parallel_for(sweep.values.size(), jobs, [&](std::size_t i) {
        const double value = sweep.values[i];
        EnergyScales scales;
        double n_g = base_ng;
        switch (sweep.parameter) {
            case SweepConfig::Parameter::ng: {
                scales = base->inductance
                             ? scales_from_inductor(base->capacitance,
                                                    *base->inductance)
                             : scales_from_junction(base->capacitance,
                                                    *base->critical_current);
                n_g = value;
                break;
            }
            case SweepConfig::Parameter::ratio: {
                const double ec = charging_energy(base->capacitance);
                scales = {ec, value * ec, value,
                          base->critical_current ? ElementKind::junction
                                                 : ElementKind::inductor};
                break;
            }
            case SweepConfig::Parameter::inductance_nh: {
                scales = scales_from_inductor(base->capacitance, value * 1e-9);
                break;
            }
        }
        const auto spectrum = eigendecompose(
            build_charge_hamiltonian(scales, series, n_g, n_max));
        rows[i] = {value, spectrum.e01, spectrum.alpha,
                   number_matrix_element(spectrum, 0, 1)};
    });
    std::sort(rows.begin(), rows.end(),
              [](const SweepRow& a, const SweepRow& b) {
                  return a.parameter < b.parameter;
              });
    return rows;
}

std::string render_sweep_csv(const SweepConfig& sweep,
                             const std::vector<SweepRow>& rows) {
    const char* param = "ng";
    if (sweep.parameter == SweepConfig::Parameter::ratio) param = "ratio";
    if (sweep.parameter == SweepConfig::Parameter::inductance_nh) {
        param = "inductance_nH";
    }
    std::ostringstream out;
    out << param << ",E01_GHz,alpha_MHz,n01\n";
    for (const auto& r : rows) {
        out << format_number(r.parameter, 12) << ','
            << format_number(r.e01 / kPlanck / 1e9, 12) << ','
            << format_number(r.alpha / kPlanck / 1e6, 12) << ','
            << format_number(r.n01, 12) << "\n";
    }
    return out.str();
}

std::string render_trajectory_csv(const Trajectory& trajectory) {
    std::ostringstream out;
    out << "t,n,phi,energy\n";
    for (std::size_t i = 0; i < trajectory.size(); ++i) {
        out << format_number(trajectory.times[i], 12) << ','
            << format_number(trajectory.states[i].n, 12) << ','
            << format_number(trajectory.states[i].phi, 12) << ','
            << format_number(trajectory.energies[i], 12) << "\n";
    }
    return out.str();
}

}  // namespace polycirc
