// qrabi — RWA / corrected-RWA / exact dynamics of a qubit coupled to a
// single cavity mode: level tables, population-inversion time series,
// component decompositions, envelope approximants, power spectra and a
// self-validation suite. CSV, JSON and SVG outputs.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qrabi/crwa.hpp"
#include "qrabi/dynamics.hpp"
#include "qrabi/exact.hpp"
#include "qrabi/io.hpp"
#include "qrabi/model.hpp"
#include "qrabi/rwa.hpp"
#include "qrabi/spectrum.hpp"
#include "qrabi/validate.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qrabi;

constexpr double kPi = 3.14159265358979323846;

struct RunConfig {
    std::string command;
    double g = 0.06;
    double alpha_sq = 10.0;
    double tau_max = 40.0;
    int n_points = 4001;
    int n_cut = -1;  // -1: pick from tail_tol
    double tail_tol = 1e-12;
    std::vector<std::string> backends{"rwa", "crwa", "exact"};
    std::string out;
    std::string format = "csv";
    // levels
    int n_max = 10;
    // power / peaks
    double bin = 0.1;
    double freq_min = 0.5;
    double freq_max = 25.0;
    double dt = 0.02;
    double t_total = 0.0;  // 0: max(resolution for bin, ten revival periods)
    double min_prominence = 0.02;
};

int effective_n_cut(const RunConfig& cfg) {
    if (cfg.n_cut >= 0) return cfg.n_cut;
    return choose_truncation(std::sqrt(cfg.alpha_sq), cfg.tail_tol);
}

std::vector<std::string> config_metadata(const RunConfig& cfg, int n_cut_used) {
    std::vector<std::string> meta;
    meta.push_back(std::string(io::kVersion));
    meta.push_back("command=" + cfg.command);
    meta.push_back("g=" + io::format_full(cfg.g));
    meta.push_back("alpha_sq=" + io::format_full(cfg.alpha_sq));
    meta.push_back("tau_max=" + io::format_full(cfg.tau_max));
    meta.push_back("n_points=" + std::to_string(cfg.n_points));
    meta.push_back("n_cut=" + std::to_string(n_cut_used));
    meta.push_back("tail_tol=" + io::format_full(cfg.tail_tol));
    std::string b;
    for (const std::string& s : cfg.backends) b += (b.empty() ? "" : ",") + s;
    meta.push_back("backends=" + b);
    meta.push_back("format=" + cfg.format);
    return meta;
}

ordered_json config_json(const RunConfig& cfg, int n_cut_used) {
    ordered_json j;
    j["version"] = io::kVersion;
    j["command"] = cfg.command;
    j["g"] = cfg.g;
    j["alpha_sq"] = cfg.alpha_sq;
    j["tau_max"] = cfg.tau_max;
    j["n_points"] = cfg.n_points;
    j["n_cut"] = n_cut_used;
    j["tail_tol"] = cfg.tail_tol;
    j["backends"] = cfg.backends;
    return j;
}

bool wants(const RunConfig& cfg, const std::string& backend) {
    return std::find(cfg.backends.begin(), cfg.backends.end(), backend) != cfg.backends.end();
}

exact::Eigensystem diagonalized(double g, int n_cut) {
    return exact::diagonalize(exact::build_hamiltonian(ModelParams{g, 1.0}, n_cut));
}

TimeSeries backend_inversion(const std::string& name, const CoherentField& field, double g,
                             const TimeGrid& grid) {
    if (name == "rwa") return rwa::inversion(field, g, grid);
    if (name == "crwa") return dynamics::crwa_inversion_full(field, g, grid).total;
    if (name == "exact") {
        double deficit = 0.0;
        TimeSeries w = exact::inversion(diagonalized(g, field.n_cut), field, grid, &deficit);
        if (deficit > 1e-10)
            std::cerr << "warning: truncation leakage, initial-state overlap deficit "
                      << deficit << "\n";
        return w;
    }
    throw std::invalid_argument("unknown backend: " + name);
}

void emit_series_output(const RunConfig& cfg, int n_cut_used, const std::vector<double>& tau,
                        const std::vector<std::pair<std::string, const std::vector<double>*>>& ys,
                        const std::string& y_label) {
    static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf"};
    if (cfg.format == "svg") {
        std::vector<io::SvgSeries> series;
        for (std::size_t i = 0; i < ys.size(); ++i)
            series.push_back({ys[i].first, kColors[i % 7], &tau, ys[i].second});
        io::write_file(cfg.out, io::render_svg(cfg.command, "tau = 2gt", y_label, series));
        return;
    }
    if (cfg.format == "json") {
        ordered_json j;
        j["config"] = config_json(cfg, n_cut_used);
        j["tau"] = tau;
        for (const auto& [name, values] : ys) j[name] = *values;
        io::write_file(cfg.out, j.dump(2) + "\n");
        return;
    }
    std::vector<io::Column> cols{{"tau", &tau}};
    for (const auto& [name, values] : ys) cols.push_back({name, values});
    io::write_file(cfg.out, io::render_csv(config_metadata(cfg, n_cut_used), cols));
}

int cmd_levels(const RunConfig& cfg) {
    const int n_cut_exact = std::max(effective_n_cut(cfg), cfg.n_max + 30);
    exact::Eigensystem sys = diagonalized(cfg.g, n_cut_exact);
    const std::vector<int> labels = exact::parity_labels(sys);

    std::vector<double> col_n, col_k, col_parity, e_rwa, e_closed, e_series, e_exact;
    std::vector<double> d_closed_exact, d_series_closed, d_rwa_exact;
    std::vector<char> used(sys.energies.size(), 0);
    for (int n = 0; n <= cfg.n_max; ++n) {
        for (int k = 1; k <= 2; ++k) {
            const int parity = (n % 2 == 0) ? 1 : -1;
            const double closed = crwa::energy_closed(k, n, cfg.g);
            int best = -1;
            for (std::size_t j = 0; j < sys.energies.size(); ++j) {
                if (labels[j] != parity || used[j]) continue;
                if (best < 0 ||
                    std::abs(sys.energies[j] - closed) < std::abs(sys.energies[best] - closed))
                    best = static_cast<int>(j);
            }
            if (best < 0) throw std::runtime_error("levels: parity sector exhausted");
            used[best] = 1;
            col_n.push_back(n);
            col_k.push_back(k);
            col_parity.push_back(parity);
            e_rwa.push_back(rwa::energy(k, n, cfg.g));
            e_closed.push_back(closed);
            e_series.push_back(crwa::energy_series(k, n, cfg.g));
            e_exact.push_back(sys.energies[best]);
            d_closed_exact.push_back(closed - sys.energies[best]);
            d_series_closed.push_back(e_series.back() - closed);
            d_rwa_exact.push_back(e_rwa.back() - sys.energies[best]);
        }
    }
    if (cfg.format == "json") {
        ordered_json j;
        j["config"] = config_json(cfg, n_cut_exact);
        j["levels"] = ordered_json::array();
        for (std::size_t i = 0; i < col_n.size(); ++i)
            j["levels"].push_back({{"n", static_cast<int>(col_n[i])},
                                   {"k", static_cast<int>(col_k[i])},
                                   {"parity", static_cast<int>(col_parity[i])},
                                   {"e_rwa", e_rwa[i]},
                                   {"e_crwa_closed", e_closed[i]},
                                   {"e_crwa_series", e_series[i]},
                                   {"e_exact", e_exact[i]},
                                   {"closed_minus_exact", d_closed_exact[i]},
                                   {"series_minus_closed", d_series_closed[i]},
                                   {"rwa_minus_exact", d_rwa_exact[i]}});
        io::write_file(cfg.out, j.dump(2) + "\n");
        return 0;
    }
    io::write_file(
        cfg.out,
        io::render_csv(config_metadata(cfg, n_cut_exact),
                       {{"n", &col_n},
                        {"k", &col_k},
                        {"parity", &col_parity},
                        {"e_rwa", &e_rwa},
                        {"e_crwa_closed", &e_closed},
                        {"e_crwa_series", &e_series},
                        {"e_exact", &e_exact},
                        {"closed_minus_exact", &d_closed_exact},
                        {"series_minus_closed", &d_series_closed},
                        {"rwa_minus_exact", &d_rwa_exact}}));
    return 0;
}

int cmd_inversion(const RunConfig& cfg) {
    const int n_cut = effective_n_cut(cfg);
    const CoherentField field = coherent_amplitudes(std::sqrt(cfg.alpha_sq), n_cut);
    const TimeGrid grid = reduced_time_grid(cfg.tau_max, cfg.n_points, cfg.g);

    std::vector<std::pair<std::string, TimeSeries>> series;
    for (const char* name : {"rwa", "crwa", "exact"})
        if (wants(cfg, name)) series.emplace_back(name, backend_inversion(name, field, cfg.g, grid));

    std::vector<std::pair<std::string, const std::vector<double>*>> ys;
    for (const auto& [name, ts] : series) ys.emplace_back("W_" + name, &ts.values);
    emit_series_output(cfg, n_cut, grid.tau, ys, "W");
    return 0;
}

int cmd_components(const RunConfig& cfg) {
    const int n_cut = effective_n_cut(cfg);
    const CoherentField field = coherent_amplitudes(std::sqrt(cfg.alpha_sq), n_cut);
    const TimeGrid grid = reduced_time_grid(cfg.tau_max, cfg.n_points, cfg.g);
    const dynamics::InversionComponents parts = dynamics::crwa_inversion_full(field, cfg.g, grid);

    const std::vector<double> constant(grid.size(), parts.constant);
    emit_series_output(cfg, n_cut, grid.tau,
                       {{"total", &parts.total.values},
                        {"rabi", &parts.rabi.values},
                        {"same_k", &parts.same_k.values},
                        {"diff_k", &parts.diff_k.values},
                        {"gs", &parts.gs_term.values},
                        {"constant", &constant}},
                       "W components");
    return 0;
}

int cmd_envelopes(const RunConfig& cfg) {
    const int n_cut = effective_n_cut(cfg);
    const CoherentField field = coherent_amplitudes(std::sqrt(cfg.alpha_sq), n_cut);
    const TimeGrid grid = reduced_time_grid(cfg.tau_max, cfg.n_points, cfg.g);

    const TimeSeries same_sum = dynamics::envelope_same_k(field, cfg.g, grid);
    const TimeSeries same_approx = dynamics::envelope_same_k_approx(field, cfg.g, grid);
    const TimeSeries diff_sum = dynamics::envelope_diff_k(field, cfg.g, grid);
    const TimeSeries diff_approx = dynamics::envelope_diff_k_approx(field, cfg.g, grid);
    const TimeSeries saddle = dynamics::saddle_point_envelope(cfg.alpha_sq, cfg.g, grid);

    emit_series_output(cfg, n_cut, grid.tau,
                       {{"same_k_sum", &same_sum.values},
                        {"same_k_approx", &same_approx.values},
                        {"diff_k_sum", &diff_sum.values},
                        {"diff_k_approx", &diff_approx.values},
                        {"saddle_envelope", &saddle.values}},
                       "W intrinsic parts");
    return 0;
}

ordered_json predictions_json(double g, double alpha) {
    ordered_json preds;
    preds["first_order"] = ordered_json::array();
    for (const spectrum::PeakPrediction& p : spectrum::predict_peaks_first_order(g, alpha))
        preds["first_order"].push_back(
            {{"label", p.label}, {"frequency_2g", p.frequency}, {"order", p.order}});
    preds["second_order"] = ordered_json::array();
    for (const spectrum::PeakPrediction& p : spectrum::predict_peaks_second_order(g, alpha))
        preds["second_order"].push_back(
            {{"label", p.label}, {"frequency_2g", p.frequency}, {"order", p.order}});
    return preds;
}

// Duration: whatever the requested bin needs, but at least ten revival
// periods; --t-total overrides both.
TimeGrid spectrum_grid(const RunConfig& cfg) {
    double t_total = cfg.t_total;
    if (t_total <= 0.0) {
        const double for_resolution = 2.0 * kPi / (cfg.bin * 2.0 * cfg.g);
        const double ten_revivals = 10.0 * kPi * std::sqrt(cfg.alpha_sq) / cfg.g;
        t_total = std::max(for_resolution, ten_revivals);
    }
    const int n_points = static_cast<int>(std::lround(t_total / cfg.dt)) + 1;
    return reduced_time_grid(t_total * 2.0 * cfg.g, n_points, cfg.g);
}

int cmd_power(const RunConfig& cfg) {
    const int n_cut = effective_n_cut(cfg);
    const CoherentField field = coherent_amplitudes(std::sqrt(cfg.alpha_sq), n_cut);
    const TimeGrid grid = spectrum_grid(cfg);
    const std::vector<double> freqs =
        spectrum::uniform_freq_grid(cfg.freq_min, cfg.freq_max, cfg.bin);

    std::vector<std::pair<std::string, spectrum::SpectrumResult>> spectra;
    for (const char* name : {"rwa", "crwa", "exact"})
        if (wants(cfg, name))
            spectra.emplace_back(
                name, spectrum::power_spectrum(backend_inversion(name, field, cfg.g, grid), freqs));

    std::vector<std::pair<std::string, const std::vector<double>*>> ys;
    for (const auto& [name, sp] : spectra) ys.emplace_back("P_" + name, &sp.power);

    // render both payloads before touching the filesystem so a failure
    // cannot leave one of the pair behind
    std::string payload;
    if (cfg.format == "svg") {
        static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c"};
        std::vector<io::SvgSeries> series;
        for (std::size_t i = 0; i < ys.size(); ++i)
            series.push_back({ys[i].first, kColors[i % 3], &freqs, ys[i].second});
        payload = io::render_svg("power spectrum", "frequency (units of 2g)", "|F|^2", series);
    } else if (cfg.format == "json") {
        ordered_json j;
        j["config"] = config_json(cfg, n_cut);
        j["frequency_2g"] = freqs;
        for (const auto& [name, values] : ys) j[name] = *values;
        payload = j.dump(2) + "\n";
    } else {
        std::vector<io::Column> cols{{"frequency_2g", &freqs}};
        for (const auto& [name, values] : ys) cols.push_back({name, values});
        std::vector<std::string> meta = config_metadata(cfg, n_cut);
        meta.push_back("bin_2g=" + io::format_full(cfg.bin));
        meta.push_back("t_total=" + io::format_full(grid.tau.back() / (2.0 * cfg.g)));
        payload = io::render_csv(meta, cols);
    }

    ordered_json pj;
    pj["config"] = config_json(cfg, n_cut);
    pj["predictions"] = predictions_json(cfg.g, std::sqrt(cfg.alpha_sq));
    const std::string predictions_payload = pj.dump(2) + "\n";

    io::write_file(cfg.out, payload);
    try {
        io::write_file(cfg.out + ".predictions.json", predictions_payload);
    } catch (...) {
        std::remove(cfg.out.c_str());
        throw;
    }
    return 0;
}

int cmd_peaks(const RunConfig& cfg, const std::string& backend) {
    const int n_cut = effective_n_cut(cfg);
    const CoherentField field = coherent_amplitudes(std::sqrt(cfg.alpha_sq), n_cut);
    const TimeGrid grid = spectrum_grid(cfg);
    const std::vector<double> freqs =
        spectrum::uniform_freq_grid(cfg.freq_min, cfg.freq_max, cfg.bin);

    const spectrum::SpectrumResult spec =
        spectrum::power_spectrum(backend_inversion(backend, field, cfg.g, grid), freqs);
    const std::vector<spectrum::DetectedPeak> detected =
        spectrum::detect_peaks(spec, cfg.min_prominence);

    ordered_json j;
    j["config"] = config_json(cfg, n_cut);
    j["backend"] = backend;
    j["bin_2g"] = spec.bin_width;
    j["min_prominence"] = cfg.min_prominence;
    j["detected"] = ordered_json::array();
    for (const spectrum::DetectedPeak& p : detected)
        j["detected"].push_back({{"frequency_2g", p.frequency},
                                 {"height", p.height},
                                 {"prominence", p.prominence},
                                 {"half_width", p.half_width}});
    j["predictions"] = predictions_json(cfg.g, std::sqrt(cfg.alpha_sq));
    j["matches"] = ordered_json::array();
    const auto add_matches = [&](const std::vector<spectrum::PeakPrediction>& preds) {
        for (const spectrum::PeakPrediction& p : preds) {
            double best = 1e300, at = 0.0;
            for (const spectrum::DetectedPeak& d : detected) {
                if (std::abs(d.frequency - p.frequency) < best) {
                    best = std::abs(d.frequency - p.frequency);
                    at = d.frequency;
                }
            }
            j["matches"].push_back({{"label", p.label},
                                    {"predicted", p.frequency},
                                    {"detected", detected.empty() ? ordered_json() : ordered_json(at)},
                                    {"offset_bins", detected.empty() ? ordered_json()
                                                                     : ordered_json(best / cfg.bin)}});
        }
    };
    add_matches(spectrum::predict_peaks_first_order(cfg.g, std::sqrt(cfg.alpha_sq)));
    add_matches(spectrum::predict_peaks_second_order(cfg.g, std::sqrt(cfg.alpha_sq)));
    io::write_file(cfg.out, j.dump(2) + "\n");
    return 0;
}

int cmd_validate(const RunConfig& cfg, bool quick, const std::string& criteria_arg) {
    std::vector<int> ids;
    if (!criteria_arg.empty()) {
        std::stringstream ss(criteria_arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) ids.push_back(std::stoi(tok));
    } else {
        ids = validate::criteria_ids(quick);
    }
    const std::vector<validate::CriterionResult> results = validate::run(ids);
    bool all = true;
    ordered_json report;
    report["version"] = io::kVersion;
    report["criteria"] = ordered_json::array();
    for (const validate::CriterionResult& r : results) {
        std::cout << validate::format_result(r);
        all = all && r.passed;
        report["criteria"].push_back(
            {{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"seconds", r.seconds}});
    }
    report["all_passed"] = all;
    std::cout << (all ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << "\n";
    if (!cfg.out.empty()) io::write_file(cfg.out, report.dump(2) + "\n");
    return all ? 0 : 2;
}

void load_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
    ordered_json j;
    in >> j;
    if (j.contains("g")) cfg.g = j["g"].get<double>();
    if (j.contains("alpha_sq")) cfg.alpha_sq = j["alpha_sq"].get<double>();
    if (j.contains("tau_max")) cfg.tau_max = j["tau_max"].get<double>();
    if (j.contains("n_points")) cfg.n_points = j["n_points"].get<int>();
    if (j.contains("n_cut")) cfg.n_cut = j["n_cut"].get<int>();
    if (j.contains("tail_tol")) cfg.tail_tol = j["tail_tol"].get<double>();
    if (j.contains("backends")) cfg.backends = j["backends"].get<std::vector<std::string>>();
    if (j.contains("format")) cfg.format = j["format"].get<std::string>();
    if (j.contains("bin")) cfg.bin = j["bin"].get<double>();
    if (j.contains("dt")) cfg.dt = j["dt"].get<double>();
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    std::string config_path;
    bool quick = false;
    std::string criteria_arg;

    CLI::App app{"quantum Rabi dynamics: RWA, corrected RWA and exact diagonalization"};
    app.require_subcommand(1);

    // flags > config file > defaults: the file is applied as soon as the
    // option is seen, so flags parsed afterwards overwrite it; CLI11 only
    // applies bound flag values on top of whatever the callback loaded
    const auto add_config = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file (flags take precedence)")
            ->each([&](const std::string& path) { load_config_file(path, cfg); })
            ->trigger_on_parse();
    };

    const auto add_common = [&](CLI::App* sub, bool with_grid = true) {
        add_config(sub);
        sub->add_option("--g", cfg.g, "coupling strength, units of the cavity frequency");
        sub->add_option("--alpha-sq", cfg.alpha_sq, "mean photon number alpha^2");
        sub->add_option("--n-cut", cfg.n_cut, "photon-number truncation (default: from --tail-tol)");
        sub->add_option("--tail-tol", cfg.tail_tol, "coherent-state tail tolerance");
        sub->add_option("--out", cfg.out, "output path");
        sub->add_option("--format", cfg.format, "csv | json | svg")
            ->check(CLI::IsMember({"csv", "json", "svg"}));
        if (with_grid) {
            sub->add_option("--tau-max", cfg.tau_max, "grid end in reduced time tau = 2gt");
            sub->add_option("--n-points", cfg.n_points, "grid points");
        }
    };
    const auto add_backends = [&](CLI::App* sub) {
        sub->add_option("--backends", cfg.backends, "any of rwa, crwa, exact")
            ->delimiter(',')
            ->check(CLI::IsMember({"rwa", "crwa", "exact"}));
    };

    CLI::App* levels = app.add_subcommand(
        "levels", "level table: RWA, closed-root and series CRWA, exact, with differences");
    add_common(levels, false);
    levels->add_option("--n-max", cfg.n_max, "largest photonic index in the table");

    CLI::App* inversion = app.add_subcommand(
        "inversion", "population inversion W(tau) per backend "
                     "(typical: --g 0.06 --alpha-sq 10 --backends rwa,crwa,exact --tau-max 40)");
    add_common(inversion);
    add_backends(inversion);

    CLI::App* components = app.add_subcommand(
        "components", "the additive parts of the analytic W(tau): Rabi, same-k, diff-k, "
                      "ground-state and constant terms");
    add_common(components);

    CLI::App* envelopes = app.add_subcommand(
        "envelopes", "regrouped intrinsic sums vs their short-time approximants");
    add_common(envelopes);

    CLI::App* power = app.add_subcommand(
        "power", "power spectrum |F(omega)|^2 per backend, frequencies in units of 2g "
                 "(typical: --g 0.06|0.15|0.2 --alpha-sq 10); also writes <out>.predictions.json");
    add_common(power, false);
    add_backends(power);
    power->add_option("--bin", cfg.bin, "frequency grid step in 2g units");
    power->add_option("--freq-min", cfg.freq_min, "grid start, 2g units");
    power->add_option("--freq-max", cfg.freq_max, "grid end, 2g units");
    power->add_option("--dt", cfg.dt, "sampling step in absolute time");
    power->add_option("--t-total", cfg.t_total,
                      "integration time (default: bin resolution, at least 10 revivals)");

    CLI::App* peaks = app.add_subcommand(
        "peaks", "detected spectrum peaks vs analytic predictions (JSON)");
    add_common(peaks, false);
    std::string peaks_backend = "exact";
    peaks->add_option("--backend", peaks_backend, "rwa, crwa or exact")
        ->check(CLI::IsMember({"rwa", "crwa", "exact"}));
    peaks->add_option("--bin", cfg.bin, "frequency grid step in 2g units");
    peaks->add_option("--freq-min", cfg.freq_min, "grid start, 2g units");
    peaks->add_option("--freq-max", cfg.freq_max, "grid end, 2g units");
    peaks->add_option("--dt", cfg.dt, "sampling step in absolute time");
    peaks->add_option("--t-total", cfg.t_total,
                      "integration time (default: bin resolution, at least 10 revivals)");
    peaks->add_option("--min-prominence", cfg.min_prominence,
                      "peak prominence threshold, fraction of the spectrum maximum");

    CLI::App* validate_cmd = app.add_subcommand(
        "validate", "run the acceptance criteria and report pass/fail per criterion");
    add_config(validate_cmd);
    validate_cmd->add_flag("--quick", quick, "skip the long-integration spectrum criterion (9)");
    validate_cmd->add_option("--criteria", criteria_arg, "comma-separated criterion ids (1..10)");
    validate_cmd->add_option("--out", cfg.out, "also write a JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    const auto default_out = [&](const std::string& name, const std::string& ext) {
        if (cfg.out.empty()) cfg.out = name + "." + ext;
    };

    try {
        if (levels->parsed()) {
            cfg.command = "levels";
            default_out("levels", cfg.format == "json" ? "json" : "csv");
            return cmd_levels(cfg);
        }
        if (inversion->parsed()) {
            cfg.command = "inversion";
            default_out("inversion", cfg.format == "svg" ? "svg"
                                     : cfg.format == "json" ? "json" : "csv");
            return cmd_inversion(cfg);
        }
        if (components->parsed()) {
            cfg.command = "components";
            default_out("components", cfg.format == "svg" ? "svg"
                                      : cfg.format == "json" ? "json" : "csv");
            return cmd_components(cfg);
        }
        if (envelopes->parsed()) {
            cfg.command = "envelopes";
            default_out("envelopes", cfg.format == "svg" ? "svg"
                                     : cfg.format == "json" ? "json" : "csv");
            return cmd_envelopes(cfg);
        }
        if (power->parsed()) {
            cfg.command = "power";
            default_out("power", cfg.format == "svg" ? "svg"
                                 : cfg.format == "json" ? "json" : "csv");
            return cmd_power(cfg);
        }
        if (peaks->parsed()) {
            cfg.command = "peaks";
            default_out("peaks", "json");
            return cmd_peaks(cfg, peaks_backend);
        }
        if (validate_cmd->parsed()) {
            cfg.command = "validate";
            return cmd_validate(cfg, quick, criteria_arg);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
