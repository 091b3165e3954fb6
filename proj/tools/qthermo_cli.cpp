// Command-line front end for thermometry/magnetometry sweeps of two coupled
// resonators. Each subcommand starts from a default sweep, overlays the JSON
// config (--config), then the command-line flags.

#include "qthermo/errors.hpp"
#include "qthermo/sweep.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace qthermo;

namespace {

enum Exit { kOk = 0, kConfig = 2, kPartial = 3, kIo = 4 };

struct Options {
    std::string config_path;
    std::string out;
    std::string profile = "paper-default";
    std::optional<int> cutoff_na;
    std::optional<int> cutoff_nb;
    std::optional<double> tol;
    std::optional<int> max_cutoff;
    int threads = 1;
    bool seedless = false;

    std::optional<std::string> interaction;
    std::optional<double> g;
    std::optional<double> b_ext;
    std::optional<double> temperature;
    std::optional<double> omega_a;
    std::optional<double> omega_b;
    std::vector<std::string> axes;

    // cfi
    std::vector<std::string> observables;
    std::string param = "temperature";
    std::string method = "error_propagation";

    std::string figure;
};

QuantitySpec quantity(QuantityKind kind) {
    QuantitySpec q;
    q.kind = kind;
    return q;
}

SweepSpec defaults_for(const std::string& command, const Options& o) {
    SweepSpec s;
    s.base.temperature = 0.06;
    s.base.b_ext = 0.04;
    s.base.g = 0.04;
    const SweepAxis temperature{AxisName::Temperature, 0.01, 1.0, 34};
    const SweepAxis field{AxisName::BExt, 0.0, 0.1, 21};
    const SweepAxis coupling{AxisName::G, 0.01, 0.1, 19};
    if (command == "qfi-map") {
        s.axes = {temperature, field};
        s.quantities = {quantity(QuantityKind::QfiT), quantity(QuantityKind::QfiB)};
    } else if (command == "qfi-vs-g") {
        s.axes = {coupling};
        s.quantities = {quantity(QuantityKind::QfiT)};
    } else if (command == "wigner") {
        s.axes = {coupling};
        s.base.temperature = 0.01;
        s.base.b_ext = 0.06;
        s.quantities = {quantity(QuantityKind::Wigner)};
    } else if (command == "nongauss") {
        s.axes = {coupling};
        s.base.temperature = 0.08;
        s.base.b_ext = 0.06;
        s.quantities = {quantity(QuantityKind::NonGauss)};
    } else if (command == "cfi") {
        s.axes = {SweepAxis{AxisName::Temperature, 0.02, 1.0, 50}};
        std::vector<std::string> obs = o.observables;
        if (obs.empty()) obs = {"photon_number", "x", "x2", "parity"};
        for (const std::string& name : obs) {
            QuantitySpec q = quantity(QuantityKind::Cfi);
            q.observable = parse_observable(name);
            q.param = parse_param(o.param);
            if (o.method == "projective") q.method = CfiMethod::Projective;
            else if (o.method != "error_propagation")
                throw Error(ErrorCode::ConfigError, "field '--method': expected error_propagation or projective");
            s.quantities.push_back(q);
        }
        s.quantities.push_back(quantity(o.param == "b_ext" ? QuantityKind::QfiB : QuantityKind::QfiT));
    } else if (command == "qfim") {
        s.axes = {temperature, SweepAxis{AxisName::BExt, 0.01, 0.1, 19}};
        s.quantities = {quantity(QuantityKind::Qfim)};
    } else if (command == "sld-check") {
        s.axes = {temperature, SweepAxis{AxisName::BExt, 0.01, 0.1, 19}};
        s.quantities = {quantity(QuantityKind::SldCheck)};
    }
    return s;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot read config '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SweepAxis parse_axis_flag(const std::string& text) {
    // name:min:max:count
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 4) throw Error(ErrorCode::ConfigError, "field '--axis': expected name:min:max:count");
    nlohmann::json j = {{"axes", nlohmann::json::array()}, {"quantities", {"qfi_t"}}};
    try {
        j["axes"].push_back({{"name", parts[0]},
                             {"min", std::stod(parts[1])},
                             {"max", std::stod(parts[2])},
                             {"count", std::stoi(parts[3])}});
    } catch (const std::logic_error&) {
        throw Error(ErrorCode::ConfigError, "field '--axis': non-numeric bound or count in '" + text + "'");
    }
    SweepSpec s = parse_sweep_spec(j);
    return s.axes.front();
}

void apply_flags(SweepSpec& s, const Options& o) {
    if (o.cutoff_na) s.base.n_a = *o.cutoff_na;
    if (o.cutoff_nb) s.base.n_b = *o.cutoff_nb;
    if (o.tol) {
        s.convergence.enabled = true;
        s.convergence.tol = *o.tol;
    }
    if (o.max_cutoff) s.convergence.max_cutoff = *o.max_cutoff;
    if (o.interaction) s.base.interaction = parse_interaction(*o.interaction);
    if (o.g) s.base.g = *o.g;
    if (o.b_ext) s.base.b_ext = *o.b_ext;
    if (o.temperature) s.base.temperature = *o.temperature;
    if (o.omega_a) s.base.omega_a = *o.omega_a;
    if (o.omega_b) s.base.omega_b = *o.omega_b;
    if (!o.axes.empty()) {
        s.axes.clear();
        for (const std::string& a : o.axes) s.axes.push_back(parse_axis_flag(a));
    }
    if (!o.out.empty()) s.output_path = o.out;
}

RunOptions run_options(const Options& o, const NumericProfile& profile) {
    RunOptions r;
    r.threads = std::max(1, o.threads);
    r.deterministic = o.seedless;
    r.profile = profile;
    return r;
}

int count_failures(const std::vector<SweepRow>& rows) {
    int failed = 0;
    for (const SweepRow& r : rows) failed += r.error_code.empty() ? 0 : 1;
    return failed;
}

int run_subcommand(const std::string& command, const Options& o) {
    const NumericProfile profile = profile_by_name(o.profile);
    SweepSpec spec = defaults_for(command, o);
    spec.base.n_a = profile.n_a;
    spec.base.n_b = profile.n_b;
    if (!o.config_path.empty()) {
        const std::string text = read_file(o.config_path);
        try {
            spec = parse_sweep_spec_text(text, spec);
        } catch (const Error&) {
            std::cerr << "in " << o.config_path << '\n';
            throw;
        }
    }
    apply_flags(spec, o);

    const std::vector<SweepRow> rows = run_sweep(spec, run_options(o, profile));
    if (spec.output_path.empty()) std::cout << format_csv(spec, rows);
    const int failed = count_failures(rows);
    std::cerr << command << ": " << rows.size() << " rows";
    if (failed) std::cerr << ", " << failed << " with errors";
    if (!spec.output_path.empty()) std::cerr << " -> " << spec.output_path;
    std::cerr << '\n';
    return failed ? kPartial : kOk;
}

int run_reproduce(const Options& o) {
    const NumericProfile profile = profile_by_name(o.profile);
    const std::vector<FigureJob> jobs = figure_recipe(o.figure, profile);
    const std::filesystem::path dir = o.out.empty() ? std::filesystem::path(".") : std::filesystem::path(o.out);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw Error(ErrorCode::IoError, "cannot create '" + dir.string() + "': " + ec.message());

    int failed = 0;
    for (const FigureJob& job : jobs) {
        const std::string path = (dir / (job.name + ".csv")).string();
        if (const auto* w = std::get_if<WignerJob>(&job.job)) {
            ModelConfig cfg = w->cfg;
            if (o.cutoff_na) cfg.n_a = *o.cutoff_na;
            if (o.cutoff_nb) cfg.n_b = *o.cutoff_nb;
            const WignerGrid grid = wigner_grid(probe_for(cfg), w->xs, w->ps);
            write_text_file(path, format_wigner_csv(grid));
            std::cerr << job.name << ": wigner min " << format_number(grid.min_value) << ", negative volume "
                      << format_number(grid.negative_volume) << " -> " << path << '\n';
            continue;
        }
        SweepSpec spec = std::get<SweepSpec>(job.job);
        Options flags = o;
        flags.out = path;
        flags.axes.clear();
        apply_flags(spec, flags);
        const std::vector<SweepRow> rows = run_sweep(spec, run_options(o, profile));
        const int bad = count_failures(rows);
        failed += bad;
        std::cerr << job.name << ": " << rows.size() << " rows" << (bad ? ", errors present" : "") << " -> "
                  << path << '\n';
    }
    return failed ? kPartial : kOk;
}

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::IoError: return kIo;
        case ErrorCode::ConfigError:
        case ErrorCode::InvalidConfig:
        case ErrorCode::InvalidDimension:
        case ErrorCode::NonPositiveTemperature: return kConfig;
        default: return kPartial;
    }
}

void add_model_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--interaction", o.interaction, "quadratic | radiation_pressure");
    cmd->add_option("--g", o.g, "coupling strength");
    cmd->add_option("--b-ext", o.b_ext, "external field drive on resonator B");
    cmd->add_option("--temperature", o.temperature, "bath temperature");
    cmd->add_option("--omega-a", o.omega_a);
    cmd->add_option("--omega-b", o.omega_b);
    cmd->add_option("--axis", o.axes, "swept axis name:min:max:count (repeat for a 2-D grid)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum thermometry and magnetometry with two coupled resonators"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;

    app.add_option("--config", o.config_path, "JSON sweep specification");
    app.add_option("--out", o.out, "output CSV (directory for reproduce); stdout if omitted");
    app.add_option("--profile", o.profile, "numeric profile")->default_val("paper-default");
    app.add_option("--cutoff-na", o.cutoff_na, "Fock cutoff of the probe");
    app.add_option("--cutoff-nb", o.cutoff_nb, "Fock cutoff of resonator B");
    app.add_option("--tol", o.tol, "enable cutoff escalation with this relative tolerance");
    app.add_option("--max-cutoff", o.max_cutoff, "escalation ceiling");
    app.add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--seedless", o.seedless, "fully deterministic output (wall_time_ms written as 0)");

    const std::vector<std::pair<std::string, std::string>> sweeps{
        {"qfi-map", "QFI_T and QFI_B over a (T, B_ext) grid"},
        {"qfi-vs-g", "QFI_T against the coupling g"},
        {"wigner", "Wigner statistics per point; grids written next to --out"},
        {"nongauss", "non-Gaussianity, entropies, kurtoses and squeezing"},
        {"cfi", "classical Fisher information of practical observables"},
        {"qfim", "two-parameter QFIM and SLD incompatibility"},
        {"sld-check", "SLD Lyapunov residuals and trace checks"},
    };
    for (const auto& [name, help] : sweeps) {
        CLI::App* cmd = app.add_subcommand(name, help);
        add_model_flags(cmd, o);
        if (name == "cfi") {
            cmd->add_option("--observable", o.observables, "photon_number | x | x2 | parity (repeatable)");
            cmd->add_option("--param", o.param, "temperature | b_ext")->default_val("temperature");
            cmd->add_option("--method", o.method, "error_propagation | projective")->default_val("error_propagation");
        }
    }
    CLI::App* reproduce = app.add_subcommand("reproduce", "regenerate the data behind a figure");
    reproduce->add_option("figure-id", o.figure, "one of: " + [] {
        std::string ids;
        for (const std::string& id : figure_ids()) ids += (ids.empty() ? "" : ", ") + id;
        return ids;
    }())->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kConfig;
    }

    try {
        if (reproduce->parsed()) return run_reproduce(o);
        for (const CLI::App* cmd : app.get_subcommands()) return run_subcommand(cmd->get_name(), o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kPartial;
    }
    return kOk;
}
