#include "qthermo/sweep.hpp"

#include "qthermo/errors.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace qthermo {

using nlohmann::json;

// ---------------------------------------------------------------- profile ---

std::vector<double> NumericProfile::wigner_axis() const {
    return uniform_axis(wigner_lo, wigner_hi, wigner_points);
}

NumericProfile profile_by_name(std::string_view name) {
    if (name == "paper-default") return NumericProfile{};
    throw Error(ErrorCode::ConfigError, "unknown profile '" + std::string(name) + "'");
}

// ------------------------------------------------------------------- axes ---

std::string_view to_string(AxisName a) noexcept {
    switch (a) {
        case AxisName::Temperature: return "temperature";
        case AxisName::BExt: return "b_ext";
        case AxisName::G: return "g";
    }
    return "unknown";
}

double SweepAxis::value(int index) const {
    if (index == count - 1) return max;
    return min + (max - min) * static_cast<double>(index) / static_cast<double>(count - 1);
}

ModelConfig with_axis(ModelConfig cfg, AxisName axis, double value) {
    switch (axis) {
        case AxisName::Temperature: cfg.temperature = value; break;
        case AxisName::BExt: cfg.b_ext = value; break;
        case AxisName::G: cfg.g = value; break;
    }
    return cfg;
}

// ------------------------------------------------------------- quantities ---

std::vector<std::string> QuantitySpec::columns() const {
    switch (kind) {
        case QuantityKind::QfiT: return {"qfi_t"};
        case QuantityKind::QfiB: return {"qfi_b"};
        case QuantityKind::Qfim: return {"f_tt", "f_bb", "f_tb", "det", "c_tb", "r_tb"};
        case QuantityKind::Cfi: {
            const char* prefix = method == CfiMethod::ErrorPropagation ? "cfi_ep_" : "cfi_proj_";
            return {std::string(prefix) + std::string(to_string(observable)) + "_" +
                    std::string(to_string(param))};
        }
        case QuantityKind::Wigner: return {"wigner_min", "wigner_negative_volume", "wigner_integral"};
        case QuantityKind::NonGauss:
            return {"delta", "entropy_state", "entropy_gaussian", "min_rotated_variance",
                    "kurtosis_x", "kurtosis_p", "var_x", "var_p"};
        case QuantityKind::SldCheck:
            return {"sld_residual_t", "sld_residual_b", "sld_trace_t", "sld_trace_b",
                    "sld_qfi_rel_err_t", "sld_qfi_rel_err_b"};
    }
    return {};
}

// ------------------------------------------------------------------- spec ---

namespace {

[[noreturn]] void config_error(const std::string& field, const std::string& what) {
    throw Error(ErrorCode::ConfigError, "field '" + field + "': " + what);
}

} // namespace

void SweepSpec::validate() const {
    try {
        base.validate();
    } catch (const Error& e) {
        config_error("base", e.what());
    }
    if (axes.empty() || axes.size() > 2) config_error("axes", "expected 1 or 2 axes");
    std::set<AxisName> seen;
    for (std::size_t i = 0; i < axes.size(); ++i) {
        const std::string f = "axes[" + std::to_string(i) + "]";
        const SweepAxis& a = axes[i];
        if (!seen.insert(a.name).second) config_error(f + ".name", "axis swept twice");
        if (!(std::isfinite(a.min) && std::isfinite(a.max) && a.max > a.min))
            config_error(f + ".max", "bounds must satisfy min < max");
        if (a.count < 2) config_error(f + ".count", "must be >= 2");
        for (int k = 0; k < a.count; ++k) {
            try {
                with_axis(base, a.name, a.value(k)).validate();
            } catch (const Error& e) {
                config_error(f, std::string("grid leaves the valid model domain: ") + e.what());
            }
        }
    }
    if (quantities.empty()) config_error("quantities", "at least one quantity is required");
    if (!(convergence.tol > 0.0)) config_error("convergence.tol", "must be > 0");
    if (convergence.enabled && convergence.max_cutoff < std::max(base.n_a, base.n_b))
        config_error("convergence.max_cutoff", "must be >= the initial cutoffs");
}

std::size_t SweepSpec::point_count() const {
    std::size_t n = 1;
    for (const SweepAxis& a : axes) n *= static_cast<std::size_t>(a.count);
    return n;
}

std::vector<std::string> SweepSpec::header() const {
    std::vector<std::string> h;
    for (const SweepAxis& a : axes) h.emplace_back(to_string(a.name));
    for (const QuantitySpec& q : quantities)
        for (std::string& c : q.columns()) h.push_back(std::move(c));
    for (const char* c : {"converged", "cutoff_na", "cutoff_nb", "error_code", "wall_time_ms"})
        h.emplace_back(c);
    return h;
}

// ------------------------------------------------------------ convergence ---

ConvergenceResult converge_cutoff(const ModelConfig& cfg,
                                  const std::function<double(const ModelConfig&)>& quantity,
                                  double tol, int max_cutoff) {
    if (!(tol > 0.0)) throw Error(ErrorCode::ConfigError, "convergence tol must be > 0");
    if (max_cutoff < std::max(cfg.n_a, cfg.n_b))
        throw Error(ErrorCode::ConfigError, "max_cutoff is below the initial cutoffs");

    ModelConfig current = cfg;
    double value = quantity(current);
    while (std::max(current.n_a, current.n_b) + 5 <= max_cutoff) {
        ModelConfig next = current;
        next.n_a += 5;
        next.n_b += 5;
        const double next_value = quantity(next);
        if (std::abs(next_value - value) <= tol * std::max(std::abs(next_value), 1e-12))
            return {value, current.n_a, current.n_b, true};
        current = next;
        value = next_value;
    }
    return {value, current.n_a, current.n_b, false};
}

// ------------------------------------------------------------- evaluation ---

namespace {

class PointEvaluator {
public:
    PointEvaluator(const ModelConfig& cfg, const NumericProfile& profile)
        : cfg_(cfg), profile_(profile) {}

    const DensityMatrix& probe() {
        if (!probe_) probe_ = probe_for(cfg_);
        return *probe_;
    }

    const ComplexMatrix& derivative(ParamId p) {
        auto& slot = p == ParamId::Temperature ? d_t_ : d_b_;
        if (!slot) slot = probe_derivative(cfg_, p);
        return *slot;
    }

    std::vector<double> evaluate(const QuantitySpec& q, std::optional<WignerGrid>* grid_out) {
        switch (q.kind) {
            case QuantityKind::QfiT:
                return {qfi(probe(), derivative(ParamId::Temperature), profile_.qfi_floor)};
            case QuantityKind::QfiB:
                return {qfi(probe(), derivative(ParamId::MagneticField), profile_.qfi_floor)};
            case QuantityKind::Qfim: {
                const QfimResult r = qfim(probe(), derivative(ParamId::Temperature),
                                          derivative(ParamId::MagneticField), profile_.qfi_floor);
                return {r.f_tt, r.f_bb, r.f_tb, r.det, r.c_tb, r.r_tb};
            }
            case QuantityKind::Cfi:
                if (q.method == CfiMethod::ErrorPropagation)
                    return {cfi_error_propagation(cfg_, q.observable, q.param)};
                return {cfi_projective(probe(), derivative(q.param), q.observable, profile_.prob_floor)};
            case QuantityKind::Wigner: {
                const std::vector<double> axis = profile_.wigner_axis();
                WignerGrid g = wigner_grid(probe(), axis, axis);
                std::vector<double> v{g.min_value, g.negative_volume, g.total_integral};
                if (grid_out) *grid_out = std::move(g);
                return v;
            }
            case QuantityKind::NonGauss: {
                const GaussianSummary s = non_gaussianity(probe());
                return {s.delta, s.entropy_state, s.entropy_gaussian, s.min_rotated_variance,
                        s.kurtosis_x, s.kurtosis_p, s.var_x, s.var_p};
            }
            case QuantityKind::SldCheck: {
                std::vector<double> residual, trace, rel;
                for (ParamId p : {ParamId::Temperature, ParamId::MagneticField}) {
                    const ComplexMatrix& d = derivative(p);
                    const ComplexMatrix l = sld(probe(), d, profile_.qfi_floor);
                    residual.push_back(lyapunov_residual(probe(), d, l, profile_.qfi_floor));
                    trace.push_back((probe().matrix * l).trace().real());
                    const double f = qfi(probe(), d, profile_.qfi_floor);
                    const double f_sld = (probe().matrix * l * l).trace().real();
                    rel.push_back(std::abs(f_sld - f) / std::max(std::abs(f), 1e-300));
                }
                return {residual[0], residual[1], trace[0], trace[1], rel[0], rel[1]};
            }
        }
        return {};
    }

private:
    ModelConfig cfg_;
    NumericProfile profile_;
    std::optional<DensityMatrix> probe_;
    std::optional<ComplexMatrix> d_t_;
    std::optional<ComplexMatrix> d_b_;
};

} // namespace

PointValues evaluate_point(const ModelConfig& cfg, const std::vector<QuantitySpec>& quantities,
                           const NumericProfile& profile, bool keep_wigner_grid) {
    PointValues out;
    PointEvaluator ev(cfg, profile);
    for (const QuantitySpec& q : quantities) {
        const std::size_t width = q.columns().size();
        try {
            std::vector<double> v = ev.evaluate(q, keep_wigner_grid ? &out.wigner : nullptr);
            for (double x : v) out.values.emplace_back(x);
        } catch (const Error& e) {
            out.values.insert(out.values.end(), width, std::nullopt);
            if (out.error_code.empty()) out.error_code = std::string(to_string(e.code()));
        } catch (const std::exception&) {
            out.values.insert(out.values.end(), width, std::nullopt);
            if (out.error_code.empty()) out.error_code = "InternalError";
        }
    }
    return out;
}

namespace {

ModelConfig point_config(const SweepSpec& spec, std::size_t index, std::vector<double>& coords) {
    ModelConfig cfg = spec.base;
    coords.clear();
    std::size_t stride = spec.point_count();
    for (const SweepAxis& a : spec.axes) {
        stride /= static_cast<std::size_t>(a.count);
        const int k = static_cast<int>((index / stride) % static_cast<std::size_t>(a.count));
        const double v = a.value(k);
        coords.push_back(v);
        cfg = with_axis(cfg, a.name, v);
    }
    return cfg;
}

struct EvaluatedRow {
    SweepRow row;
    std::optional<WignerGrid> wigner;
};

EvaluatedRow evaluate_row(const SweepSpec& spec, std::size_t index, const RunOptions& options,
                          bool keep_wigner) {
    const auto start = std::chrono::steady_clock::now();
    EvaluatedRow out;
    SweepRow& row = out.row;
    const ModelConfig cfg = point_config(spec, index, row.coordinates);

    PointValues chosen;
    if (spec.convergence.enabled) {
        std::vector<std::pair<int, PointValues>> history;
        auto monitored = [&](const ModelConfig& c) {
            history.emplace_back(c.n_a, evaluate_point(c, spec.quantities, options.profile, keep_wigner));
            const PointValues& pv = history.back().second;
            if (pv.values.empty() || !pv.values.front())
                throw Error(ErrorCode::DomainError, "monitored quantity unavailable");
            return *pv.values.front();
        };
        try {
            const ConvergenceResult r =
                converge_cutoff(cfg, monitored, spec.convergence.tol, spec.convergence.max_cutoff);
            row.converged = r.converged;
            row.cutoff_na = r.n_a;
            row.cutoff_nb = r.n_b;
            for (auto& [n_a, pv] : history)
                if (n_a == r.n_a) chosen = std::move(pv);
        } catch (const Error&) {
            chosen = std::move(history.back().second);
            row.converged = false;
            row.cutoff_na = cfg.n_a + 5 * static_cast<int>(history.size() - 1);
            row.cutoff_nb = cfg.n_b + 5 * static_cast<int>(history.size() - 1);
        }
    } else {
        chosen = evaluate_point(cfg, spec.quantities, options.profile, keep_wigner);
        row.cutoff_na = cfg.n_a;
        row.cutoff_nb = cfg.n_b;
    }
    row.values = std::move(chosen.values);
    row.error_code = std::move(chosen.error_code);
    out.wigner = std::move(chosen.wigner);

    if (!options.deterministic) {
        row.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    }
    return out;
}

std::string wigner_path(const std::string& output_path, std::size_t index) {
    std::string stem = output_path;
    if (stem.size() > 4 && stem.compare(stem.size() - 4, 4, ".csv") == 0) stem.resize(stem.size() - 4);
    return stem + "_wigner_" + std::to_string(index) + ".csv";
}

} // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const RunOptions& options) {
    spec.validate();
    const std::size_t n = spec.point_count();
    bool wants_wigner = false;
    for (const QuantitySpec& q : spec.quantities) wants_wigner |= q.kind == QuantityKind::Wigner;
    const bool keep_wigner = wants_wigner && !spec.output_path.empty();

    std::vector<EvaluatedRow> results(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) results[i] = evaluate_row(spec, i, options, keep_wigner);
    };
    const int threads = std::max(1, std::min<int>(options.threads, static_cast<int>(n)));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    std::vector<SweepRow> rows;
    rows.reserve(n);
    for (EvaluatedRow& r : results) rows.push_back(std::move(r.row));

    if (!spec.output_path.empty()) {
        write_text_file(spec.output_path, format_csv(spec, rows));
        if (keep_wigner)
            for (std::size_t i = 0; i < n; ++i)
                if (results[i].wigner)
                    write_text_file(wigner_path(spec.output_path, i), format_wigner_csv(*results[i].wigner));
    }
    return rows;
}

// ----------------------------------------------------------------- output ---

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

std::string format_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    const std::vector<std::string> header = spec.header();
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << '\n';
    for (const SweepRow& row : rows) {
        bool first = true;
        auto cell = [&](const std::string& s) {
            if (!first) out << ',';
            out << s;
            first = false;
        };
        for (double c : row.coordinates) cell(format_number(c));
        for (const std::optional<double>& v : row.values) cell(v ? format_number(*v) : std::string());
        cell(row.converged ? "true" : "false");
        cell(std::to_string(row.cutoff_na));
        cell(std::to_string(row.cutoff_nb));
        cell(row.error_code);
        cell(std::to_string(row.wall_time_ms));
        out << '\n';
    }
    return out.str();
}

std::string format_wigner_csv(const WignerGrid& grid) {
    std::ostringstream out;
    out << "x,p,w\n";
    for (std::size_t i = 0; i < grid.xs.size(); ++i)
        for (std::size_t j = 0; j < grid.ps.size(); ++j)
            out << format_number(grid.xs[i]) << ',' << format_number(grid.ps[j]) << ','
                << format_number(grid.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)))
                << '\n';
    return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
    f << text;
    f.close();
    if (!f) throw Error(ErrorCode::IoError, "failed writing '" + path + "'");
}

// ------------------------------------------------------------------- JSON ---

namespace {

void reject_unknown_keys(const json& obj, const std::string& path,
                         std::initializer_list<std::string_view> allowed) {
    if (!obj.is_object()) config_error(path.empty() ? "<root>" : path, "expected an object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (std::string_view a : allowed) ok |= it.key() == a;
        if (!ok) config_error(path.empty() ? it.key() : path + "." + it.key(), "unknown key");
    }
}

template <class T>
void read_field(const json& obj, const std::string& path, const char* key, T& target) {
    auto it = obj.find(key);
    if (it == obj.end()) return;
    const std::string f = path.empty() ? key : path + "." + key;
    try {
        if constexpr (std::is_same_v<T, int>) {
            if (!it->is_number_integer()) config_error(f, "expected an integer");
        } else if constexpr (std::is_same_v<T, double>) {
            if (!it->is_number()) config_error(f, "expected a number");
        } else if constexpr (std::is_same_v<T, bool>) {
            if (!it->is_boolean()) config_error(f, "expected a boolean");
        } else if constexpr (std::is_same_v<T, std::string>) {
            if (!it->is_string()) config_error(f, "expected a string");
        }
        target = it->get<T>();
    } catch (const json::exception& e) {
        config_error(f, e.what());
    }
}

template <class Fn>
auto with_field(const std::string& field, Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ConfigError) throw;
        config_error(field, e.what());
    }
}

AxisName parse_axis_name(const std::string& s, const std::string& field) {
    if (s == "temperature") return AxisName::Temperature;
    if (s == "b_ext") return AxisName::BExt;
    if (s == "g") return AxisName::G;
    config_error(field, "unknown axis '" + s + "' (expected temperature, b_ext or g)");
}

QuantityKind parse_quantity_kind(const std::string& s, const std::string& field) {
    if (s == "qfi_t") return QuantityKind::QfiT;
    if (s == "qfi_b") return QuantityKind::QfiB;
    if (s == "qfim") return QuantityKind::Qfim;
    if (s == "cfi") return QuantityKind::Cfi;
    if (s == "wigner") return QuantityKind::Wigner;
    if (s == "nongauss") return QuantityKind::NonGauss;
    if (s == "sld_check") return QuantityKind::SldCheck;
    config_error(field, "unknown quantity '" + s + "'");
}

std::string_view quantity_name(QuantityKind k) {
    switch (k) {
        case QuantityKind::QfiT: return "qfi_t";
        case QuantityKind::QfiB: return "qfi_b";
        case QuantityKind::Qfim: return "qfim";
        case QuantityKind::Cfi: return "cfi";
        case QuantityKind::Wigner: return "wigner";
        case QuantityKind::NonGauss: return "nongauss";
        case QuantityKind::SldCheck: return "sld_check";
    }
    return "unknown";
}

QuantitySpec parse_quantity(const json& j, const std::string& path) {
    QuantitySpec q;
    if (j.is_string()) {
        q.kind = parse_quantity_kind(j.get<std::string>(), path);
        if (q.kind == QuantityKind::Cfi) config_error(path, "cfi needs an object with observable and param");
        return q;
    }
    reject_unknown_keys(j, path, {"name", "observable", "param", "method"});
    std::string name;
    read_field(j, path, "name", name);
    if (name.empty()) config_error(path + ".name", "missing quantity name");
    q.kind = parse_quantity_kind(name, path + ".name");
    if (q.kind != QuantityKind::Cfi) {
        if (j.size() != 1) config_error(path, "only cfi takes observable/param/method");
        return q;
    }
    std::string observable, param, method = "error_propagation";
    read_field(j, path, "observable", observable);
    read_field(j, path, "param", param);
    read_field(j, path, "method", method);
    if (observable.empty()) config_error(path + ".observable", "required for cfi");
    if (param.empty()) config_error(path + ".param", "required for cfi");
    q.observable = with_field(path + ".observable", [&] { return parse_observable(observable); });
    q.param = with_field(path + ".param", [&] { return parse_param(param); });
    if (method == "error_propagation") q.method = CfiMethod::ErrorPropagation;
    else if (method == "projective") q.method = CfiMethod::Projective;
    else config_error(path + ".method", "expected error_propagation or projective");
    return q;
}

} // namespace

SweepSpec parse_sweep_spec(const json& j, const SweepSpec& defaults) {
    SweepSpec spec = defaults;
    reject_unknown_keys(j, "", {"base", "axes", "quantities", "convergence", "output_path"});

    if (auto it = j.find("base"); it != j.end()) {
        reject_unknown_keys(*it, "base",
                            {"omega_a", "omega_b", "g", "b_ext", "temperature", "interaction", "n_a", "n_b"});
        ModelConfig& b = spec.base;
        read_field(*it, "base", "omega_a", b.omega_a);
        read_field(*it, "base", "omega_b", b.omega_b);
        read_field(*it, "base", "g", b.g);
        read_field(*it, "base", "b_ext", b.b_ext);
        read_field(*it, "base", "temperature", b.temperature);
        read_field(*it, "base", "n_a", b.n_a);
        read_field(*it, "base", "n_b", b.n_b);
        std::string interaction(to_string(b.interaction));
        read_field(*it, "base", "interaction", interaction);
        b.interaction = with_field("base.interaction", [&] { return parse_interaction(interaction); });
    }

    if (auto it = j.find("axes"); it != j.end()) {
        if (!it->is_array()) config_error("axes", "expected an array");
        spec.axes.clear();
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string path = "axes[" + std::to_string(i) + "]";
            const json& a = (*it)[i];
            reject_unknown_keys(a, path, {"name", "min", "max", "count"});
            for (const char* key : {"name", "min", "max", "count"})
                if (!a.contains(key)) config_error(path + "." + key, "required");
            SweepAxis axis;
            std::string name;
            read_field(a, path, "name", name);
            axis.name = parse_axis_name(name, path + ".name");
            read_field(a, path, "min", axis.min);
            read_field(a, path, "max", axis.max);
            read_field(a, path, "count", axis.count);
            spec.axes.push_back(axis);
        }
    }

    if (auto it = j.find("quantities"); it != j.end()) {
        if (!it->is_array()) config_error("quantities", "expected an array");
        spec.quantities.clear();
        for (std::size_t i = 0; i < it->size(); ++i)
            spec.quantities.push_back(parse_quantity((*it)[i], "quantities[" + std::to_string(i) + "]"));
    }

    if (auto it = j.find("convergence"); it != j.end()) {
        reject_unknown_keys(*it, "convergence", {"enabled", "tol", "max_cutoff"});
        read_field(*it, "convergence", "enabled", spec.convergence.enabled);
        read_field(*it, "convergence", "tol", spec.convergence.tol);
        read_field(*it, "convergence", "max_cutoff", spec.convergence.max_cutoff);
    }

    read_field(j, "", "output_path", spec.output_path);
    spec.validate();
    return spec;
}

SweepSpec parse_sweep_spec_text(std::string_view text, const SweepSpec& defaults) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ConfigError, std::string("malformed JSON: ") + e.what());
    }
    return parse_sweep_spec(j, defaults);
}

json to_json(const SweepSpec& spec) {
    json j;
    j["base"] = {{"omega_a", spec.base.omega_a},     {"omega_b", spec.base.omega_b},
                 {"g", spec.base.g},                 {"b_ext", spec.base.b_ext},
                 {"temperature", spec.base.temperature},
                 {"interaction", std::string(to_string(spec.base.interaction))},
                 {"n_a", spec.base.n_a},             {"n_b", spec.base.n_b}};
    j["axes"] = json::array();
    for (const SweepAxis& a : spec.axes)
        j["axes"].push_back({{"name", std::string(to_string(a.name))}, {"min", a.min}, {"max", a.max}, {"count", a.count}});
    j["quantities"] = json::array();
    for (const QuantitySpec& q : spec.quantities) {
        if (q.kind != QuantityKind::Cfi) {
            j["quantities"].push_back(std::string(quantity_name(q.kind)));
        } else {
            j["quantities"].push_back({{"name", "cfi"},
                                       {"observable", std::string(to_string(q.observable))},
                                       {"param", std::string(to_string(q.param))},
                                       {"method", q.method == CfiMethod::ErrorPropagation ? "error_propagation" : "projective"}});
        }
    }
    j["convergence"] = {{"enabled", spec.convergence.enabled},
                        {"tol", spec.convergence.tol},
                        {"max_cutoff", spec.convergence.max_cutoff}};
    j["output_path"] = spec.output_path;
    return j;
}

} // namespace qthermo
