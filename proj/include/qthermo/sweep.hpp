// Parameter sweeps over (T, B_ext, g) with automatic Fock-cutoff
// escalation, a deterministic worker pool, and CSV output.

#pragma once

#include "qthermo/estimation.hpp"
#include "qthermo/phase_space.hpp"
#include "qthermo/state_diagnostics.hpp"

#include <json.hpp>

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qthermo {

// Numerical defaults bundled under one name. Only "paper-default" exists.
struct NumericProfile {
    std::string name = "paper-default";
    int n_a = 10;
    int n_b = 10;
    double qfi_floor = kQfiFloor;
    double prob_floor = kProbabilityFloor;
    double wigner_lo = -5.0;
    double wigner_hi = 5.0;
    int wigner_points = 201;

    std::vector<double> wigner_axis() const;
};

NumericProfile profile_by_name(std::string_view name); // throws Error{ConfigError}

enum class AxisName { Temperature, BExt, G };
std::string_view to_string(AxisName a) noexcept;

struct SweepAxis {
    AxisName name = AxisName::G;
    double min = 0.0;
    double max = 1.0;
    int count = 2;

    double value(int index) const; // min + (max − min)·index/(count − 1)
};

ModelConfig with_axis(ModelConfig cfg, AxisName axis, double value);

enum class QuantityKind { QfiT, QfiB, Qfim, Cfi, Wigner, NonGauss, SldCheck };
enum class CfiMethod { ErrorPropagation, Projective };

struct QuantitySpec {
    QuantityKind kind = QuantityKind::QfiT;
    // Used only by QuantityKind::Cfi.
    ObservableId observable = ObservableId::PhotonNumber;
    ParamId param = ParamId::Temperature;
    CfiMethod method = CfiMethod::ErrorPropagation;

    std::vector<std::string> columns() const;
};

struct ConvergenceSpec {
    bool enabled = false;
    double tol = 1e-6;
    int max_cutoff = 40;
};

struct SweepSpec {
    ModelConfig base;
    std::vector<SweepAxis> axes; // 1 or 2, row-major with the first axis outermost
    std::vector<QuantitySpec> quantities;
    ConvergenceSpec convergence;
    std::string output_path;

    void validate() const; // throws Error{ConfigError} naming the offending field
    std::size_t point_count() const;
    std::vector<std::string> header() const;
};

struct SweepRow {
    std::vector<double> coordinates;
    std::vector<std::optional<double>> values; // one per quantity column, nullopt on error
    bool converged = false;
    int cutoff_na = 0;
    int cutoff_nb = 0;
    std::string error_code; // empty when every requested quantity evaluated
    long long wall_time_ms = 0;
};

struct RunOptions {
    int threads = 1;
    bool deterministic = false; // write wall_time_ms as 0
    NumericProfile profile;
};

struct ConvergenceResult {
    double value = 0.0;
    int n_a = 0;
    int n_b = 0;
    bool converged = false;
};

// Compares the quantity at (n_a, n_b) and (n_a + 5, n_b + 5), escalating until
// |Δ| <= tol·max(|value|, 1e-12). On success the value and cutoffs of the
// lower pair are returned; when the next step would exceed max_cutoff the last
// evaluated value is returned with converged = false.
ConvergenceResult converge_cutoff(const ModelConfig& cfg,
                                  const std::function<double(const ModelConfig&)>& quantity,
                                  double tol, int max_cutoff);

// Scalar values of every requested quantity at one configuration, in column
// order; a failing quantity yields nullopt cells and its error code.
struct PointValues {
    std::vector<std::optional<double>> values;
    std::string error_code;
    std::optional<WignerGrid> wigner;
};

PointValues evaluate_point(const ModelConfig& cfg, const std::vector<QuantitySpec>& quantities,
                           const NumericProfile& profile, bool keep_wigner_grid = false);

// Evaluates every grid point (worker pool of options.threads), orders rows by
// grid index, and writes spec.output_path (plus per-point Wigner grids when
// requested) if the path is non-empty. Throws Error{IoError} on write failure.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, const RunOptions& options = {});

std::string format_number(double v); // scientific, 17 significant digits
std::string format_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows);
std::string format_wigner_csv(const WignerGrid& grid);
void write_text_file(const std::string& path, const std::string& text);

// JSON ⇄ SweepSpec. Unknown keys are errors; absent keys keep the values in
// `defaults`. Errors are Error{ConfigError} with the JSON path of the field.
SweepSpec parse_sweep_spec(const nlohmann::json& j, const SweepSpec& defaults = {});
SweepSpec parse_sweep_spec_text(std::string_view text, const SweepSpec& defaults = {});
nlohmann::json to_json(const SweepSpec& spec);

// Figure reproduction recipes.
struct WignerJob {
    ModelConfig cfg;
    std::vector<double> xs;
    std::vector<double> ps;
};

struct FigureJob {
    std::string name; // used as the output file suffix
    std::variant<SweepSpec, WignerJob> job;
};

std::vector<std::string> figure_ids();
std::vector<FigureJob> figure_recipe(std::string_view id, const NumericProfile& profile);

} // namespace qthermo
