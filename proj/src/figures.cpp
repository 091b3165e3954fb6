// Sweep recipes that regenerate the data behind each published figure panel.

#include "qthermo/errors.hpp"
#include "qthermo/sweep.hpp"

namespace qthermo {

namespace {

ModelConfig figure_base(const NumericProfile& profile, Interaction kind, double g) {
    ModelConfig cfg;
    cfg.omega_a = 1.0;
    cfg.omega_b = 0.04;
    cfg.g = g;
    cfg.interaction = kind;
    cfg.n_a = profile.n_a;
    cfg.n_b = profile.n_b;
    return cfg;
}

SweepSpec sweep(ModelConfig base, std::vector<SweepAxis> axes, std::vector<QuantitySpec> quantities) {
    SweepSpec s;
    s.base = base;
    s.axes = std::move(axes);
    s.quantities = std::move(quantities);
    return s;
}

QuantitySpec simple(QuantityKind k) {
    QuantitySpec q;
    q.kind = k;
    return q;
}

QuantitySpec cfi(ObservableId obs, ParamId param, CfiMethod method = CfiMethod::ErrorPropagation) {
    QuantitySpec q;
    q.kind = QuantityKind::Cfi;
    q.observable = obs;
    q.param = param;
    q.method = method;
    return q;
}

std::string g_label(double g) {
    return "g" + std::to_string(static_cast<int>(g * 100 + 0.5));
}

const SweepAxis kTemperatureMap{AxisName::Temperature, 0.01, 1.0, 34};
const SweepAxis kFieldMap{AxisName::BExt, 0.0, 0.1, 21};
const SweepAxis kCouplingAxis{AxisName::G, 0.01, 0.1, 19};

std::vector<FigureJob> wigner_panel(const NumericProfile& profile, const std::string& name,
                                    Interaction kind, double g) {
    ModelConfig cfg = figure_base(profile, kind, g);
    cfg.temperature = 0.01;
    cfg.b_ext = 0.06;
    const std::vector<double> axis = profile.wigner_axis();
    return {FigureJob{name, WignerJob{cfg, axis, axis}}};
}

} // namespace

std::vector<std::string> figure_ids() {
    return {"fig2", "fig2a", "fig2b", "fig2c", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8",
            "magnetometry"};
}

std::vector<FigureJob> figure_recipe(std::string_view id, const NumericProfile& profile) {
    using enum Interaction;
    if (id == "fig2a") return wigner_panel(profile, "fig2a", RadiationPressure, 0.08);
    if (id == "fig2b") return wigner_panel(profile, "fig2b", Quadratic, 0.04);
    if (id == "fig2c") return wigner_panel(profile, "fig2c", Quadratic, 0.08);
    if (id == "fig2") {
        std::vector<FigureJob> jobs;
        for (const char* panel : {"fig2a", "fig2b", "fig2c"})
            for (FigureJob& j : figure_recipe(panel, profile)) jobs.push_back(std::move(j));
        return jobs;
    }

    if (id == "fig3") {
        // Non-Gaussianity and kurtoses against coupling.
        ModelConfig base = figure_base(profile, Quadratic, 0.0);
        base.temperature = 0.08;
        base.b_ext = 0.06;
        return {FigureJob{"fig3", sweep(base, {kCouplingAxis}, {simple(QuantityKind::NonGauss)})}};
    }

    if (id == "fig4") {
        // QFI_T maps over (T, B_ext) for both couplings.
        std::vector<FigureJob> jobs;
        for (double g : {0.02, 0.08})
            jobs.push_back({"fig4_rp_" + g_label(g),
                            sweep(figure_base(profile, RadiationPressure, g), {kTemperatureMap, kFieldMap},
                                  {simple(QuantityKind::QfiT)})});
        for (double g : {0.02, 0.06, 0.08})
            jobs.push_back({"fig4_quad_" + g_label(g),
                            sweep(figure_base(profile, Quadratic, g), {kTemperatureMap, kFieldMap},
                                  {simple(QuantityKind::QfiT)})});
        return jobs;
    }

    if (id == "fig5") {
        ModelConfig base = figure_base(profile, Quadratic, 0.0);
        base.temperature = 0.06;
        base.b_ext = 0.04;
        return {FigureJob{"fig5", sweep(base, {kCouplingAxis}, {simple(QuantityKind::QfiT)})}};
    }

    if (id == "magnetometry") {
        std::vector<FigureJob> jobs;
        const SweepAxis field{AxisName::BExt, 0.0, 0.1, 21};
        for (double g : {0.02, 0.04, 0.06, 0.08}) {
            ModelConfig rp = figure_base(profile, RadiationPressure, g);
            rp.temperature = 0.3;
            jobs.push_back({"magnetometry_rp_" + g_label(g), sweep(rp, {field}, {simple(QuantityKind::QfiB)})});
            ModelConfig quad = figure_base(profile, Quadratic, g);
            quad.temperature = 0.06;
            jobs.push_back({"magnetometry_quad_" + g_label(g), sweep(quad, {field}, {simple(QuantityKind::QfiB)})});
        }
        return jobs;
    }

    if (id == "fig6") {
        std::vector<FigureJob> jobs;
        const SweepAxis temperature{AxisName::Temperature, 0.02, 1.0, 50};
        for (Interaction kind : {RadiationPressure, Quadratic})
            for (double g : {0.02, 0.08}) {
                ModelConfig base = figure_base(profile, kind, g);
                base.b_ext = 0.04;
                jobs.push_back({std::string("fig6a_") + (kind == Quadratic ? "quad_" : "rp_") + g_label(g),
                                sweep(base, {temperature},
                                      {cfi(ObservableId::PhotonNumber, ParamId::Temperature),
                                       simple(QuantityKind::QfiT)})});
            }
        ModelConfig quad = figure_base(profile, Quadratic, 0.08);
        quad.b_ext = 0.04;
        std::vector<QuantitySpec> observables;
        for (ObservableId o : {ObservableId::PhotonNumber, ObservableId::QuadratureX,
                               ObservableId::QuadratureXSquared, ObservableId::Parity})
            observables.push_back(cfi(o, ParamId::Temperature));
        jobs.push_back({"fig6b_quad_g8", sweep(quad, {temperature}, observables)});
        const SweepAxis field{AxisName::BExt, 0.0, 0.1, 21};
        for (Interaction kind : {RadiationPressure, Quadratic})
            for (double g : {0.02, 0.08}) {
                ModelConfig base = figure_base(profile, kind, g);
                base.temperature = 0.2;
                jobs.push_back({std::string("fig6c_") + (kind == Quadratic ? "quad_" : "rp_") + g_label(g),
                                sweep(base, {field},
                                      {cfi(ObservableId::PhotonNumber, ParamId::MagneticField),
                                       simple(QuantityKind::QfiB)})});
            }
        return jobs;
    }

    if (id == "fig7" || id == "fig8") {
        // Off-diagonal QFIM element: fig7 radiation pressure, fig8 quadratic.
        const Interaction kind = id == "fig7" ? RadiationPressure : Quadratic;
        const SweepAxis field{AxisName::BExt, 0.01, 0.1, 19};
        std::vector<FigureJob> jobs;
        for (double g : {0.02, 0.08})
            jobs.push_back({std::string(id) + "_" + g_label(g),
                            sweep(figure_base(profile, kind, g), {kTemperatureMap, field},
                                  {simple(QuantityKind::Qfim)})});
        return jobs;
    }

    throw Error(ErrorCode::ConfigError, "unknown figure id '" + std::string(id) + "'");
}

} // namespace qthermo
