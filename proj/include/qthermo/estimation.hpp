// Parameter derivatives of the probe state and the Fisher
// information quantities built from them: single-parameter QFI, the 2×2 QFIM
// for θ = (T, B_ext), symmetric logarithmic derivatives (SLDs), the SLD
// compatibility statistics, and classical Fisher information for the four
// practical observables.

#pragma once

#include "qthermo/bosonic_model.hpp"

#include <string_view>

namespace qthermo {

enum class ParamId { Temperature, MagneticField };
enum class ObservableId { PhotonNumber, QuadratureX, QuadratureXSquared, Parity };

std::string_view to_string(ParamId p) noexcept;
std::string_view to_string(ObservableId o) noexcept;
ParamId parse_param(std::string_view name);           // "temperature" | "b_ext"
ObservableId parse_observable(std::string_view name); // "photon_number" | "x" | "x2" | "parity"

inline constexpr double kQfiFloor = 1e-12;         // drop q_m + q_n <= floor
inline constexpr double kProbabilityFloor = 1e-14; // drop p_x <= floor
inline constexpr double kVarianceFloor = 1e-12;

double parameter_value(const ModelConfig& cfg, ParamId param);
ModelConfig with_parameter(ModelConfig cfg, ParamId param, double value);

// 1e-4 · max(|θ|, 0.01)
double default_step(const ModelConfig& cfg, ParamId param);

// Central difference [ρ_A(θ+h) − ρ_A(θ−h)]/(2h) of the reduced probe state.
ComplexMatrix probe_derivative(const ModelConfig& cfg, ParamId param, double step);
ComplexMatrix probe_derivative(const ModelConfig& cfg, ParamId param);

// Step-halving diagnostic ‖D(h) − D(h/2)‖ / ‖D(h/2) − D(h/4)‖ (max norm).
// Close to 4 where the second-order scheme is in its asymptotic range.
double derivative_richardson_ratio(const ModelConfig& cfg, ParamId param, double step);

double qfi(const DensityMatrix& rho, const ComplexMatrix& drho, double floor = kQfiFloor);

ComplexMatrix sld(const DensityMatrix& rho, const ComplexMatrix& drho, double floor = kQfiFloor);

// max |∂ρ − (Lρ + ρL)/2| over eigenbasis pairs (m, n) with q_m + q_n > floor.
double lyapunov_residual(const DensityMatrix& rho, const ComplexMatrix& drho,
                         const ComplexMatrix& l, double floor = kQfiFloor);

struct SldCompatibility {
    double c_tb = 0.0; // (1/2i) Tr[ρ [L_T, L_B]]
    double r_tb = 0.0; // Re Tr[ρ [L_T, L_B]]; zero up to round-off for Hermitian inputs
};

SldCompatibility sld_compatibility(const DensityMatrix& rho, const ComplexMatrix& l_t,
                                   const ComplexMatrix& l_b);

struct QfimResult {
    double f_tt = 0.0;
    double f_bb = 0.0;
    double f_tb = 0.0;
    double det = 0.0;
    double c_tb = 0.0;
    double r_tb = 0.0;

    double min_eigenvalue() const;
};

QfimResult qfim(const DensityMatrix& rho, const ComplexMatrix& drho_t, const ComplexMatrix& drho_b,
                double floor = kQfiFloor);

// Hermitian single-mode operator for `obs` at the given cutoff.
ComplexMatrix observable_operator(ObservableId obs, int dim);

// (∂_λ⟨O⟩)² / Var(O) on the probe, with the mean differentiated by central
// differences. Throws Error{DegenerateVariance} when Var(O) <= var_floor.
double cfi_error_propagation(const ModelConfig& cfg, ObservableId obs, ParamId param, double step,
                             double var_floor = kVarianceFloor);
double cfi_error_propagation(const ModelConfig& cfg, ObservableId obs, ParamId param);

// Σ_x (∂p_x)² / p_x for the projective measurement associated with `obs`:
// Fock populations, the two parity sectors, or the eigenprojectors of the
// truncated quadrature (X² groups ±x eigenvectors into one outcome).
double cfi_projective(const DensityMatrix& rho, const ComplexMatrix& drho, ObservableId obs,
                      double prob_floor = kProbabilityFloor);

// Convenience wrappers evaluating the probe and its derivatives at cfg with
// the default step rule.
double qfi_at(const ModelConfig& cfg, ParamId param);
QfimResult qfim_at(const ModelConfig& cfg);

} // namespace qthermo
