// Two coupled bosonic resonators in truncated Fock space:
// ladder operators, the quadratic and radiation-pressure Hamiltonians, global
// Gibbs states and the reduced state of the probe resonator A.

#pragma once

#include "qthermo/tensor_core.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qthermo {

enum class Interaction {
    Quadratic,         // g (a + a†)² ⊗ (b + b†)
    RadiationPressure, // g a†a ⊗ (b + b†)
};

std::string_view to_string(Interaction kind) noexcept;
Interaction parse_interaction(std::string_view name); // "quadratic" | "radiation_pressure"

// All energies in units of omega_a (ħ = k_B = 1).
struct ModelConfig {
    double omega_a = 1.0;
    double omega_b = 0.04;
    double g = 0.0;
    double b_ext = 0.0;
    double temperature = 0.1;
    Interaction interaction = Interaction::Quadratic;
    int n_a = 20; // Fock levels 0..n_a-1 of the probe
    int n_b = 20;

    // Throws Error{InvalidConfig} (or InvalidDimension for cutoffs < 2).
    // Finite-difference stencils legitimately evaluate b_ext < 0, hence the flag.
    void validate(bool allow_negative_field = false) const;

    int joint_dim() const { return n_a * n_b; }
};

// Tensor-factor metadata: {n} for a single mode, {n_a, n_b} for A ⊗ B.
using ModeDims = std::vector<int>;

struct DensityMatrix {
    ComplexMatrix matrix;
    ModeDims dims;

    int dim() const { return static_cast<int>(matrix.rows()); }
    bool single_mode() const { return dims.size() == 1; }

    // Validates Hermiticity, unit trace (1e-9) and min eigenvalue >= -1e-9;
    // throws Error{InvalidState} otherwise.
    static DensityMatrix checked(ComplexMatrix m, ModeDims dims);
};

ComplexMatrix annihilation(int dim);
ComplexMatrix number_operator(int dim);

struct Quadratures {
    ComplexMatrix x; // (a + a†)/√2
    ComplexMatrix p; // (a - a†)/(i√2)
};
Quadratures quadratures(int dim);

ComplexMatrix build_hamiltonian(const ModelConfig& cfg);

// ρ = exp(-(H - E0)/T) / Z with E0 the ground energy.
DensityMatrix gibbs_state(const ComplexMatrix& h, double temperature, ModeDims dims = {});
DensityMatrix gibbs_state(const SpectralDecomposition& spectrum, double temperature,
                          ModeDims dims);

DensityMatrix probe_state(const DensityMatrix& rho_joint, const ModelConfig& cfg);

// Tr_B of the Gibbs state built from a joint spectrum, without forming the
// joint density matrix: O(n_a² n_b) per eigenvector.
DensityMatrix reduced_gibbs_state(const SpectralDecomposition& spectrum, double temperature,
                                  const ModelConfig& cfg);

// build_hamiltonian -> eigh -> reduced_gibbs_state.
DensityMatrix probe_for(const ModelConfig& cfg);

} // namespace qthermo
