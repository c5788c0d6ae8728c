#pragma once

#include "nosig/complex_matrix.hpp"
#include "nosig/dimension_spec.hpp"

#include <string>
#include <vector>

namespace nosig {

inline constexpr double kNormTol = 1e-10;
inline constexpr double kEigenFloor = -1e-9;

/// Normalized amplitude vector over a labeled tensor-product space.
struct PureState {
    DimensionSpec dims;
    CVec amplitudes;
};

/// Hermitian, positive, unit-trace operator over a labeled space.
struct DensityOperator {
    DimensionSpec dims;
    ComplexMatrix matrix;
};

/// Validating constructors; throw std::invalid_argument when the stated
/// invariants fail (norm within 1e-10; Hermitian within 1e-10, eigenvalues
/// >= -1e-9, trace 1 within 1e-10).
PureState make_pure_state(DimensionSpec dims, CVec amplitudes);
DensityOperator make_density_operator(DimensionSpec dims, ComplexMatrix matrix);

DensityOperator pure_to_density(const PureState& s);

DensityOperator reduced_state(const DensityOperator& rho, const std::vector<std::string>& keep);

/// Outcome probabilities Tr(P_i rho) for a complete orthogonal projector
/// set. Rejects sets that are not Hermitian idempotents or do not sum to
/// the identity within 1e-9.
std::vector<double> measurement_probabilities(const DensityOperator& rho,
                                              const std::vector<ComplexMatrix>& projectors);

// -- states the scenarios are built from ------------------------------------

/// Two-qubit spin singlet (|ud> - |du>)/sqrt(2); factors "s1", "s2",
/// spin basis ordered {up, down}.
PureState singlet();

/// Path-entangled photon pair (|a a'> + |b b'>)/sqrt(2); factors "p1", "p2".
PureState greenberger_initial();

/// The 8-dimensional photon-pair + phase-shifter state reached just before
/// detection, with shifter evolution phases alpha (before the coupling) and
/// beta (after). Factors "p1" {h,g} x "p2" {c',d'} x "S" {u,v}:
///   1/2 [ (-e^{ia}|h d'> + e^{-ia}|g c'>) e^{ib}|u>
///       + ( e^{ia}|g c'> - e^{-ia}|h d'>) e^{-ib}|v> ]
PureState greenberger_predetector(double alpha, double beta);

// -- spin operators used by the scenarios ------------------------------------

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// Eigenprojectors {P(+1), P(-1)} of the in-plane spin component
/// cos(gamma) sigma_x + sin(gamma) sigma_y.
std::vector<ComplexMatrix> spin_axis_projectors(double gamma);

} // namespace nosig
