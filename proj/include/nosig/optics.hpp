#pragma once

#include "nosig/complex_matrix.hpp"
#include "nosig/state.hpp"

#include <vector>

namespace nosig {

/// 50/50 splitter with a pi/2 phase on reflection: (1/sqrt2) [[1, i], [i, 1]]
/// on an ordered mode pair.
struct BeamSplitter {
    ComplexMatrix matrix;
};

BeamSplitter beam_splitter();

/// diag(1, e^{i phase}) on a mode pair; the network element form phases a
/// single mode by e^{i phase}.
struct PhasePlate {
    double phase = 0.0;
    ComplexMatrix matrix;
};

PhasePlate phase_plate(double phase);

/// Free evolution of the shifter's energy eigenstates {u, v}; the evolution
/// operator is diag(e^{i theta}, e^{-i theta}) with theta = energy_split * time.
struct ShifterHamiltonian {
    double energy_split = 0.0;
    double time = 0.0;
};

double shifter_phase(const ShifterHamiltonian& h);

ComplexMatrix shifter_evolution(double theta);

/// Network elements address photon path modes through a flat index: the
/// k-th non-shifter factor (each a dim-2 path qubit) owns modes 2k and
/// 2k+1. cond_phase phases one photon mode by e^{i phase} when the factor
/// labeled "S" (stored in the {u, v} basis) holds the inserted state
/// |A> = (|u> + |v>)/sqrt2, and leaves |B> alone.
struct NetworkElement {
    enum class Kind { bs, phase, cond_phase };
    Kind kind = Kind::bs;
    int mode_a = 0;
    int mode_b = 0;     // bs only
    double phase = 0.0; // phase / cond_phase
};

using OpticalNetwork = std::vector<NetworkElement>;

NetworkElement bs_element(int mode_a, int mode_b);
NetworkElement phase_element(int mode, double phase);
NetworkElement cond_phase_element(int mode, double phase);

/// Sequential unitary application of every element; norm is preserved.
PureState propagate_network(const OpticalNetwork& net, const PureState& s);

/// U_H(theta) = diag(e^{i theta}, e^{-i theta}) applied to the factor
/// labeled "S".
PureState apply_shifter_evolution(const PureState& s, double theta);

// -- reference reconstruction of the pre-detector state ----------------------

/// Path-entangled pair with the shifter physically inserted:
/// (|a a'> + |b b'>)/sqrt2 (x) |A>, shifter amplitudes stored in {u, v}.
PureState greenberger_source_state();

/// Photon-1 interferometer segment: splitter, conditional pi phase on path
/// b coupled to the shifter, splitter.
OpticalNetwork greenberger_coupling_network();

/// Detection segment: the photon-1 port relabeling (pi phase plates around
/// a splitter) and the photon-2 output splitter.
OpticalNetwork greenberger_detection_network();

/// Full reconstruction: source, evolution by alpha, coupling segment,
/// evolution by beta, detection segment. Equals
/// greenberger_predetector(alpha, beta) up to a global phase.
PureState reconstruct_predetector(double alpha, double beta);

} // namespace nosig
