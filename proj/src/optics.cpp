#include "nosig/optics.hpp"

#include <cmath>
#include <stdexcept>

namespace nosig {

namespace {

const Complex kI(0.0, 1.0);

Complex phase_factor(double theta) { return Complex(std::cos(theta), std::sin(theta)); }

struct FactorLayout {
    std::vector<int> photon_factors; // positions of the dim-2 path factors
    int shifter_factor = -1;         // position of "S", or -1
    std::vector<int> strides;
};

FactorLayout layout_of(const DimensionSpec& dims) {
    FactorLayout lay;
    lay.strides.resize(dims.count());
    int s = 1;
    for (int i = dims.count() - 1; i >= 0; --i) {
        lay.strides[i] = s;
        s *= dims.dim(i);
    }
    for (int i = 0; i < dims.count(); ++i) {
        if (dims.label(i) == "S") {
            if (dims.dim(i) != 2)
                throw std::invalid_argument("shifter factor S must have dimension 2");
            lay.shifter_factor = i;
        } else {
            if (dims.dim(i) != 2)
                throw std::invalid_argument("photon path factors must have dimension 2");
            lay.photon_factors.push_back(i);
        }
    }
    return lay;
}

int factor_of_mode(const FactorLayout& lay, int mode) {
    const int k = mode / 2;
    if (mode < 0 || k >= static_cast<int>(lay.photon_factors.size()))
        throw std::invalid_argument("network element addresses a mode out of range");
    return lay.photon_factors[k];
}

// 2x2 unitary on one factor of the product space.
void apply_on_factor(CVec& amp, const FactorLayout& lay, int factor, const ComplexMatrix& u) {
    const int stride = lay.strides[factor];
    const int total = static_cast<int>(amp.size());
    for (int i = 0; i < total; ++i) {
        if ((i / stride) % 2 != 0)
            continue;
        const int j = i + stride;
        const Complex x = amp[i];
        const Complex y = amp[j];
        amp[i] = u(0, 0) * x + u(0, 1) * y;
        amp[j] = u(1, 0) * x + u(1, 1) * y;
    }
}

void apply_element(CVec& amp, const FactorLayout& lay, const NetworkElement& el) {
    switch (el.kind) {
    case NetworkElement::Kind::bs: {
        const int fa = factor_of_mode(lay, el.mode_a);
        const int fb = factor_of_mode(lay, el.mode_b);
        if (fa != fb || el.mode_a == el.mode_b)
            throw std::invalid_argument("beam splitter must pair the two modes of one factor");
        // the splitter matrix is symmetric, so the listed mode order is moot
        apply_on_factor(amp, lay, fa, beam_splitter().matrix);
        break;
    }
    case NetworkElement::Kind::phase: {
        const int f = factor_of_mode(lay, el.mode_a);
        const int m = el.mode_a % 2;
        ComplexMatrix u = ComplexMatrix::identity(2);
        u(m, m) = phase_factor(el.phase);
        apply_on_factor(amp, lay, f, u);
        break;
    }
    case NetworkElement::Kind::cond_phase: {
        if (lay.shifter_factor < 0)
            throw std::invalid_argument("cond_phase requires a factor labeled S");
        const int f = factor_of_mode(lay, el.mode_a);
        const int m = el.mode_a % 2;
        // I + (e^{i phase} - 1)|A><A| on the shifter, in {u, v} storage:
        // |A><A| = [[1,1],[1,1]]/2.
        const Complex g = 0.5 * (phase_factor(el.phase) - 1.0);
        ComplexMatrix s_op{{1.0 + g, g}, {g, 1.0 + g}};

        const int fs = lay.strides[lay.shifter_factor];
        const int fp = lay.strides[f];
        const int total = static_cast<int>(amp.size());
        for (int i = 0; i < total; ++i) {
            if ((i / fp) % 2 != m || (i / fs) % 2 != 0)
                continue;
            const int j = i + fs;
            const Complex x = amp[i];
            const Complex y = amp[j];
            amp[i] = s_op(0, 0) * x + s_op(0, 1) * y;
            amp[j] = s_op(1, 0) * x + s_op(1, 1) * y;
        }
        break;
    }
    }
}

} // namespace

BeamSplitter beam_splitter() {
    const double r = 1.0 / std::sqrt(2.0);
    return BeamSplitter{ComplexMatrix{{r, r * kI}, {r * kI, r}}};
}

PhasePlate phase_plate(double phase) {
    return PhasePlate{phase, ComplexMatrix{{1.0, 0.0}, {0.0, phase_factor(phase)}}};
}

double shifter_phase(const ShifterHamiltonian& h) { return h.energy_split * h.time; }

ComplexMatrix shifter_evolution(double theta) {
    return ComplexMatrix{{phase_factor(theta), 0.0}, {0.0, phase_factor(-theta)}};
}

NetworkElement bs_element(int mode_a, int mode_b) {
    return NetworkElement{NetworkElement::Kind::bs, mode_a, mode_b, 0.0};
}

NetworkElement phase_element(int mode, double phase) {
    return NetworkElement{NetworkElement::Kind::phase, mode, 0, phase};
}

NetworkElement cond_phase_element(int mode, double phase) {
    return NetworkElement{NetworkElement::Kind::cond_phase, mode, 0, phase};
}

PureState propagate_network(const OpticalNetwork& net, const PureState& s) {
    const FactorLayout lay = layout_of(s.dims);
    CVec amp = s.amplitudes;
    for (const auto& el : net)
        apply_element(amp, lay, el);
    return make_pure_state(s.dims, std::move(amp));
}

PureState apply_shifter_evolution(const PureState& s, double theta) {
    const FactorLayout lay = layout_of(s.dims);
    if (lay.shifter_factor < 0)
        throw std::invalid_argument("state has no factor labeled S");
    CVec amp = s.amplitudes;
    apply_on_factor(amp, lay, lay.shifter_factor, shifter_evolution(theta));
    return make_pure_state(s.dims, std::move(amp));
}

PureState greenberger_source_state() {
    DimensionSpec dims({{"p1", 2}, {"p2", 2}, {"S", 2}});
    // (|a a'> + |b b'>)/sqrt2 (x) |A>, with |A> = (|u> + |v>)/sqrt2
    CVec amp(8, Complex(0.0, 0.0));
    amp[0] = 0.5; // a a' u
    amp[1] = 0.5; // a a' v
    amp[6] = 0.5; // b b' u
    amp[7] = 0.5; // b b' v
    return make_pure_state(dims, std::move(amp));
}

OpticalNetwork greenberger_coupling_network() {
    const double pi = std::acos(-1.0);
    return {bs_element(0, 1), cond_phase_element(1, pi), bs_element(0, 1)};
}

OpticalNetwork greenberger_detection_network() {
    const double pi = std::acos(-1.0);
    // The pi-plate sandwich realizes the photon-1 port naming (swap after a
    // splitter equals phase-splitter-phase up to a global factor).
    return {phase_element(1, pi), bs_element(0, 1), phase_element(1, pi), bs_element(2, 3)};
}

PureState reconstruct_predetector(double alpha, double beta) {
    PureState s = greenberger_source_state();
    s = apply_shifter_evolution(s, alpha);
    s = propagate_network(greenberger_coupling_network(), s);
    s = apply_shifter_evolution(s, beta);
    s = propagate_network(greenberger_detection_network(), s);
    return s;
}

} // namespace nosig
