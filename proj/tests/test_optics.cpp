#include "nosig/optics.hpp"

#include "nosig/no_signaling.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace nosig;
using test_helpers::kPi;

namespace {

const Complex kI(0.0, 1.0);
const double kR = 1.0 / std::sqrt(2.0);

PureState single_photon_in(int mode) {
    CVec amp(2, Complex(0.0, 0.0));
    amp[mode] = 1.0;
    return make_pure_state(DimensionSpec({{"p1", 2}}), std::move(amp));
}

} // namespace

TEST_CASE("beam splitter matrix and unitarity") {
    const ComplexMatrix bs = beam_splitter().matrix;
    CHECK(std::abs(bs(0, 0) - Complex(kR, 0.0)) < 1e-15);
    CHECK(std::abs(bs(0, 1) - kI * kR) < 1e-15);
    CHECK(std::abs(bs(1, 0) - kI * kR) < 1e-15);
    CHECK(std::abs(bs(1, 1) - Complex(kR, 0.0)) < 1e-15);

    CHECK(max_abs_diff(adjoint(bs) * bs, ComplexMatrix::identity(2)) < 1e-12);
    CHECK(std::norm(bs(0, 0)) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::norm(bs(1, 0)) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("two successive splitters interfere into a swap") {
    const ComplexMatrix bs = beam_splitter().matrix;
    const ComplexMatrix expected{{0.0, kI}, {kI, 0.0}};
    CHECK(max_abs_diff(bs * bs, expected) < 1e-14);
}

TEST_CASE("phase plate") {
    const PhasePlate plate = phase_plate(0.9);
    CHECK(max_abs_diff(adjoint(plate.matrix) * plate.matrix, ComplexMatrix::identity(2)) < 1e-14);
    CHECK(std::abs(plate.matrix(0, 0) - Complex(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(plate.matrix(1, 1) - Complex(std::cos(0.9), std::sin(0.9))) < 1e-15);

    // the network element phases exactly the addressed mode
    const PureState out =
        propagate_network({phase_element(1, 0.9)},
                          make_pure_state(DimensionSpec({{"p1", 2}}), {kR, kR}));
    CHECK(std::abs(out.amplitudes[0] - Complex(kR, 0.0)) < 1e-14);
    CHECK(std::abs(out.amplitudes[1] - kR * Complex(std::cos(0.9), std::sin(0.9))) < 1e-14);
}

TEST_CASE("shifter evolution phases") {
    CHECK(shifter_phase({0.0, 5.0}) == 0.0);
    CHECK(shifter_phase({kPi, 1.0}) == doctest::Approx(kPi));

    const double beta = 0.83;
    const CVec evolved = mat_vec(shifter_evolution(beta), {kR, kR});
    CHECK(std::abs(evolved[0] - kR * Complex(std::cos(beta), std::sin(beta))) < 1e-14);
    CHECK(std::abs(evolved[1] - kR * Complex(std::cos(beta), -std::sin(beta))) < 1e-14);
}

TEST_CASE("network propagation basics") {
    SUBCASE("empty network is the identity") {
        const PureState s = single_photon_in(0);
        const PureState out = propagate_network({}, s);
        CHECK(phase_aligned_max_diff(out.amplitudes, s.amplitudes) == 0.0);
    }

    SUBCASE("one splitter on a photon entering mode a") {
        const PureState out = propagate_network({bs_element(0, 1)}, single_photon_in(0));
        CHECK(std::abs(out.amplitudes[0] - Complex(kR, 0.0)) < 1e-14);
        CHECK(std::abs(out.amplitudes[1] - kI * kR) < 1e-14);
    }
}

TEST_CASE("conditional phase element") {
    const DimensionSpec dims({{"p1", 2}, {"S", 2}});
    const OpticalNetwork net{cond_phase_element(1, kPi)};
    // shifter stored in {u, v}: inserted |A> = (1, 1)/sqrt2, removed |B> = (1, -1)/sqrt2

    SUBCASE("inserted shifter flips the coupled mode's sign") {
        const PureState in = make_pure_state(dims, {0.0, 0.0, kR, kR}); // |b> (x) |A>
        const PureState out = propagate_network(net, in);
        CHECK(std::abs(out.amplitudes[2] + kR) < 1e-14);
        CHECK(std::abs(out.amplitudes[3] + kR) < 1e-14);
    }

    SUBCASE("removed shifter does nothing") {
        const PureState in = make_pure_state(dims, {0.0, 0.0, kR, -kR}); // |b> (x) |B>
        const PureState out = propagate_network(net, in);
        CHECK(std::abs(out.amplitudes[2] - kR) < 1e-14);
        CHECK(std::abs(out.amplitudes[3] + kR) < 1e-14);
    }

    SUBCASE("uncoupled mode is untouched either way") {
        const PureState in = make_pure_state(dims, {kR, kR, 0.0, 0.0}); // |a> (x) |A>
        const PureState out = propagate_network(net, in);
        CHECK(phase_aligned_max_diff(out.amplitudes, in.amplitudes) < 1e-14);
    }

    SUBCASE("a shifter superposition entangles with the coupled photon") {
        // |b> (x) |u>: the u state is an equal mix of inserted and removed
        const PureState in = make_pure_state(dims, {0.0, 0.0, 1.0, 0.0});
        const PureState out = propagate_network(net, in);
        // expected -|b>(x)|v>: u/v swap with sign under the pi coupling
        CHECK(std::abs(out.amplitudes[2]) < 1e-14);
        CHECK(std::abs(out.amplitudes[3] + 1.0) < 1e-14);
    }
}

TEST_CASE("network reconstruction matches the pre-detector state") {
    for (double alpha : {0.0, 0.5, 1.9}) {
        for (double beta : {0.0, -0.8, 2.4}) {
            const PureState rebuilt = reconstruct_predetector(alpha, beta);
            const PureState target = greenberger_predetector(alpha, beta);
            CHECK(phase_aligned_max_diff(target.amplitudes, rebuilt.amplitudes) < 1e-10);
        }
    }
}

TEST_CASE("random networks preserve norm and act linearly") {
    auto gen = test_helpers::rng(51);
    const DimensionSpec dims({{"p1", 2}, {"p2", 2}, {"S", 2}});

    auto random_network = [&gen]() {
        OpticalNetwork net;
        for (int i = 0; i < 12; ++i) {
            switch (gen() % 3) {
            case 0:
                net.push_back(bs_element(gen() % 2 ? 2 : 0, gen() % 2 ? 3 : 1));
                break;
            case 1:
                net.push_back(phase_element(static_cast<int>(gen() % 4),
                                            static_cast<double>(gen() % 628) / 100.0));
                break;
            default:
                net.push_back(cond_phase_element(static_cast<int>(gen() % 4),
                                                 static_cast<double>(gen() % 628) / 100.0));
                break;
            }
        }
        return net;
    };

    for (int trial = 0; trial < 20; ++trial) {
        OpticalNetwork net = random_network();
        // fix bs pairs to live inside one factor
        for (auto& el : net)
            if (el.kind == NetworkElement::Kind::bs) {
                const int factor = static_cast<int>(gen() % 2);
                el.mode_a = 2 * factor;
                el.mode_b = 2 * factor + 1;
            }

        const PureState x = random_pure_state(dims, gen);
        const PureState y = random_pure_state(dims, gen);
        const PureState ux = propagate_network(net, x);
        const PureState uy = propagate_network(net, y);
        CHECK(std::abs(vec_norm(ux.amplitudes) - 1.0) < 1e-10);

        // linearity: U(c1 x + c2 y) == c1 Ux + c2 Uy
        const Complex c1(0.6, -0.2), c2(0.3, 0.7);
        CVec combo(static_cast<size_t>(dims.total()));
        for (size_t i = 0; i < combo.size(); ++i)
            combo[i] = c1 * x.amplitudes[i] + c2 * y.amplitudes[i];
        const double norm = vec_norm(combo);
        for (auto& z : combo)
            z /= norm;
        const PureState u_combo = propagate_network(net, make_pure_state(dims, combo));
        for (size_t i = 0; i < combo.size(); ++i) {
            const Complex lin = c1 * ux.amplitudes[i] + c2 * uy.amplitudes[i];
            CHECK(std::abs(norm * u_combo.amplitudes[i] - lin) < 1e-10);
        }
    }
}

TEST_CASE("network error paths") {
    const PureState photon = single_photon_in(0);
    CHECK_THROWS_AS(propagate_network({bs_element(0, 2)}, photon), std::invalid_argument);
    CHECK_THROWS_AS(propagate_network({cond_phase_element(0, kPi)}, photon),
                    std::invalid_argument);

    const DimensionSpec two_photons({{"p1", 2}, {"p2", 2}});
    const PureState pair =
        make_pure_state(two_photons, {1.0, 0.0, 0.0, 0.0});
    CHECK_THROWS_AS(propagate_network({bs_element(1, 2)}, pair), std::invalid_argument);

    const DimensionSpec qutrit({{"p1", 3}});
    CHECK_THROWS_AS(propagate_network({}, make_pure_state(qutrit, {1.0, 0.0, 0.0})),
                    std::invalid_argument);
}
