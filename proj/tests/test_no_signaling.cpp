#include "nosig/no_signaling.hpp"

#include "nosig/hermitian_eigen.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace nosig;
using test_helpers::kPi;

namespace {

const double kR = 1.0 / std::sqrt(2.0);

} // namespace

TEST_CASE("marginal obstruction verdicts") {
    SUBCASE("a product input leaves nothing to signal with") {
        const ObstructionReport r =
            marginal_obstruction(make_collapse_transform(1.0, 0.0, 0.7));
        CHECK(r.marginal_distance < 1e-12);
        CHECK(r.achievable_deterministically);
    }

    SUBCASE("the balanced entangled input gives distance one half") {
        for (double gamma : {0.0, 0.9, 4.1}) {
            const ObstructionReport r =
                marginal_obstruction(make_collapse_transform(kR, kR, gamma));
            CHECK(r.marginal_distance == doctest::Approx(0.5).epsilon(1e-12));
            CHECK_FALSE(r.achievable_deterministically);
        }
    }

    SUBCASE("a local unitary image is always achievable") {
        auto gen = test_helpers::rng(61);
        const DimensionSpec dims({{"X", 2}, {"Y", 2}});
        for (int trial = 0; trial < 10; ++trial) {
            const PureState in = random_pure_state(dims, gen);
            const ComplexMatrix u = random_unitary(2, gen);
            const CVec out = mat_vec(kron(ComplexMatrix::identity(2), u), in.amplitudes);
            const ObstructionReport r =
                marginal_obstruction(TargetTransform{in, make_pure_state(dims, out)});
            CHECK(r.marginal_distance < 1e-10);
            CHECK(r.achievable_deterministically);
        }
    }

    SUBCASE("every properly entangled weight obstructs, on a 16 x 8 grid") {
        for (int i = 1; i < 16; ++i) {
            const double a1 = i / 16.0;
            const double a2 = std::sqrt(1.0 - a1 * a1);
            for (int j = 0; j < 8; ++j) {
                const double gamma = 2.0 * kPi * j / 8.0;
                const ObstructionReport r =
                    marginal_obstruction(make_collapse_transform(a1, a2, gamma));
                CHECK_FALSE(r.achievable_deterministically);
                CHECK(r.marginal_distance == doctest::Approx(a1 * a2).epsilon(1e-10));
            }
        }
    }

    SUBCASE("mismatched spaces are rejected") {
        const TargetTransform bad{singlet(), greenberger_predetector(0.0, 0.0)};
        CHECK_THROWS_AS(marginal_obstruction(bad), std::invalid_argument);
    }
}

TEST_CASE("fuzzer basics") {
    const DimensionSpec dims({{"X", 2}, {"Y", 2}});

    SUBCASE("an identity channel cannot move anything") {
        const ChannelSource identity_source = [](int dim, std::mt19937_64&) {
            return make_kraus_channel({ComplexMatrix::identity(dim)},
                                      ChannelKind::deterministic);
        };
        CHECK(fuzz_no_signaling(123, 1, dims, identity_source) <= 1e-12);
    }

    SUBCASE("random channels stay below tolerance") {
        CHECK(fuzz_no_signaling(3, 300, dims) <= 1e-9);
        CHECK(fuzz_no_signaling(4, 100, DimensionSpec({{"X", 2}, {"Y", 3}})) <= 1e-9);
        CHECK(fuzz_no_signaling(5, 100, DimensionSpec({{"X", 4}, {"Y", 4}})) <= 1e-9);
    }

    SUBCASE("the same seed reproduces the same result bit for bit") {
        const double first = fuzz_no_signaling(99, 50, dims);
        const double second = fuzz_no_signaling(99, 50, dims);
        CHECK(first == second);
        CHECK(fuzz_no_signaling(100, 50, dims) >= 0.0);
    }

    SUBCASE("argument validation") {
        CHECK_THROWS_AS(fuzz_no_signaling(0, 0, dims), std::invalid_argument);
        CHECK_THROWS_AS(
            fuzz_no_signaling(0, 1, DimensionSpec({{"X", 2}, {"Y", 2}, {"Z", 2}})),
            std::invalid_argument);
    }
}

TEST_CASE("outcome-weighted selective marginals reconcile with the original") {
    auto gen = test_helpers::rng(62);
    const DimensionSpec dims({{"X", 2}, {"Y", 2}});
    for (int trial = 0; trial < 20; ++trial) {
        const DensityOperator rho = test_helpers::random_density(dims, gen);
        const ComplexMatrix u = random_unitary(2, gen);

        // rank-one projective measurement from the unitary's columns
        ComplexMatrix mixture(2, 2);
        for (int outcome = 0; outcome < 2; ++outcome) {
            CVec column(2);
            for (int r = 0; r < 2; ++r)
                column[r] = u(r, outcome);
            const KrausChannel sel =
                make_kraus_channel({outer(column, column)}, ChannelKind::probabilistic);
            const SelectiveResult res = apply_selective(sel, rho, "Y");
            mixture = mixture + res.probability * reduced_state(res.state, {"X"}).matrix;
        }
        const DensityOperator before = reduced_state(rho, {"X"});
        CHECK(max_abs_diff(mixture, before.matrix) < 1e-9);
    }
}

TEST_CASE("random deterministic channels really are channels") {
    auto gen = test_helpers::rng(63);
    for (int dim : {2, 3, 4}) {
        for (int n_ops = 1; n_ops <= 4; ++n_ops) {
            const KrausChannel ch = random_deterministic_channel(dim, n_ops, gen);
            ComplexMatrix sum(dim, dim);
            for (const auto& a : ch.operators)
                sum = sum + adjoint(a) * a;
            CHECK(max_abs_diff(sum, ComplexMatrix::identity(dim)) < 1e-10);
        }
    }
}
