#pragma once

#include "nosig/channel.hpp"
#include "nosig/state.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>

namespace nosig {

/// A claimed state change: shared input, desired output, same bipartite
/// space. The first factor is the remote party whose statistics the sender
/// is trying to steer.
struct TargetTransform {
    PureState input;
    PureState output;
};

struct ObstructionReport {
    double marginal_distance = 0.0;       // max-abs gap between the remote marginals
    bool achievable_deterministically = false;
    std::string note;
};

/// Compares the remote (first-factor) marginal of input and output. Any
/// deterministic local action on the other factor leaves that marginal
/// fixed, so a nonzero gap is a proof of impossibility.
ObstructionReport marginal_obstruction(const TargetTransform& t);

/// The generic collapse transform on a dx x dy space:
///   input  = a1 |0>|0> + a2 |1>|1>
///   output = e^{i eta} (a1 |0> + e^{i gamma} a2 |1>) (x) |1>
/// with |a1|^2 + |a2|^2 = 1.
TargetTransform make_collapse_transform(Complex a1, Complex a2, double gamma, double eta = 0.0,
                                        int dx = 2, int dy = 2);

/// Deterministic random generation helpers. Gaussian variates come from a
/// hand-rolled Box-Muller over the mt19937_64 bit stream so results are
/// identical across standard libraries.
double gaussian(std::mt19937_64& rng);
ComplexMatrix gaussian_matrix(int rows, int cols, std::mt19937_64& rng);
PureState random_pure_state(const DimensionSpec& dims, std::mt19937_64& rng);
ComplexMatrix random_unitary(int dim, std::mt19937_64& rng);

/// Gaussian Kraus operators normalized to completeness by right-multiplying
/// (sum A^dag A)^{-1/2}.
KrausChannel random_deterministic_channel(int dim, int n_operators, std::mt19937_64& rng);

using ChannelSource = std::function<KrausChannel(int dim, std::mt19937_64& rng)>;

/// Worst first-factor marginal disturbance over `trials` random pairs of
/// (bipartite pure state, deterministic channel on the second factor).
/// Per-trial generators are seeded from (seed, trial counter), so the result
/// is a deterministic function of the arguments.
double fuzz_no_signaling(std::uint64_t seed, int trials, const DimensionSpec& dims);
double fuzz_no_signaling(std::uint64_t seed, int trials, const DimensionSpec& dims,
                         const ChannelSource& channel_source);

} // namespace nosig
