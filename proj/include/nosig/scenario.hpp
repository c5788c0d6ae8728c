#pragma once

#include "nosig/channel.hpp"
#include "nosig/no_signaling.hpp"
#include "nosig/state.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nosig {

/// End-to-end result of one scenario run: named inputs, the probabilities
/// and marginals the scenario predicts, and pass/fail verdicts for the
/// invariants it checks.
struct ScenarioReport {
    std::string name;
    std::map<std::string, double> params;
    std::map<std::string, double> probabilities;
    std::map<std::string, DensityOperator> marginals;
    std::map<std::string, bool> verdicts;
};

bool all_verdicts_pass(const ScenarioReport& report);

/// Interferometer scenario: build the pre-detector state, apply the shifter
/// collapse map linearly, check it reproduces the cosine-weighted detector
/// state, and report the detector distribution plus the success probability
/// of the honest selective completion. Throws std::domain_error when both
/// cosines vanish (the map annihilates the state).
ScenarioReport run_greenberger(double alpha, double beta, double gamma);

/// Spin-pair scenario: the same collapse map on one side of the singlet
/// factorizes it; the remote spin component along (cos g, sin g, 0) becomes
/// certain, which the marginal obstruction shows no physical map can do.
ScenarioReport run_epr_bohm(double gamma);

/// Spin-path coupling scenario: a genuine unitary "rotation on one branch"
/// only relocates entanglement; every remote spin statistic stays exactly
/// as the singlet's.
ScenarioReport run_stern_gerlach(double gamma);

/// Measurement-erasure scenario on the singlet: non-selective application
/// of a complete projector basis on one side leaves the remote marginal
/// unchanged; selecting an outcome changes it, but the outcome-weighted
/// mixture restores the original.
ScenarioReport run_erasure(const std::vector<ComplexMatrix>& basis,
                           std::optional<int> selective_outcome);

} // namespace nosig
