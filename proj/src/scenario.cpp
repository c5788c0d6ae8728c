#include "nosig/scenario.hpp"

#include "nosig/hermitian_eigen.hpp"

#include <cmath>
#include <stdexcept>

namespace nosig {

namespace {

Complex phase_factor(double theta) { return Complex(std::cos(theta), std::sin(theta)); }

CVec normalized(CVec v) {
    const double n = vec_norm(v);
    for (auto& z : v)
        z /= n;
    return v;
}

DensityOperator remote_spin_marginal(const PureState& s) {
    return reduced_state(pure_to_density(s), {s.dims.label(0)});
}

std::vector<double> three_basis_probabilities(const DensityOperator& rho,
                                              const std::string& party) {
    std::vector<double> out;
    for (const ComplexMatrix& sigma : {pauli_x(), pauli_y(), pauli_z()}) {
        const ComplexMatrix id = ComplexMatrix::identity(2);
        const ComplexMatrix plus = embed_operator(rho.dims, party, 0.5 * (id + sigma));
        const ComplexMatrix minus = embed_operator(rho.dims, party, 0.5 * (id - sigma));
        const std::vector<double> p = measurement_probabilities(rho, {plus, minus});
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

} // namespace

bool all_verdicts_pass(const ScenarioReport& report) {
    for (const auto& [name, ok] : report.verdicts)
        if (!ok)
            return false;
    return true;
}

ScenarioReport run_greenberger(double alpha, double beta, double gamma) {
    const double c_hd = std::cos(alpha + beta - gamma / 2.0);
    const double c_gc = std::cos(beta - alpha - gamma / 2.0);
    const double z = c_hd * c_hd + c_gc * c_gc;
    if (z < 1e-12)
        throw std::domain_error(
            "degenerate parameters: the shifter map annihilates the pre-detector state");

    const PureState pre = greenberger_predetector(alpha, beta);
    const ComplexMatrix t_full =
        embed_operator(pre.dims, "S", greenberger_map(gamma).matrix);
    const CVec image = mat_vec(t_full, pre.amplitudes);

    // cosine-weighted detector state the collapse is supposed to produce
    CVec predicted(8, Complex(0.0, 0.0));
    const Complex half_phase = phase_factor(gamma / 2.0);
    predicted[2] = -half_phase * c_hd; // h d' u
    predicted[4] = half_phase * c_gc;  // g c' u
    const double match = phase_aligned_max_diff(image, predicted);

    const PureState collapsed = make_pure_state(pre.dims, normalized(image));
    const DensityOperator rho_collapsed = pure_to_density(collapsed);

    double p_hd = 0.0, p_gc = 0.0;
    for (int s = 0; s < 2; ++s) {
        p_hd += std::norm(collapsed.amplitudes[2 + s]); // (h, d', s)
        p_gc += std::norm(collapsed.amplitudes[4 + s]); // (g, c', s)
    }

    // honest selective version: Kraus operator T/sqrt(2)
    const KrausChannel selective = make_kraus_channel(
        {Complex(1.0 / std::sqrt(2.0), 0.0) * greenberger_map(gamma).matrix},
        ChannelKind::probabilistic);
    const SelectiveResult sel = apply_selective(selective, pure_to_density(pre), "S");

    const KrausChannel illegal =
        make_kraus_channel({greenberger_map(gamma).matrix}, ChannelKind::deterministic);
    const ChannelReport channel_report = validate_channel(illegal);

    ScenarioReport report;
    report.name = "greenberger";
    report.params = {{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}};
    report.probabilities = {{"P(h,d')", p_hd}, {"P(g,c')", p_gc}, {"p_success", sel.probability}};
    report.marginals = {{"photon_pair", reduced_state(rho_collapsed, {"p1", "p2"})}};
    report.verdicts = {
        {"collapsed_state_matches_prediction", match <= 1e-10},
        {"deterministic_version_rejected", !channel_report.trace_preserving},
        {"map_is_completely_positive", channel_report.completely_positive},
    };
    return report;
}

ScenarioReport run_epr_bohm(double gamma) {
    const PureState s = singlet();
    // spin-side collapse: |down> -> |down>, |up> -> e^{ig}|down>
    const ComplexMatrix t_spin{{0.0, 0.0}, {phase_factor(gamma), 1.0}};
    const CVec image = mat_vec(embed_operator(s.dims, "s2", t_spin), s.amplitudes);

    const double r = 1.0 / std::sqrt(2.0);
    CVec predicted(4, Complex(0.0, 0.0));
    predicted[1] = r;                         // up down
    predicted[3] = -r * phase_factor(gamma);  // down down
    const double match = phase_aligned_max_diff(image, predicted);

    const PureState collapsed = make_pure_state(s.dims, normalized(image));

    const std::vector<ComplexMatrix> axis = spin_axis_projectors(gamma);
    const std::vector<ComplexMatrix> embedded{embed_operator(s.dims, "s1", axis[0]),
                                              embed_operator(s.dims, "s1", axis[1])};
    const double p_minus_with =
        measurement_probabilities(pure_to_density(collapsed), embedded)[1];
    const double p_minus_without = measurement_probabilities(pure_to_density(s), embedded)[1];

    const ObstructionReport obstruction =
        marginal_obstruction(TargetTransform{s, collapsed});

    ScenarioReport report;
    report.name = "epr-bohm";
    report.params = {{"gamma", gamma}};
    report.probabilities = {{"P(-1|map)", p_minus_with}, {"P(-1|idle)", p_minus_without}};
    report.marginals = {{"remote_before", remote_spin_marginal(s)},
                        {"remote_after_map", remote_spin_marginal(collapsed)}};
    report.verdicts = {
        {"collapsed_state_matches_prediction", match <= 1e-10},
        {"certain_outcome_after_map", std::abs(p_minus_with - 1.0) <= 1e-10},
        {"unbiased_without_map", std::abs(p_minus_without - 0.5) <= 1e-10},
        {"steering_requires_unphysical_map", !obstruction.achievable_deterministically},
    };
    return report;
}

ScenarioReport run_stern_gerlach(double gamma) {
    const PureState s = singlet();

    // spin-to-path coupling: append a position factor, spin up propagating
    // upward and spin down downward (position basis ordered {down, up})
    DimensionSpec dims({{"s1", 2}, {"s2", 2}, {"m2", 2}});
    CVec coupled(8, Complex(0.0, 0.0));
    for (int i1 = 0; i1 < 2; ++i1)
        for (int i2 = 0; i2 < 2; ++i2)
            coupled[4 * i1 + 2 * i2 + (1 - i2)] = s.amplitudes[2 * i1 + i2];

    // branch rotation confined to the upward path, completed to a unitary:
    // |up,UP> -> e^{ig}|down,UP>, |down,UP> -> -e^{-ig}|up,UP>
    ComplexMatrix branch(4, 4);
    branch(0, 0) = 1.0;
    branch(2, 2) = 1.0;
    branch(3, 1) = phase_factor(gamma);
    branch(1, 3) = -phase_factor(-gamma);
    const CVec rotated = mat_vec(kron(ComplexMatrix::identity(2), branch), coupled);

    const double r = 1.0 / std::sqrt(2.0);
    CVec predicted(8, Complex(0.0, 0.0));
    predicted[2] = r;                        // up_1, down_2, path-down
    predicted[7] = -r * phase_factor(gamma); // down_1, down_2, path-up
    const double match = phase_aligned_max_diff(rotated, predicted);

    const PureState final_state = make_pure_state(dims, rotated);
    const DensityOperator rho_final = pure_to_density(final_state);

    const DensityOperator remote_before = remote_spin_marginal(s);
    const DensityOperator remote_after = reduced_state(rho_final, {"s1"});
    const double marginal_shift = max_abs_diff(remote_before.matrix, remote_after.matrix);

    const std::vector<double> p_after = three_basis_probabilities(rho_final, "s1");
    const std::vector<double> p_singlet =
        three_basis_probabilities(pure_to_density(s), "s1");
    double stat_gap = 0.0;
    for (size_t i = 0; i < p_after.size(); ++i)
        stat_gap = std::max(stat_gap, std::abs(p_after[i] - p_singlet[i]));

    // the entanglement has moved to (spin 1, path 2): that block is pure and
    // its spin-1 marginal still has rank 2
    const DensityOperator spin_path = reduced_state(rho_final, {"s1", "m2"});
    const double purity = trace(spin_path.matrix * spin_path.matrix).real();
    const std::vector<double> schmidt =
        hermitian_eigenvalues(reduced_state(spin_path, {"s1"}).matrix);
    const bool relocated = std::abs(purity - 1.0) <= 1e-9 && schmidt.front() > 1e-6;

    ScenarioReport report;
    report.name = "stern-gerlach";
    report.params = {{"gamma", gamma}};
    report.probabilities = {{"P(x,+1)", p_after[0]}, {"P(x,-1)", p_after[1]},
                            {"P(y,+1)", p_after[2]}, {"P(y,-1)", p_after[3]},
                            {"P(z,+1)", p_after[4]}, {"P(z,-1)", p_after[5]}};
    report.marginals = {{"remote_before", remote_before}, {"remote_after", remote_after}};
    report.verdicts = {
        {"matches_prediction", match <= 1e-10},
        {"remote_marginal_unchanged", marginal_shift <= 1e-10},
        {"remote_statistics_match_singlet", stat_gap <= 1e-10},
        {"entanglement_relocated_to_path", relocated},
    };
    return report;
}

ScenarioReport run_erasure(const std::vector<ComplexMatrix>& basis,
                           std::optional<int> selective_outcome) {
    const PureState s = singlet();
    const DensityOperator rho = pure_to_density(s);
    const DensityOperator remote_before = remote_spin_marginal(s);

    if (basis.empty())
        throw std::invalid_argument("projector basis must be nonempty");
    ComplexMatrix sum(2, 2);
    for (const auto& p : basis) {
        if (!p.is_square() || p.rows() != 2)
            throw std::invalid_argument("projectors must act on the measured factor");
        if (!is_hermitian(p, 1e-9) || max_abs_diff(p * p, p) > 1e-9)
            throw std::invalid_argument("basis elements must be Hermitian projectors");
        sum = sum + p;
    }
    if (max_abs_diff(sum, ComplexMatrix::identity(2)) > 1e-9)
        throw std::invalid_argument("projector basis must be complete (tolerance 1e-9)");

    const KrausChannel nonselective = make_kraus_channel(basis, ChannelKind::deterministic);
    const DensityOperator rho_ns = apply_deterministic(nonselective, rho, "s2");
    const DensityOperator remote_ns = reduced_state(rho_ns, {"s1"});

    ScenarioReport report;
    report.name = "erasure";
    report.probabilities = {};
    report.marginals = {{"remote_before", remote_before}, {"remote_nonselective", remote_ns}};

    // outcome-weighted mixture of conditional remote marginals
    ComplexMatrix mixture(2, 2);
    std::vector<double> outcome_probs;
    for (size_t i = 0; i < basis.size(); ++i) {
        const double p =
            trace(embed_operator(rho.dims, "s2", basis[i]) * rho.matrix).real();
        outcome_probs.push_back(p);
        report.probabilities["p(outcome " + std::to_string(i) + ")"] = p;
        if (p <= 1e-12)
            continue;
        const KrausChannel one =
            make_kraus_channel({basis[i]}, ChannelKind::probabilistic);
        const SelectiveResult sel = apply_selective(one, rho, "s2");
        mixture = mixture + p * reduced_state(sel.state, {"s1"}).matrix;
    }

    report.verdicts = {
        {"nonselective_marginal_unchanged",
         max_abs_diff(remote_ns.matrix, remote_before.matrix) <= 1e-10},
        {"outcome_mixture_restores_marginal",
         max_abs_diff(mixture, remote_before.matrix) <= 1e-10},
    };

    if (selective_outcome) {
        const int k = *selective_outcome;
        if (k < 0 || k >= static_cast<int>(basis.size()))
            throw std::invalid_argument("selected outcome index out of range");
        if (outcome_probs[k] <= 1e-12)
            throw std::domain_error("selected outcome has zero probability");
        const KrausChannel one = make_kraus_channel({basis[k]}, ChannelKind::probabilistic);
        const SelectiveResult sel = apply_selective(one, rho, "s2");
        report.params["outcome"] = static_cast<double>(k);
        report.probabilities["p_selected"] = sel.probability;
        report.marginals["remote_conditional"] = reduced_state(sel.state, {"s1"});
    }
    return report;
}

} // namespace nosig
