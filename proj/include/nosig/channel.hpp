#pragma once

#include "nosig/complex_matrix.hpp"
#include "nosig/state.hpp"

#include <functional>
#include <string>
#include <vector>

namespace nosig {

inline constexpr double kChannelTol = 1e-9;

enum class ChannelKind { deterministic, probabilistic };

/// Kraus-form local operation. Deterministic channels satisfy
/// sum A_i^dag A_i = I; probabilistic ones satisfy sum A_i^dag A_i <= I and
/// succeed with probability p = sum Tr(A_i^dag A_i rho).
struct KrausChannel {
    int input_dim = 0;
    int output_dim = 0;
    std::vector<ComplexMatrix> operators;
    ChannelKind kind = ChannelKind::deterministic;
};

/// Shape-checked constructor. Does not require the completeness relation to
/// hold: classification of ill-formed channels is part of the workflow, so
/// validity is reported by validate_channel rather than enforced here.
KrausChannel make_kraus_channel(std::vector<ComplexMatrix> operators, ChannelKind kind);

struct ChannelReport {
    bool trace_preserving = false;
    bool sub_normalized = false;
    bool completely_positive = false;
    double min_choi_eigenvalue = 0.0;
    double completeness_residual = 0.0; // max-abs of sum A^dag A - I
};

/// The nonunitary shifter transformation |u> -> |u>, |v> -> e^{ig}|u>.
/// Kept as a raw operator on purpose: wrapped in a deterministic
/// KrausChannel it must fail validation, and that failure is load-bearing.
struct GreenbergerMap {
    double gamma = 0.0;
    ComplexMatrix matrix; // 2x2 in the {u, v} basis
};

/// A linear map on matrices, general enough to describe non-CP maps
/// (e.g. transposition) that have no Kraus form.
struct MatrixMap {
    int input_dim = 0;
    int output_dim = 0;
    std::function<ComplexMatrix(const ComplexMatrix&)> apply;

    static MatrixMap from_kraus(const std::vector<ComplexMatrix>& operators);
};

struct CpResult {
    bool completely_positive = false;
    double min_choi_eigenvalue = 0.0;
};

struct SelectiveResult {
    DensityOperator state;
    double probability = 0.0;
};

/// rho_bar = sum_i (I (x) A_i) rho (I (x) A_i^dag) with the identity on all
/// factors other than `party`. The channel must be deterministic and
/// complete on the party's dimension.
DensityOperator apply_deterministic(const KrausChannel& ch, const DensityOperator& rho,
                                    const std::string& party);

/// Conditional state and success probability of a probabilistic operation;
/// throws when the success probability vanishes (below 1e-12).
SelectiveResult apply_selective(const KrausChannel& ch, const DensityOperator& rho,
                                const std::string& party);

ChannelReport validate_channel(const KrausChannel& ch);

/// Choi matrix sum_jk E_jk (x) Map(E_jk) over the input-dim matrix units.
ComplexMatrix choi_matrix(const std::vector<ComplexMatrix>& kraus_operators);
ComplexMatrix choi_matrix(const MatrixMap& map);

/// CP iff the minimum Choi eigenvalue is >= -1e-9.
CpResult is_completely_positive(const std::vector<ComplexMatrix>& kraus_operators);
CpResult is_completely_positive(const MatrixMap& map);

GreenbergerMap greenberger_map(double gamma);

/// Deterministic two-operator channel {k, B} with B the principal square
/// root of I - k^dag k. Requires k^dag k <= I within 1e-9.
KrausChannel complete_to_deterministic(const ComplexMatrix& k);

/// Mixture-affineness defect of the normalized rule
/// N(rho) = T rho T^dag / Tr(T rho T^dag):
///   || N(w rho1 + (1-w) rho2) - w N(rho1) - (1-w) N(rho2) ||_maxabs.
/// Throws if T annihilates either input or the mixture.
double linearity_test(const ComplexMatrix& t, const DensityOperator& rho1,
                      const DensityOperator& rho2, double w);

} // namespace nosig
